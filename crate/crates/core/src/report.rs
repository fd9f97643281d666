//! Pass/fail bookkeeping shared by every checker.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::algebra::Elem;
use crate::json::element_to_value;
use crate::series::MultiSeries;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationCount {
    pub total: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub relation: String,
    pub indices: Vec<i64>,
    /// LHS − RHS, or a short description for structural checks
    pub residual: Value,
}

/// Outcome of a batch of exact identity checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerifyReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub relations: BTreeMap<String, RelationCount>,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn count(&mut self, relation: &str, pass: bool) {
        let c = self.relations.entry(relation.to_string()).or_default();
        c.total += 1;
        self.total += 1;
        if pass {
            self.passed += 1;
        } else {
            c.failed += 1;
            self.failed += 1;
        }
    }

    /// Records `residual == 0`.
    pub fn check(&mut self, relation: &str, indices: &[i64], residual: &Elem) -> bool {
        let pass = residual.is_zero();
        self.count(relation, pass);
        if !pass {
            self.failures.push(Failure {
                relation: relation.to_string(),
                indices: indices.to_vec(),
                residual: element_to_value(residual),
            });
        }
        pass
    }

    /// Records a series identity as one check; a failure lists every
    /// nonzero coefficient with its exponents appended to the indices.
    pub fn check_series(&mut self, relation: &str, indices: &[i64], residual: &MultiSeries) -> bool {
        let pass = residual.is_zero();
        self.count(relation, pass);
        for (e, c) in residual.coeffs() {
            let mut idx = indices.to_vec();
            idx.extend(e.iter().map(|&x| x as i64));
            self.failures.push(Failure {
                relation: relation.to_string(),
                indices: idx,
                residual: element_to_value(c),
            });
        }
        pass
    }

    /// Records a structural check that has no residual element.
    pub fn check_that(&mut self, relation: &str, indices: &[i64], pass: bool, detail: &str) -> bool {
        self.count(relation, pass);
        if !pass {
            self.failures.push(Failure {
                relation: relation.to_string(),
                indices: indices.to_vec(),
                residual: Value::String(detail.to_string()),
            });
        }
        pass
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.total += other.total;
        self.passed += other.passed;
        self.failed += other.failed;
        for (k, v) in other.relations {
            let c = self.relations.entry(k).or_default();
            c.total += v.total;
            c.failed += v.failed;
        }
        self.failures.extend(other.failures);
    }

    /// Canonical failure order, independent of how checks were scheduled.
    pub fn finish(mut self) -> Self {
        self.failures.sort_by(|a, b| {
            (&a.relation, &a.indices)
                .cmp(&(&b.relation, &b.indices))
                .then_with(|| a.residual.to_string().cmp(&b.residual.to_string()))
        });
        self
    }

    /// Relabels every relation as `prefix/relation`.
    pub fn prefixed(self, prefix: &str) -> Self {
        VerifyReport {
            total: self.total,
            passed: self.passed,
            failed: self.failed,
            relations: self.relations.into_iter().map(|(k, v)| (format!("{prefix}/{k}"), v)).collect(),
            failures: self
                .failures
                .into_iter()
                .map(|mut f| {
                    f.relation = format!("{prefix}/{}", f.relation);
                    f
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;

    #[test]
    fn merge_is_order_independent_after_finish() {
        let mut a = VerifyReport::new();
        a.check("x", &[2], &scalar(1));
        a.check("x", &[1], &Elem::zero());
        let mut b = VerifyReport::new();
        b.check("w", &[5], &scalar(3));
        let mut ab = a.clone();
        ab.merge(b.clone());
        let mut ba = b;
        ba.merge(a);
        assert_eq!(ab.clone().finish(), ba.finish());
        assert_eq!((ab.total, ab.passed, ab.failed), (3, 1, 2));
    }
}
