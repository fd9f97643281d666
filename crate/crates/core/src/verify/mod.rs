//! Exhaustive checks of the relations among the parabolic generators
//! `D`, `D'`, `E`, `F` for a fixed composition and truncation order.
//!
//! Coefficient identities are checked for every order that stays within
//! the truncation. Series identities are checked as bi- or trivariate
//! series after clearing denominators, on every coefficient known at `K`.

mod ctx;
mod lemmas;
mod levi;
mod presentation;
mod series_rel;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{MonomialOrder, Yangian};
use crate::error::{Error, Result};
use crate::gauss::{gauss_blocks, Composition, GaussData};
use crate::report::VerifyReport;

pub(crate) use ctx::Ctx;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Levi,
    Even,
    Mn11,
    M2n1,
    Thm73,
    Lemma72,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Levi, Suite::Even, Suite::Mn11, Suite::M2n1, Suite::Thm73, Suite::Lemma72];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Levi => "levi",
            Suite::Even => "even",
            Suite::Mn11 => "mn11",
            Suite::M2n1 => "m2n1",
            Suite::Thm73 => "thm73",
            Suite::Lemma72 => "lemma72",
            Suite::All => "all",
        }
    }

    /// Whether the suite's shape precondition holds for `mu`.
    pub fn applies_to(self, mu: &Composition) -> bool {
        match self {
            Suite::Mn11 => mu.m() == 1 && mu.n() == 1,
            Suite::M2n1 => (mu.m(), mu.n()) == (2, 1) || (mu.m(), mu.n()) == (1, 2),
            Suite::Lemma72 => mu.m() > 1 && mu.n() > 1,
            _ => true,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// One composition, one truncation order, one monomial order.
pub struct Verifier {
    y: Arc<Yangian>,
    g: GaussData,
}

pub(crate) type Job<'a> = Box<dyn Fn(&mut VerifyReport) -> Result<()> + Send + Sync + 'a>;

/// Runs independent jobs in parallel and merges their reports in job order.
pub(crate) fn run_jobs(jobs: Vec<Job<'_>>) -> Result<VerifyReport> {
    let parts: Vec<Result<VerifyReport>> = jobs
        .par_iter()
        .map(|job| {
            let mut r = VerifyReport::new();
            job(&mut r)?;
            Ok(r)
        })
        .collect();
    let mut out = VerifyReport::new();
    for p in parts {
        out.merge(p?);
    }
    Ok(out.finish())
}

impl Verifier {
    pub fn new(mu: &Composition, k: usize) -> Result<Self> {
        Self::with_order(mu, k, MonomialOrder::default())
    }

    pub fn with_order(mu: &Composition, k: usize, order: MonomialOrder) -> Result<Self> {
        let y = Arc::new(Yangian::with_order(mu.signature(), order));
        let g = gauss_blocks(&y, mu, k)?;
        Ok(Verifier { y, g })
    }

    pub fn composition(&self) -> &Composition {
        self.g.composition()
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn yangian(&self) -> &Arc<Yangian> {
        &self.y
    }

    pub(crate) fn ctx(&self) -> Ctx<'_> {
        Ctx::new(&self.y, &self.g)
    }

    fn require(&self, suite: Suite) -> Result<()> {
        if suite.applies_to(self.composition()) {
            return Ok(());
        }
        let mu = self.composition();
        let need = match suite {
            Suite::Mn11 => "m = n = 1",
            Suite::M2n1 => "(m, n) = (2, 1) or (1, 2)",
            _ => "m > 1 and n > 1",
        };
        Err(Error::WrongShape(format!("suite {suite} needs {need}, got {mu} with m = {}, n = {}", mu.m(), mu.n())))
    }

    pub fn levi(&self) -> Result<VerifyReport> {
        run_jobs(levi::jobs(self.ctx()))
    }

    pub fn even(&self) -> Result<VerifyReport> {
        run_jobs(series_rel::even_jobs(self.ctx()))
    }

    pub fn mn11(&self) -> Result<VerifyReport> {
        self.require(Suite::Mn11)?;
        run_jobs(series_rel::mn11_jobs(self.ctx()))
    }

    /// For `(m, n) = (1, 2)` the lemmas are checked on the reversed
    /// composition, which has shape `(2, 1)`; relation ids get a `dual/` prefix.
    pub fn m2n1(&self) -> Result<VerifyReport> {
        self.require(Suite::M2n1)?;
        let mu = self.composition();
        if mu.m() == 2 {
            return run_jobs(lemmas::m2n1_jobs(self.ctx()));
        }
        let dual = Verifier::with_order(&mu.reversed(), self.order(), self.y.order())?;
        Ok(run_jobs(lemmas::m2n1_jobs(dual.ctx()))?.prefixed("dual"))
    }

    pub fn thm73(&self) -> Result<VerifyReport> {
        run_jobs(presentation::jobs(self.ctx()))
    }

    pub fn lemma72(&self) -> Result<VerifyReport> {
        self.require(Suite::Lemma72)?;
        run_jobs(lemmas::lemma72_jobs(self.ctx()))
    }

    /// Runs a suite. `All` runs every suite whose shape precondition holds
    /// and prefixes relation ids with the suite name.
    pub fn run(&self, suite: Suite) -> Result<VerifyReport> {
        match suite {
            Suite::Levi => self.levi(),
            Suite::Even => self.even(),
            Suite::Mn11 => self.mn11(),
            Suite::M2n1 => self.m2n1(),
            Suite::Thm73 => self.thm73(),
            Suite::Lemma72 => self.lemma72(),
            Suite::All => {
                let mut out = VerifyReport::new();
                for s in Suite::EACH {
                    if s.applies_to(self.composition()) {
                        out.merge(self.run(s)?.prefixed(s.name()));
                    }
                }
                Ok(out.finish())
            }
        }
    }
}

pub fn verify_levi(mu: &Composition, k: usize) -> Result<VerifyReport> {
    Verifier::new(mu, k)?.levi()
}

pub fn verify_block_even(mu: &Composition, k: usize) -> Result<VerifyReport> {
    Verifier::new(mu, k)?.even()
}

pub fn verify_mn11(mu: &Composition, k: usize) -> Result<VerifyReport> {
    Verifier::new(mu, k)?.mn11()
}

pub fn verify_m2n1(mu: &Composition, k: usize) -> Result<VerifyReport> {
    Verifier::new(mu, k)?.m2n1()
}

pub fn verify_theorem73(mu: &Composition, k: usize) -> Result<VerifyReport> {
    Verifier::new(mu, k)?.thm73()
}

pub fn verify_lemma72(mu: &Composition, k: usize) -> Result<VerifyReport> {
    Verifier::new(mu, k)?.lemma72()
}
