//! Exact row echelon form over ℤ for sparse rows with ordered column keys.
//!
//! Rows are kept primitive (content 1, positive leading entry). Eliminating
//! `v` against a pivot row `p` with leading column `c` replaces `v` by
//! `p[c]·v − v[c]·p`, so no fraction is ever formed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Element, Symbol, Word};

pub type SparseRow<K> = BTreeMap<K, BigInt>;

/// Clears denominators: the result is a primitive integer multiple of `x`.
pub fn integer_row<S: Symbol>(x: &Element<S>) -> SparseRow<Word<S>> {
    let mut lcm = BigInt::one();
    for (_, c) in x.terms() {
        lcm = lcm.lcm(&c.denom());
    }
    let mut row = SparseRow::new();
    for (w, c) in x.terms() {
        row.insert(w.clone(), c.numer() * (&lcm / c.denom()));
    }
    normalize(&mut row);
    row
}

fn normalize<K: Ord>(row: &mut SparseRow<K>) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let flip = row.values().next().is_some_and(|v| v.is_negative());
    if g.is_zero() {
        return;
    }
    if flip {
        g = -g;
    }
    if !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

/// Incrementally built echelon basis of a row space.
#[derive(Default)]
pub struct Echelon<K: Ord + Clone> {
    pivots: BTreeMap<K, SparseRow<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots; the result is zero iff
    /// `row` lies in the span.
    pub fn reduce(&self, mut row: SparseRow<K>) -> SparseRow<K> {
        loop {
            // first column of `row` that carries a pivot
            let hit = row.iter().find(|(k, _)| self.pivots.contains_key(*k)).map(|(k, _)| k.clone());
            let Some(col) = hit else { return row };
            let p = &self.pivots[&col];
            let a = &p[&col];
            let b = row[&col].clone();
            let g = a.gcd(&b);
            let (a, b) = (a / &g, b / &g);
            for v in row.values_mut() {
                *v *= &a;
            }
            for (k, v) in p {
                let e = row.entry(k.clone()).or_insert_with(BigInt::zero);
                *e -= &b * v;
                if e.is_zero() {
                    row.remove(k);
                }
            }
            normalize(&mut row);
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow<K>) -> bool {
        let mut row = self.reduce(row);
        // the reduced row has no pivot column at all, so its leading key is new
        let Some(lead) = row.keys().next().cloned() else { return false };
        normalize(&mut row);
        self.pivots.insert(lead, row);
        true
    }

    pub fn contains(&self, row: SparseRow<K>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of the given rows.
pub fn rank<K: Ord + Clone>(rows: impl IntoIterator<Item = SparseRow<K>>) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn row(v: &[i64]) -> SparseRow<usize> {
        v.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(i, x)| (i, BigInt::from(*x)))
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(vec![row(&[1, 2]), row(&[2, 4])]), 1);
        assert_eq!(rank(vec![row(&[1, 2, 3]), row(&[4, 5, 6]), row(&[7, 8, 9])]), 2);
        assert_eq!(rank(vec![row(&[0, 0]), row(&[0, 3])]), 1);
        assert_eq!(rank(Vec::<SparseRow<usize>>::new()), 0);
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        e.insert(row(&[2, 0, 1]));
        e.insert(row(&[0, 3, 1]));
        assert!(e.contains(row(&[6, 3, 4])));
        assert!(!e.contains(row(&[0, 0, 1])));
    }

    /// Rank over ℚ by plain fraction arithmetic, as an independent oracle.
    fn rational_rank(m: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut a: Vec<Vec<BigRational>> =
            m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        let cols = a.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[r][c];
                    let pr = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(pr) {
                        *x -= &f * y;
                    }
                }
            }
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn matches_rational_elimination(m in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..7)) {
            let rows: Vec<_> = m.iter().map(|r| row(r)).collect();
            prop_assert_eq!(rank(rows), rational_rank(&m));
        }
    }
}
