use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::{Element, Word};
use super::straighten::{Straightener, SuperRule};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// The pair (M|N): indices `1..=M` are even, `M+1..=M+N` odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub m: usize,
    pub n: usize,
}

impl Signature {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::IndexOutOfRange("M + N must be at least 1".into()));
        }
        if m + n > 250 {
            return Err(Error::IndexOutOfRange("M + N is limited to 250".into()));
        }
        Ok(Signature { m, n })
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Parity of a row/column index (1-based).
    pub fn index_parity(&self, i: usize) -> bool {
        i > self.m
    }

    /// (N|M)
    pub fn swapped(&self) -> Signature {
        Signature { m: self.n, n: self.m }
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim() {
            Err(Error::IndexOutOfRange(format!("index {i} not in 1..={}", self.dim())))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.m, self.n)
    }
}

/// The generator `t_ij^(r)` with `r >= 1`.
///
/// The derived ordering is lexicographic on `(r, i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    r: u16,
    i: u8,
    j: u8,
}

impl Generator {
    pub fn new(i: usize, j: usize, r: usize) -> Self {
        debug_assert!(r >= 1 && i >= 1 && j >= 1);
        Generator { r: r as u16, i: i as u8, j: j as u8 }
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn r(&self) -> usize {
        self.r as usize
    }

    pub fn loop_degree(&self) -> usize {
        self.r() - 1
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}{}^({})", self.i, self.j, self.r)
    }
}

/// Fixed total order on generators used for normal words.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// lexicographic on `(r, i, j)`
    #[default]
    OrderFirst,
    /// lexicographic on `(i, j, r)`
    IndexFirst,
}

pub struct YangianRule {
    sig: Signature,
    order: MonomialOrder,
}

impl YangianRule {
    /// `t_ij^(r)` as an element, with `t_ij^(0) = δ_ij`.
    fn t(&self, i: usize, j: usize, r: usize) -> Element<Generator> {
        if r == 0 {
            if i == j {
                Element::one()
            } else {
                Element::zero()
            }
        } else {
            Element::symbol(Generator::new(i, j, r))
        }
    }
}

impl SuperRule for YangianRule {
    type Sym = Generator;

    fn is_odd(&self, g: Generator) -> bool {
        self.sig.index_parity(g.i()) != self.sig.index_parity(g.j())
    }

    fn compare(&self, a: Generator, b: Generator) -> Ordering {
        match self.order {
            MonomialOrder::OrderFirst => a.cmp(&b),
            MonomialOrder::IndexFirst => (a.i, a.j, a.r).cmp(&(b.i, b.j, b.r)),
        }
    }

    fn bracket(&self, a: Generator, b: Generator) -> Element<Generator> {
        let (i, j, r) = (a.i(), a.j(), a.r());
        let (h, k, s) = (b.i(), b.j(), b.r());
        let (pi, pj, ph) = (
            self.sig.index_parity(i),
            self.sig.index_parity(j),
            self.sig.index_parity(h),
        );
        let negative = (pi & pj) ^ (pi & ph) ^ (pj & ph);
        let mut out = Element::zero();
        for t in 0..r.min(s) {
            let hi = r + s - 1 - t;
            out.add_assign(&self.t(h, j, t).concat(&self.t(i, k, hi)));
            out.sub_assign(&self.t(h, j, hi).concat(&self.t(i, k, t)));
        }
        if negative {
            out.neg()
        } else {
            out
        }
    }
}

pub type Elem = Element<Generator>;

/// Y(gl(M|N)) with elements kept in PBW normal form.
pub struct Yangian {
    sig: Signature,
    engine: Straightener<YangianRule>,
}

impl Yangian {
    pub fn new(sig: Signature) -> Self {
        Self::with_order(sig, MonomialOrder::default())
    }

    pub fn with_order(sig: Signature, order: MonomialOrder) -> Self {
        Yangian { sig, engine: Straightener::new(YangianRule { sig, order }) }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn order(&self) -> MonomialOrder {
        self.engine.rule().order
    }

    pub fn generator(&self, i: usize, j: usize, r: usize) -> Result<Generator> {
        self.sig.check_index(i)?;
        self.sig.check_index(j)?;
        if r == 0 {
            return Err(Error::IndexOutOfRange("generator order must be at least 1".into()));
        }
        if r > u16::MAX as usize {
            return Err(Error::IndexOutOfRange(format!("generator order {r} too large")));
        }
        Ok(Generator::new(i, j, r))
    }

    /// `t_ij^(r)`; order 0 gives the scalar `δ_ij`. Panics on bad indices.
    pub fn t(&self, i: usize, j: usize, r: usize) -> Elem {
        if r > 0 {
            self.generator(i, j, r).expect("generator indices");
        }
        self.engine.rule().t(i, j, r)
    }

    pub fn parity_of(&self, g: Generator) -> Result<bool> {
        self.sig.check_index(g.i())?;
        self.sig.check_index(g.j())?;
        Ok(self.engine.rule().is_odd(g))
    }

    pub fn is_odd(&self, g: Generator) -> bool {
        self.engine.rule().is_odd(g)
    }

    pub fn element_parity(&self, x: &Elem) -> Option<bool> {
        self.engine.parity(x)
    }

    pub fn normal_form(&self, x: &Elem) -> Elem {
        self.engine.normal_form(x)
    }

    pub fn is_normal(&self, x: &Elem) -> bool {
        x.terms().all(|(w, _)| self.engine.is_normal_word(w))
    }

    pub fn multiply(&self, a: &Elem, b: &Elem) -> Elem {
        self.engine.multiply(a, b)
    }

    pub fn product(&self, factors: &[&Elem]) -> Elem {
        let mut acc = Elem::one();
        for f in factors {
            acc = self.multiply(&acc, f);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn super_commutator(&self, a: &Elem, b: &Elem) -> Elem {
        self.engine.super_commutator(a, b)
    }

    /// The right-hand side of the defining relation for `[t_ij^(r), t_hk^(s)]`,
    /// reduced to normal form.
    pub fn defining_bracket(&self, a: Generator, b: Generator) -> Elem {
        self.normal_form(&self.engine.rule().bracket(a, b))
    }

    pub fn cache_len(&self) -> usize {
        self.engine.cache_len()
    }

    /// Every generator with order `1..=max_order`.
    pub fn generators(&self, max_order: usize) -> Vec<Generator> {
        let d = self.sig.dim();
        let mut out = Vec::new();
        for r in 1..=max_order {
            for i in 1..=d {
                for j in 1..=d {
                    out.push(Generator::new(i, j, r));
                }
            }
        }
        out
    }
}

/// Σ (r - 1) over the letters of a word.
pub fn loop_degree(word: &[Generator]) -> usize {
    word.iter().map(|g| g.loop_degree()).sum()
}

/// Largest loop degree among the terms of `x` (0 for zero).
pub fn max_loop_degree(x: &Elem) -> usize {
    x.terms().map(|(w, _)| loop_degree(w)).max().unwrap_or(0)
}

pub fn word_of(gens: &[Generator]) -> Word<Generator> {
    Word::from_slice(gens)
}

pub fn scalar(c: i64) -> Elem {
    Elem::scalar(Rational::from_int(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y11() -> Yangian {
        Yangian::new(Signature::new(1, 1).unwrap())
    }

    #[test]
    fn parity_rule() {
        let y = y11();
        assert!(!y.parity_of(Generator::new(1, 1, 1)).unwrap());
        assert!(y.parity_of(Generator::new(1, 2, 1)).unwrap());
        assert!(!y.parity_of(Generator::new(2, 2, 1)).unwrap());
        assert!(y.parity_of(Generator::new(3, 1, 1)).is_err());
    }

    #[test]
    fn diagonal_generators_commute_at_first_order() {
        let y = y11();
        let w = y.t(2, 2, 1).concat(&y.t(1, 1, 1));
        assert_eq!(y.normal_form(&w), y.t(1, 1, 1).concat(&y.t(2, 2, 1)));
        assert!(y.super_commutator(&y.t(1, 1, 1), &y.t(2, 2, 1)).is_zero());
    }

    #[test]
    fn odd_square_vanishes() {
        let y = y11();
        let w = y.t(1, 2, 1).concat(&y.t(1, 2, 1));
        assert!(y.normal_form(&w).is_zero());
    }

    #[test]
    fn odd_pair_reorders_with_bracket() {
        let y = y11();
        let w = y.t(2, 1, 1).concat(&y.t(1, 2, 1));
        let expected = y
            .t(1, 2, 1)
            .concat(&y.t(2, 1, 1))
            .neg()
            .plus(&y.t(2, 2, 1))
            .minus(&y.t(1, 1, 1));
        assert_eq!(y.normal_form(&w), expected);
        let br = y.super_commutator(&y.t(1, 2, 1), &y.t(2, 1, 1));
        assert_eq!(br, y.t(2, 2, 1).minus(&y.t(1, 1, 1)));
    }

    #[test]
    fn multiply_examples() {
        let y = y11();
        let x = y.t(1, 2, 1);
        assert_eq!(y.multiply(&Elem::one(), &x), x);
        let sq = y.multiply(&y.t(1, 1, 1), &y.t(1, 1, 1));
        assert_eq!(sq, y.t(1, 1, 1).concat(&y.t(1, 1, 1)));
        let p = y.multiply(&y.t(1, 2, 1), &y.t(2, 1, 1));
        assert_eq!(p, y.t(1, 2, 1).concat(&y.t(2, 1, 1)));
    }

    #[test]
    fn even_self_bracket_is_zero() {
        let y = Yangian::new(Signature::new(2, 1).unwrap());
        let x = y.t(1, 2, 2).plus(&y.t(3, 3, 1));
        assert!(y.super_commutator(&x, &x).is_zero());
    }

    #[test]
    fn loop_degrees() {
        assert_eq!(loop_degree(&[]), 0);
        assert_eq!(loop_degree(&[Generator::new(1, 1, 1), Generator::new(2, 2, 1)]), 0);
        assert_eq!(loop_degree(&[Generator::new(1, 1, 3), Generator::new(1, 2, 2)]), 3);
    }
}
