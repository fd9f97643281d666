use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{Element, Signature, Straightener, SuperRule, Word};
use crate::rational::Rational;

/// The basis vector `E_ij t^s` of gl(M|N)[t]. Ordered lexicographically
/// on `(s, i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopSymbol {
    s: u16,
    i: u8,
    j: u8,
}

impl LoopSymbol {
    pub fn new(i: usize, j: usize, s: usize) -> Self {
        debug_assert!(i >= 1 && j >= 1);
        LoopSymbol { s: s as u16, i: i as u8, j: j as u8 }
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn s(&self) -> usize {
        self.s as usize
    }
}

impl fmt::Debug for LoopSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}{}t^{}", self.i, self.j, self.s)
    }
}

pub type LoopElement = Element<LoopSymbol>;

pub struct LoopRule {
    sig: Signature,
}

impl LoopRule {
    fn odd(&self, i: usize, j: usize) -> bool {
        self.sig.index_parity(i) != self.sig.index_parity(j)
    }
}

impl SuperRule for LoopRule {
    type Sym = LoopSymbol;

    fn is_odd(&self, x: LoopSymbol) -> bool {
        self.odd(x.i(), x.j())
    }

    fn compare(&self, a: LoopSymbol, b: LoopSymbol) -> Ordering {
        a.cmp(&b)
    }

    fn bracket(&self, a: LoopSymbol, b: LoopSymbol) -> LoopElement {
        let (i, j, h, k) = (a.i(), a.j(), b.i(), b.j());
        let s = a.s() + b.s();
        let mut out = LoopElement::zero();
        if h == j {
            out.add_term(Word::from_slice(&[LoopSymbol::new(i, k, s)]), Rational::ONE);
        }
        if i == k {
            let swap = self.odd(i, j) && self.odd(h, k);
            out.add_term(Word::from_slice(&[LoopSymbol::new(h, j, s)]), Rational::sign(!swap));
        }
        out
    }
}

/// U(gl(M|N)[t]) with elements kept in PBW normal form.
pub struct LoopAlgebra {
    sig: Signature,
    engine: Straightener<LoopRule>,
}

impl LoopAlgebra {
    pub fn new(sig: Signature) -> Self {
        LoopAlgebra { sig, engine: Straightener::new(LoopRule { sig }) }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// `E_ij t^s`.
    pub fn e(&self, i: usize, j: usize, s: usize) -> LoopElement {
        LoopElement::symbol(LoopSymbol::new(i, j, s))
    }

    pub fn is_odd(&self, x: LoopSymbol) -> bool {
        self.engine.rule().is_odd(x)
    }

    pub fn normal_form(&self, x: &LoopElement) -> LoopElement {
        self.engine.normal_form(x)
    }

    pub fn is_normal(&self, x: &LoopElement) -> bool {
        x.terms().all(|(w, _)| self.engine.is_normal_word(w))
    }

    pub fn multiply(&self, a: &LoopElement, b: &LoopElement) -> LoopElement {
        self.engine.multiply(a, b)
    }

    pub fn super_commutator(&self, a: &LoopElement, b: &LoopElement) -> LoopElement {
        self.engine.super_commutator(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl11() -> LoopAlgebra {
        LoopAlgebra::new(Signature::new(1, 1).unwrap())
    }

    #[test]
    fn odd_square_is_half_the_bracket() {
        let l = gl11();
        let x = l.e(1, 2, 0);
        let y = l.e(2, 1, 3);
        // [E12, E21 t^3] = E11 t^3 + E22 t^3
        let want = l.e(1, 1, 3).plus(&l.e(2, 2, 3));
        assert_eq!(l.super_commutator(&x, &y), want);
        assert!(l.multiply(&x, &x).is_zero());
        let z = x.plus(&y);
        assert_eq!(l.multiply(&z, &z), want);
    }

    #[test]
    fn even_brackets_in_gl2() {
        let l = LoopAlgebra::new(Signature::new(2, 0).unwrap());
        let h = l.e(1, 1, 1).minus(&l.e(2, 2, 1));
        let e = l.e(1, 2, 2);
        assert_eq!(l.super_commutator(&h, &e), l.e(1, 2, 3).scale(&Rational::from_int(2)));
    }

    #[test]
    fn words_sorted_by_degree_first() {
        let l = gl11();
        let x = l.multiply(&l.e(1, 1, 2), &l.e(2, 2, 0));
        assert!(l.is_normal(&x));
        let w: Vec<_> = x.terms().next().unwrap().0.iter().map(|s| (s.s(), s.i(), s.j())).collect();
        assert_eq!(w, vec![(0, 2, 2), (2, 1, 1)]);
    }
}
