use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use smallvec::SmallVec;

use crate::rational::Rational;

/// Letters that can appear in words of a rewriting algebra.
pub trait Symbol: Copy + Ord + Hash + fmt::Debug + Send + Sync + 'static {}

impl<T: Copy + Ord + Hash + fmt::Debug + Send + Sync + 'static> Symbol for T {}

/// A word in the generators, read left to right.
pub type Word<S> = SmallVec<[S; 8]>;

/// Finite rational combination of words.
///
/// Zero coefficients are never stored. Whether the words are in normal form
/// depends on who built the element: everything returned by a
/// [`Straightener`](super::Straightener) is.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<S: Symbol> {
    terms: BTreeMap<Word<S>, Rational>,
}

impl<S: Symbol> Default for Element<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Symbol> Element<S> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Rational::ONE)
    }

    pub fn scalar(c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(Word::new(), c);
        e
    }

    pub fn symbol(s: S) -> Self {
        Self::word(Word::from_slice(&[s]), Rational::ONE)
    }

    pub fn word(w: Word<S>, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word<S>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[S]) -> Rational {
        self.terms.get(w).cloned().unwrap_or(Rational::ZERO)
    }

    /// Constant (empty-word) coefficient.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    pub fn add_term(&mut self, w: Word<S>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Element<S>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v * c);
        }
    }

    pub fn add_assign(&mut self, other: &Element<S>) {
        self.add_scaled(other, &Rational::ONE);
    }

    pub fn sub_assign(&mut self, other: &Element<S>) {
        self.add_scaled(other, &Rational::from_int(-1));
    }

    pub fn plus(&self, other: &Element<S>) -> Element<S> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Element<S>) -> Element<S> {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scale(&self, c: &Rational) -> Element<S> {
        if c.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Element<S> {
        self.scale(&Rational::from_int(-1))
    }

    /// Product by concatenation of words, without any reduction.
    pub fn concat(&self, other: &Element<S>) -> Element<S> {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Applies `f` to every letter, dropping words for which `f` yields `None`.
    pub fn map_symbols<T: Symbol>(&self, mut f: impl FnMut(S) -> Option<T>) -> Element<T> {
        let mut out = Element::zero();
        'terms: for (w, c) in &self.terms {
            let mut nw = Word::new();
            for &s in w {
                match f(s) {
                    Some(t) => nw.push(t),
                    None => continue 'terms,
                }
            }
            out.add_term(nw, c.clone());
        }
        out
    }

    /// Keeps only the terms for which `keep` holds.
    pub fn filter(&self, mut keep: impl FnMut(&[S]) -> bool) -> Element<S> {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

impl<S: Symbol> FromIterator<(Word<S>, Rational)> for Element<S> {
    fn from_iter<I: IntoIterator<Item = (Word<S>, Rational)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (w, c) in iter {
            e.add_term(w, c);
        }
        e
    }
}

impl<S: Symbol> fmt::Debug for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for s in w {
                write!(f, "·{s:?}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_prunes_terms() {
        let mut e: Element<u8> = Element::symbol(3);
        e.add_term(Word::from_slice(&[3]), Rational::from_int(-1));
        assert!(e.is_zero());
        assert_eq!(e.len(), 0);
    }

    #[test]
    fn concat_keeps_letter_order() {
        let a: Element<u8> = Element::symbol(2);
        let b = Element::symbol(1).plus(&Element::one());
        let p = a.concat(&b);
        assert_eq!(p.coeff(&[2, 1]), Rational::ONE);
        assert_eq!(p.coeff(&[1, 2]), Rational::ZERO);
        assert_eq!(p.coeff(&[2]), Rational::ONE);
    }
}
