use std::cmp::Ordering;
use std::sync::Arc;

use dashmap::DashMap;

use super::element::{Element, Symbol, Word};
use crate::rational::Rational;

/// Commutation data for a superalgebra presented by generators whose
/// pairwise supercommutators are known in closed form.
///
/// The rewriting system produced from it must terminate: every word in
/// `bracket(a, b)` has to be strictly smaller than `a·b` in some
/// well-founded measure compatible with concatenation.
pub trait SuperRule: Send + Sync {
    type Sym: Symbol;

    fn is_odd(&self, s: Self::Sym) -> bool;

    /// The PBW order in which normal words are sorted.
    fn compare(&self, a: Self::Sym, b: Self::Sym) -> Ordering;

    /// `[a, b] = ab - (-1)^{|a||b|} ba`, as any (not necessarily reduced)
    /// combination of words.
    fn bracket(&self, a: Self::Sym, b: Self::Sym) -> Element<Self::Sym>;
}

type Memo<S> = DashMap<(Word<S>, S), Arc<Element<S>>>;

/// Reduces words to PBW normal form: non-decreasing in the rule's order,
/// no repeated odd letter.
///
/// The expensive primitive, appending one letter to a normal word, is
/// memoized. The cache only ever stores canonical results, so sharing it
/// between threads cannot change any output.
pub struct Straightener<R: SuperRule> {
    rule: R,
    cache: Memo<R::Sym>,
}

impl<R: SuperRule> Straightener<R> {
    pub fn new(rule: R) -> Self {
        Straightener { rule, cache: DashMap::new() }
    }

    pub fn rule(&self) -> &R {
        &self.rule
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    pub fn word_is_odd(&self, w: &[R::Sym]) -> bool {
        w.iter().fold(false, |acc, &s| acc ^ self.rule.is_odd(s))
    }

    /// `Some(parity)` when every term has the same parity; zero counts as even.
    pub fn parity(&self, x: &Element<R::Sym>) -> Option<bool> {
        let mut found: Option<bool> = None;
        for (w, _) in x.terms() {
            let p = self.word_is_odd(w);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(false))
    }

    pub fn is_normal_word(&self, w: &[R::Sym]) -> bool {
        w.windows(2).all(|p| match self.rule.compare(p[0], p[1]) {
            Ordering::Less => true,
            Ordering::Equal => !self.rule.is_odd(p[0]),
            Ordering::Greater => false,
        })
    }

    pub fn normal_form(&self, x: &Element<R::Sym>) -> Element<R::Sym> {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            if self.is_normal_word(w) {
                out.add_term(w.clone(), c.clone());
            } else {
                out.add_scaled(&self.mul_word_letters(&[], w), c);
            }
        }
        out
    }

    /// Normal form of the concatenation product.
    pub fn multiply(&self, a: &Element<R::Sym>, b: &Element<R::Sym>) -> Element<R::Sym> {
        let mut out = Element::zero();
        for (wa, ca) in a.terms() {
            let left_normal = self.is_normal_word(wa);
            for (wb, cb) in b.terms() {
                let c = ca * cb;
                if left_normal {
                    if wb.is_empty() {
                        out.add_term(wa.clone(), c);
                    } else {
                        out.add_scaled(&self.mul_word_letters(wa, wb), &c);
                    }
                } else {
                    let mut w = wa.clone();
                    w.extend_from_slice(wb);
                    out.add_scaled(&self.mul_word_letters(&[], &w), &c);
                }
            }
        }
        out
    }

    pub fn super_commutator(&self, a: &Element<R::Sym>, b: &Element<R::Sym>) -> Element<R::Sym> {
        let (a0, a1) = self.split_parity(a);
        let (b0, b1) = self.split_parity(b);
        let mut out = Element::zero();
        for (x, xo) in [(&a0, false), (&a1, true)] {
            if x.is_zero() {
                continue;
            }
            for (y, yo) in [(&b0, false), (&b1, true)] {
                if y.is_zero() {
                    continue;
                }
                out.add_assign(&self.multiply(x, y));
                let back = self.multiply(y, x);
                if xo && yo {
                    out.add_assign(&back);
                } else {
                    out.sub_assign(&back);
                }
            }
        }
        out
    }

    /// Even and odd components.
    pub fn split_parity(&self, x: &Element<R::Sym>) -> (Element<R::Sym>, Element<R::Sym>) {
        let even = x.filter(|w| !self.word_is_odd(w));
        let odd = x.filter(|w| self.word_is_odd(w));
        (even, odd)
    }

    /// Normal form of `m · letters` for a normal word `m`.
    fn mul_word_letters(&self, m: &[R::Sym], letters: &[R::Sym]) -> Element<R::Sym> {
        let mut acc = Element::word(Word::from_slice(m), Rational::ONE);
        for &g in letters {
            let mut next = Element::zero();
            for (w, c) in acc.terms() {
                next.add_scaled(&self.mul_word_letter(w, g), c);
            }
            acc = next;
        }
        acc
    }

    fn mul_word_elem(&self, m: &[R::Sym], x: &Element<R::Sym>) -> Element<R::Sym> {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.mul_word_letters(m, w), c);
        }
        out
    }

    /// Normal form of `m · g` for a normal word `m` and a single letter `g`.
    fn mul_word_letter(&self, m: &[R::Sym], g: R::Sym) -> Arc<Element<R::Sym>> {
        let Some((&y, rest)) = m.split_last() else {
            return Arc::new(Element::symbol(g));
        };
        let ord = self.rule.compare(y, g);
        if ord == Ordering::Less || (ord == Ordering::Equal && !self.rule.is_odd(g)) {
            let mut w = Word::from_slice(m);
            w.push(g);
            return Arc::new(Element::word(w, Rational::ONE));
        }
        let key = (Word::from_slice(m), g);
        if let Some(hit) = self.cache.get(&key) {
            return Arc::clone(hit.value());
        }
        let result = if ord == Ordering::Equal {
            // odd g: g·g = [g, g] / 2
            let sq = self.rule.bracket(g, g).scale(&Rational::new(1, 2));
            self.mul_word_elem(rest, &sq)
        } else {
            // y·g = ±(g·y - [g, y]) with g < y
            let negative = self.rule.is_odd(y) && self.rule.is_odd(g);
            let sign = Rational::sign(negative);
            let mut out = Element::zero();
            let head = self.mul_word_letter(rest, g);
            for (w, c) in head.terms() {
                out.add_scaled(&self.mul_word_letter(w, y), &(c * &sign));
            }
            let br = self.rule.bracket(g, y);
            out.add_scaled(&self.mul_word_elem(rest, &br), &(-&sign));
            out
        };
        let result = Arc::new(result);
        self.cache.insert(key, Arc::clone(&result));
        result
    }
}
