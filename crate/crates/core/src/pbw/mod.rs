//! Loop filtration, PBW monomials in the parabolic generators, and
//! finite-window certificates of linear independence and spanning.

mod graded;
mod loop_alg;
mod rank;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Elem, Generator, Yangian};
use crate::error::{Error, Result};
use crate::gauss::{gauss_blocks, Composition, GaussData};
use crate::report::VerifyReport;

pub use graded::{gr_bracket_check, gr_image};
pub use loop_alg::{LoopAlgebra, LoopElement, LoopRule, LoopSymbol};
pub use rank::{integer_row, rank, Echelon, SparseRow};

/// One letter of a PBW word. Variant order gives `F < D < E`; inside a
/// family the order is lexicographic on (blocks, entry, order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PbwSymbol {
    /// `F_{b,a;i,j}^{(r)}` with `b > a`
    F { b: u8, a: u8, i: u8, j: u8, r: u16 },
    /// `D_{a;i,j}^{(r)}`
    D { a: u8, i: u8, j: u8, r: u16 },
    /// `E_{a,b;i,j}^{(r)}` with `a < b`
    E { a: u8, b: u8, i: u8, j: u8, r: u16 },
    /// `t_ij^(r)`, ordered as in the algebra's default normal form
    T(Generator),
}

impl PbwSymbol {
    pub fn order(&self) -> usize {
        match *self {
            PbwSymbol::F { r, .. } | PbwSymbol::D { r, .. } | PbwSymbol::E { r, .. } => r as usize,
            PbwSymbol::T(g) => g.r(),
        }
    }

    pub fn loop_degree(&self) -> usize {
        self.order() - 1
    }

    pub fn is_odd(&self, mu: &Composition) -> bool {
        match *self {
            PbwSymbol::D { .. } => false,
            PbwSymbol::E { a, b, .. } | PbwSymbol::F { a, b, .. } => mu.parity(a as usize) != mu.parity(b as usize),
            PbwSymbol::T(g) => {
                let sig = mu.signature();
                sig.index_parity(g.i()) != sig.index_parity(g.j())
            }
        }
    }

    /// The coefficient this letter names, as an element of the algebra.
    pub fn expand(&self, y: &Yangian, g: &GaussData) -> Result<Elem> {
        let r = self.order();
        if r > g.order() {
            return Err(Error::OrderTooSmall { have: g.order(), need: r });
        }
        let u = |x: u8| x as usize;
        match *self {
            PbwSymbol::F { b, a, i, j, .. } => g.f_coeff(u(b), u(a), u(i), u(j), r),
            PbwSymbol::D { a, i, j, .. } => g.d_coeff(u(a), u(i), u(j), r),
            PbwSymbol::E { a, b, i, j, .. } => g.e_coeff(u(a), u(b), u(i), u(j), r),
            PbwSymbol::T(t) => Ok(y.t(t.i(), t.j(), t.r())),
        }
    }
}

impl fmt::Display for PbwSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PbwSymbol::F { b, a, i, j, r } => write!(f, "F{b},{a};{i},{j}^({r})"),
            PbwSymbol::D { a, i, j, r } => write!(f, "D{a};{i},{j}^({r})"),
            PbwSymbol::E { a, b, i, j, r } => write!(f, "E{a},{b};{i},{j}^({r})"),
            PbwSymbol::T(g) => write!(f, "t{},{}^({})", g.i(), g.j(), g.r()),
        }
    }
}

/// An ordered word of PBW letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(pub Vec<PbwSymbol>);

impl PbwMonomial {
    pub fn letters(&self) -> &[PbwSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn loop_degree(&self) -> usize {
        self.0.iter().map(|s| s.loop_degree()).sum()
    }

    /// Non-decreasing with no repeated odd letter.
    pub fn is_ordered(&self, mu: &Composition) -> bool {
        self.0.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && !p[0].is_odd(mu)))
    }

    pub fn expand(&self, y: &Yangian, g: &GaussData) -> Result<Elem> {
        let mut acc = Elem::one();
        for s in &self.0 {
            acc = y.multiply(&acc, &s.expand(y, g)?);
        }
        Ok(acc)
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for PbwMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|x| x.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Full,
    DOnly,
    EOnly,
    FOnly,
    TGens,
}

impl Family {
    pub const EACH: [Family; 5] = [Family::Full, Family::DOnly, Family::EOnly, Family::FOnly, Family::TGens];

    pub fn name(self) -> &'static str {
        match self {
            Family::Full => "full",
            Family::DOnly => "D-only",
            Family::EOnly => "E-only",
            Family::FOnly => "F-only",
            Family::TGens => "t-gens",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::EACH
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Every letter of `family` with loop degree at most `k`, sorted.
pub fn letters(mu: &Composition, k: usize, family: Family) -> Vec<PbwSymbol> {
    let len = mu.len();
    let b8 = |x: usize| x as u8;
    let mut out = vec![];
    for r in 1..=k as u16 + 1 {
        if family == Family::TGens {
            let d = mu.signature().dim();
            for i in 1..=d {
                for j in 1..=d {
                    out.push(PbwSymbol::T(Generator::new(i, j, r as usize)));
                }
            }
            continue;
        }
        for a in 1..=len {
            for b in 1..=len {
                let wanted = match a.cmp(&b) {
                    std::cmp::Ordering::Equal => matches!(family, Family::Full | Family::DOnly),
                    std::cmp::Ordering::Less => matches!(family, Family::Full | Family::EOnly),
                    std::cmp::Ordering::Greater => matches!(family, Family::Full | Family::FOnly),
                };
                if !wanted {
                    continue;
                }
                for i in 1..=mu.size(a) {
                    for j in 1..=mu.size(b) {
                        let (a8, b8, i8, j8) = (b8(a), b8(b), b8(i), b8(j));
                        out.push(match a.cmp(&b) {
                            std::cmp::Ordering::Equal => PbwSymbol::D { a: a8, i: i8, j: j8, r },
                            std::cmp::Ordering::Less => PbwSymbol::E { a: a8, b: b8, i: i8, j: j8, r },
                            std::cmp::Ordering::Greater => PbwSymbol::F { b: a8, a: b8, i: i8, j: j8, r },
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// All nonempty ordered words of length at most `max_len` and loop degree
/// at most `k`, sorted by length and then lexicographically.
pub fn enumerate_pbw(mu: &Composition, k: usize, max_len: usize, family: Family) -> Vec<PbwMonomial> {
    let syms = letters(mu, k, family);
    let odd: Vec<bool> = syms.iter().map(|s| s.is_odd(mu)).collect();
    let mut out = vec![];
    let mut word = vec![];
    fn grow(
        syms: &[PbwSymbol],
        odd: &[bool],
        start: usize,
        deg_left: usize,
        len_left: usize,
        word: &mut Vec<PbwSymbol>,
        out: &mut Vec<PbwMonomial>,
    ) {
        if !word.is_empty() {
            out.push(PbwMonomial(word.clone()));
        }
        if len_left == 0 {
            return;
        }
        for n in start..syms.len() {
            let d = syms[n].loop_degree();
            if d > deg_left {
                continue;
            }
            word.push(syms[n]);
            let next = if odd[n] { n + 1 } else { n };
            grow(syms, odd, next, deg_left - d, len_left - 1, word, out);
            word.pop();
        }
    }
    grow(&syms, &odd, 0, k, max_len, &mut word, &mut out);
    out.sort_by(|x, y| (x.len(), &x.0).cmp(&(y.len(), &y.0)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub count: usize,
    pub rank: usize,
}

impl RankReport {
    pub fn full_rank(&self) -> bool {
        self.count == self.rank
    }
}

/// An algebra with its Gauss blocks, reused across PBW computations.
pub struct PbwToolkit {
    y: Yangian,
    g: GaussData,
}

impl PbwToolkit {
    pub fn new(mu: &Composition, order: usize) -> Result<Self> {
        let y = Yangian::new(mu.signature());
        let g = gauss_blocks(&y, mu, order)?;
        Ok(PbwToolkit { y, g })
    }

    pub fn composition(&self) -> &Composition {
        self.g.composition()
    }

    pub fn yangian(&self) -> &Yangian {
        &self.y
    }

    /// Expansions in the normal-ordered `t` basis, computed in parallel.
    pub fn expand_all(&self, monos: &[PbwMonomial]) -> Result<Vec<Elem>> {
        monos.par_iter().map(|m| m.expand(&self.y, &self.g)).collect()
    }

    fn echelon(&self, monos: &[PbwMonomial]) -> Result<Echelon<crate::algebra::Word<Generator>>> {
        let mut ech = Echelon::new();
        for x in self.expand_all(monos)? {
            ech.insert(integer_row(&x));
        }
        Ok(ech)
    }

    pub fn independence(&self, monos: &[PbwMonomial]) -> Result<RankReport> {
        Ok(RankReport { count: monos.len(), rank: self.echelon(monos)?.rank() })
    }

    /// Checks that each normal-ordered `t` monomial of loop degree at most
    /// `k` and length at most `max_len` is a combination of ordered
    /// parabolic monomials.
    ///
    /// Candidates are the full-family words of loop degree `d <= k` and
    /// length at most `k + max_len - d`: lowering the loop degree of a term
    /// can lengthen it, but loop degree plus length never grows.
    pub fn spanning(&self, k: usize, max_len: usize) -> Result<VerifyReport> {
        let mu = self.composition();
        let budget = k + max_len;
        let candidates: Vec<PbwMonomial> = enumerate_pbw(mu, k, budget, Family::Full)
            .into_iter()
            .filter(|m| m.loop_degree() + m.len() <= budget)
            .collect();
        let ech = self.echelon(&candidates)?;
        let mut rep = VerifyReport::new();
        for t in enumerate_pbw(mu, k, max_len, Family::TGens) {
            let x = t.expand(&self.y, &self.g)?;
            let idx: Vec<i64> = t
                .letters()
                .iter()
                .flat_map(|s| match s {
                    PbwSymbol::T(g) => [g.i(), g.j(), g.r()].map(|v| v as i64),
                    _ => unreachable!("t-gens words hold t letters only"),
                })
                .collect();
            rep.check_that("span", &idx, ech.contains(integer_row(&x)), &t.to_string());
        }
        Ok(rep.finish())
    }
}

pub fn independence_check(monos: &[PbwMonomial], mu: &Composition, order: usize) -> Result<RankReport> {
    PbwToolkit::new(mu, order)?.independence(monos)
}

pub fn spanning_check(mu: &Composition, k: usize, max_len: usize, order: usize) -> Result<VerifyReport> {
    PbwToolkit::new(mu, order)?.spanning(k, max_len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;

    fn mu(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn letter_order_puts_f_before_d_before_e() {
        let s = letters(&mu("1|1"), 0, Family::Full);
        let names: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["F2,1;1,1^(1)", "D1;1,1^(1)", "D2;1,1^(1)", "E1,2;1,1^(1)"]);
    }

    #[test]
    fn degree_zero_length_one() {
        let m = mu("1|1");
        let w = enumerate_pbw(&m, 0, 1, Family::Full);
        assert_eq!(w.len(), 4);
        let rep = independence_check(&w, &m, 1).unwrap();
        assert_eq!(rep, RankReport { count: 4, rank: 4 });
    }

    #[test]
    fn e_family_on_three_blocks() {
        let w = enumerate_pbw(&mu("1,1|1"), 0, 1, Family::EOnly);
        let names: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["E1,2;1,1^(1)", "E1,3;1,1^(1)", "E2,3;1,1^(1)"]);
    }

    #[test]
    fn t_generators() {
        let w = enumerate_pbw(&mu("1|1"), 1, 1, Family::TGens);
        assert_eq!(w.len(), 8);
        assert!(w.iter().all(|m| m.len() == 1 && m.loop_degree() <= 1));
    }

    #[test]
    fn odd_letters_do_not_repeat() {
        let m = mu("1|1");
        let w = enumerate_pbw(&m, 0, 2, Family::Full);
        // length 2 over 2 even and 2 odd letters: C(4,2) + 2 squares
        assert_eq!(w.len(), 4 + 6 + 2);
        assert!(w.iter().all(|x| x.is_ordered(&m)));
    }

    #[test]
    fn singleton_rank() {
        let m = mu("1|1");
        let d = PbwMonomial(vec![PbwSymbol::D { a: 1, i: 1, j: 1, r: 1 }]);
        assert_eq!(independence_check(&[d], &m, 1).unwrap().rank, 1);
    }

    #[test]
    fn lowest_letters_expand_to_generators() {
        let m = mu("1|1");
        let tk = PbwToolkit::new(&m, 2).unwrap();
        let y = Yangian::new(Signature::new(1, 1).unwrap());
        let w = enumerate_pbw(&m, 0, 1, Family::Full);
        let got = tk.expand_all(&w).unwrap();
        let want = [y.t(2, 1, 1), y.t(1, 1, 1), y.t(2, 2, 1), y.t(1, 2, 1)];
        assert_eq!(got, want);
    }

    #[test]
    fn window_on_one_one() {
        let m = mu("1|1");
        let tk = PbwToolkit::new(&m, 4).unwrap();
        let w = enumerate_pbw(&m, 1, 2, Family::Full);
        assert!(tk.independence(&w).unwrap().full_rank());
        let span = tk.spanning(1, 2).unwrap();
        assert!(span.ok() && span.total > 0, "{:?}", span.failures.first());
    }

    #[test]
    fn order_too_small() {
        let m = mu("1|1");
        let w = enumerate_pbw(&m, 1, 1, Family::Full);
        assert!(matches!(independence_check(&w, &m, 1), Err(Error::OrderTooSmall { have: 1, need: 2 })));
    }

    #[test]
    fn family_names() {
        for f in Family::EACH {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("G-only".parse::<Family>().is_err());
    }
}
