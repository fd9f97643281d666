//! Algebra-valued truncated power series in up to three variables.
//!
//! A series is `Σ c_e u^{-e_u} v^{-e_v} w^{-e_w}`. Exponents count powers of
//! the *inverse* variables, so the generating series `t_ij(u)` only has
//! exponents `>= 0`; multiplying by `u` shifts exponents down and may make
//! them negative. Each variable carries a known order: coefficients with a
//! larger exponent were truncated away and are unknown, not zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Elem, Yangian};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    U = 0,
    V = 1,
    W = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::U, Var::V, Var::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "u" => Some(Var::U),
            "v" => Some(Var::V),
            "w" => Some(Var::W),
            _ => None,
        }
    }
}

/// Exponent triple `(e_u, e_v, e_w)`.
pub type Exp = [i32; 3];

/// Known order of a variable the series does not depend on.
pub const UNBOUNDED: i32 = i32::MAX / 4;

fn add_bound(a: i32, b: i32) -> i32 {
    if a >= UNBOUNDED || b >= UNBOUNDED {
        UNBOUNDED
    } else {
        a + b
    }
}

#[derive(Clone)]
pub struct MultiSeries {
    coeffs: BTreeMap<Exp, Elem>,
    known: [i32; 3],
    /// every stored exponent is >= this bound in each variable
    low: [i32; 3],
    active: [bool; 3],
}

impl MultiSeries {
    /// The zero series, known up to `known` in `var`.
    pub fn zero_in(var: Var, known: i32) -> Self {
        let mut s = Self::constant(Elem::zero());
        s.active[var.index()] = true;
        s.known[var.index()] = known;
        s
    }

    /// A series without variables, exact in every order.
    pub fn constant(c: Elem) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert([0, 0, 0], c);
        }
        MultiSeries { coeffs, known: [UNBOUNDED; 3], low: [0; 3], active: [false; 3] }
    }

    pub fn one() -> Self {
        Self::constant(Elem::one())
    }

    /// `Σ_r coeffs[r] var^{-r}` known up to `known`; entries past `known` are dropped.
    pub fn univariate(var: Var, known: i32, coeffs: Vec<Elem>) -> Self {
        let mut s = Self::zero_in(var, known);
        for (r, c) in coeffs.into_iter().enumerate() {
            let mut e = [0; 3];
            e[var.index()] = r as i32;
            s.insert(e, c);
        }
        s
    }

    fn insert(&mut self, e: Exp, c: Elem) {
        if c.is_zero() || !self.within_known(&e) {
            return;
        }
        for (lo, x) in self.low.iter_mut().zip(e) {
            *lo = (*lo).min(x);
        }
        self.coeffs.insert(e, c);
    }

    fn accumulate(&mut self, e: Exp, c: &Elem, scale: &Rational) {
        if c.is_zero() || !self.within_known(&e) {
            return;
        }
        let entry = self.coeffs.entry(e).or_default();
        entry.add_scaled(c, scale);
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn within_known(&self, e: &Exp) -> bool {
        (0..3).all(|v| e[v] <= self.known[v] && (self.active[v] || e[v] == 0))
    }

    pub fn known(&self) -> [i32; 3] {
        self.known
    }

    pub fn known_in(&self, var: Var) -> i32 {
        self.known[var.index()]
    }

    pub fn low(&self) -> [i32; 3] {
        self.low
    }

    pub fn active_vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.active[v.index()]).collect()
    }

    pub fn is_active(&self, var: Var) -> bool {
        self.active[var.index()]
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Exp, &Elem)> {
        self.coeffs.iter()
    }

    pub fn num_coeffs(&self) -> usize {
        self.coeffs.len()
    }

    /// All known coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient at `e`; reading past the known order is an error.
    pub fn coeff(&self, e: Exp) -> Result<Elem> {
        if (0..3).any(|v| e[v] > self.known[v]) {
            return Err(Error::OutOfKnownRange { exponent: e, known: self.known });
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_default())
    }

    /// Coefficient of `var^{-r}` in a univariate series.
    pub fn coeff_at(&self, var: Var, r: i32) -> Result<Elem> {
        let mut e = [0; 3];
        e[var.index()] = r;
        self.coeff(e)
    }

    /// Lowers the known order of `var` to at most `k`, dropping coefficients.
    pub fn truncate(&self, var: Var, k: i32) -> Self {
        let mut out = self.clone();
        let v = var.index();
        out.active[v] = true;
        out.known[v] = out.known[v].min(k);
        out.coeffs.retain(|e, _| e[v] <= k);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, &Rational::ONE)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, &Rational::from_int(-1))
    }

    fn combine(&self, other: &Self, scale: &Rational) -> Self {
        let mut out = MultiSeries {
            coeffs: BTreeMap::new(),
            known: [0; 3],
            low: [0; 3],
            active: [false; 3],
        };
        for v in 0..3 {
            out.known[v] = self.known[v].min(other.known[v]);
            out.low[v] = self.low[v].min(other.low[v]);
            out.active[v] = self.active[v] || other.active[v];
        }
        for (e, c) in &self.coeffs {
            out.accumulate(*e, c, &Rational::ONE);
        }
        for (e, c) in &other.coeffs {
            out.accumulate(*e, c, scale);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(e, x)| (*e, x.scale(c)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_int(-1))
    }

    fn product_shape(&self, other: &Self) -> Self {
        let mut out = MultiSeries {
            coeffs: BTreeMap::new(),
            known: [0; 3],
            low: [0; 3],
            active: [false; 3],
        };
        for v in 0..3 {
            out.active[v] = self.active[v] || other.active[v];
            out.low[v] = self.low[v] + other.low[v];
            out.known[v] = add_bound(self.known[v], other.low[v])
                .min(add_bound(other.known[v], self.low[v]));
        }
        out
    }

    /// Cauchy product; every coefficient product keeps `self` on the left.
    pub fn mul(&self, y: &Yangian, other: &Self) -> Self {
        let mut out = self.product_shape(other);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                if out.within_known(&e) {
                    let p = y.multiply(ca, cb);
                    out.accumulate(e, &p, &Rational::ONE);
                }
            }
        }
        out
    }

    /// Product with a constant algebra element on the left.
    pub fn left_mul_elem(&self, y: &Yangian, c: &Elem) -> Self {
        let mut out = self.clone();
        out.coeffs.clear();
        for (e, x) in &self.coeffs {
            out.accumulate(*e, &y.multiply(c, x), &Rational::ONE);
        }
        out
    }

    /// Coefficientwise supercommutator `[self, other]`, extended bilinearly
    /// over parity components.
    pub fn super_commutator(&self, y: &Yangian, other: &Self) -> Self {
        let mut out = self.product_shape(other);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                if out.within_known(&e) {
                    let p = y.super_commutator(ca, cb);
                    out.accumulate(e, &p, &Rational::ONE);
                }
            }
        }
        out
    }

    /// Multiplication by `var^by` (`by >= 0`): exponents and the known
    /// order in `var` drop by `by`.
    pub fn shift(&self, var: Var, by: i32) -> Self {
        assert!(by >= 0, "shift amount must be non-negative");
        let v = var.index();
        let mut out = self.clone();
        out.active[v] = true;
        if by == 0 {
            return out;
        }
        out.known[v] = if self.known[v] >= UNBOUNDED { UNBOUNDED } else { self.known[v] - by };
        out.low[v] = self.low[v] - by;
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let mut e2 = *e;
                e2[v] -= by;
                (e2, c.clone())
            })
            .collect();
        out
    }

    /// `(a - b) · self` for two distinct variables.
    pub fn times_difference(&self, a: Var, b: Var) -> Self {
        self.shift(a, 1).sub(&self.shift(b, 1))
    }

    /// Renames variable `from` to `to`; `to` must be unused.
    pub fn rename(&self, from: Var, to: Var) -> Self {
        if from == to {
            return self.clone();
        }
        let (f, t) = (from.index(), to.index());
        assert!(!self.active[t], "target variable already in use");
        let mut out = self.clone();
        out.active.swap(f, t);
        out.known.swap(f, t);
        out.low.swap(f, t);
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let mut e2 = *e;
                e2.swap(f, t);
                (e2, c.clone())
            })
            .collect();
        out
    }

    /// Substitution `var ↦ -var`.
    pub fn negate_var(&self, var: Var) -> Self {
        let v = var.index();
        let mut out = self.clone();
        for (e, c) in out.coeffs.iter_mut() {
            if e[v].rem_euclid(2) == 1 {
                *c = c.neg();
            }
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Elem) -> Elem) -> Self {
        let mut out = self.clone();
        out.coeffs.clear();
        for (e, c) in &self.coeffs {
            out.accumulate(*e, &f(c), &Rational::ONE);
        }
        out
    }

    /// Builds a series from explicit parts; used by deserialization.
    pub fn from_parts(active: &[Var], known: &[i32], coeffs: Vec<(Exp, Elem)>) -> Result<Self> {
        if active.len() != known.len() {
            return Err(Error::Parse("`vars` and `known` differ in length".into()));
        }
        let mut s = Self::constant(Elem::zero());
        for (v, k) in active.iter().zip(known) {
            s.active[v.index()] = true;
            s.known[v.index()] = *k;
        }
        for (e, c) in coeffs {
            if !s.within_known(&e) {
                return Err(Error::Parse(format!("exponent {e:?} outside the declared known range")));
            }
            if s.coeffs.contains_key(&e) {
                return Err(Error::Parse(format!("duplicate exponent {e:?}")));
            }
            s.insert(e, c);
        }
        Ok(s)
    }
}

impl PartialEq for MultiSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.known == other.known && self.active == other.active
    }
}

impl Eq for MultiSeries {}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[known {:?}]{{", self.known)?;
        for (e, c) in &self.coeffs {
            write!(f, " {e:?}: {c:?};")?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;

    fn y11() -> Yangian {
        Yangian::new(Signature::new(1, 1).unwrap())
    }

    fn t_series(y: &Yangian, i: usize, j: usize, var: Var, k: i32) -> MultiSeries {
        MultiSeries::univariate(var, k, (0..=k as usize).map(|r| y.t(i, j, r)).collect())
    }

    #[test]
    fn additive_inverse_and_identity() {
        let y = y11();
        let x = y.t(1, 1, 1);
        let a = MultiSeries::univariate(Var::U, 3, vec![Elem::one(), x.clone()]);
        let b = MultiSeries::constant(Elem::one().neg());
        let s = a.add(&b);
        assert_eq!(s.coeff_at(Var::U, 1).unwrap(), x);
        assert_eq!(s.coeff_at(Var::U, 0).unwrap(), Elem::zero());
        assert_eq!(s.known_in(Var::U), 3);
        let z = MultiSeries::zero_in(Var::U, 3);
        assert_eq!(a.add(&z), a);
    }

    #[test]
    fn sum_of_diagonal_series() {
        let y = y11();
        let s = t_series(&y, 1, 1, Var::U, 2).add(&t_series(&y, 2, 2, Var::U, 2));
        assert_eq!(s.coeff_at(Var::U, 1).unwrap(), y.t(1, 1, 1).plus(&y.t(2, 2, 1)));
        assert_eq!(s.coeff_at(Var::U, 0).unwrap(), crate::algebra::scalar(2));
    }

    #[test]
    fn difference_of_squares() {
        let y = y11();
        let g = y.t(1, 1, 1);
        let a = MultiSeries::univariate(Var::U, 4, vec![Elem::one(), g.clone()]);
        let b = MultiSeries::univariate(Var::U, 4, vec![Elem::one(), g.neg()]);
        let p = a.mul(&y, &b);
        assert_eq!(p.coeff_at(Var::U, 0).unwrap(), Elem::one());
        assert!(p.coeff_at(Var::U, 1).unwrap().is_zero());
        assert_eq!(p.coeff_at(Var::U, 2).unwrap(), y.multiply(&g, &g).neg());
        assert_eq!(a.mul(&y, &MultiSeries::one()), a);
    }

    #[test]
    fn odd_series_square_has_vanishing_second_coefficient() {
        let y = y11();
        let s = t_series(&y, 1, 2, Var::U, 2);
        let p = s.mul(&y, &s);
        assert!(p.coeff_at(Var::U, 2).unwrap().is_zero());
        assert_eq!(p.known_in(Var::U), 2);
    }

    #[test]
    fn shift_moves_exponents() {
        let y = y11();
        let x = y.t(1, 1, 1);
        let a = MultiSeries::univariate(Var::U, 4, vec![Elem::zero(), Elem::zero(), x.clone()]);
        let s = a.shift(Var::U, 1);
        assert_eq!(s.coeff_at(Var::U, 1).unwrap(), x);
        assert_eq!(s.known_in(Var::U), 3);
        assert_eq!(a.shift(Var::U, 0), a);
    }

    #[test]
    fn cleared_denominator_bracket() {
        // (u - v)[t12(u), t21(v)] in (1|1); its u^0 v^-1 coefficient is t22^(1) - t11^(1)
        let y = y11();
        let a = t_series(&y, 1, 2, Var::U, 3);
        let b = t_series(&y, 2, 1, Var::V, 3);
        let s = a.super_commutator(&y, &b).times_difference(Var::U, Var::V);
        assert_eq!(s.coeff([0, 1, 0]).unwrap(), y.t(2, 2, 1).minus(&y.t(1, 1, 1)));
        // the u^-1 v^-1 coefficient is [t12^(2), t21^(1)] - [t12^(1), t21^(2)] = 0
        assert!(s.coeff([1, 1, 0]).unwrap().is_zero());
        assert_eq!(s.known(), [2, 2, UNBOUNDED]);
    }

    #[test]
    fn reading_past_known_order_fails() {
        let y = y11();
        let s = t_series(&y, 1, 1, Var::U, 2);
        assert_eq!(s.coeff_at(Var::U, 1).unwrap(), y.t(1, 1, 1));
        assert_eq!(s.coeff_at(Var::U, 0).unwrap(), Elem::one());
        assert!(matches!(s.coeff_at(Var::U, 3), Err(Error::OutOfKnownRange { .. })));
    }

    #[test]
    fn negative_valuation_limits_known_order() {
        let y = y11();
        let a = t_series(&y, 1, 1, Var::U, 3).shift(Var::U, 1);
        let b = t_series(&y, 2, 2, Var::U, 3);
        let p = a.mul(&y, &b);
        // a has a u^{+1} term, so b's unknown u^{-4} coefficient would reach u^{-3}
        assert_eq!(p.known_in(Var::U), 2);
    }
}
