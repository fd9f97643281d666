//! Block Gauss decomposition `T(u) = F(u) D(u) E(u)` for a composition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::algebra::{Elem, Yangian};
use crate::error::{Error, Result};
use crate::json::series_to_value;
use crate::matrix::{quasidet, MatrixSeries};
use crate::rational::Rational;
use crate::report::VerifyReport;
use crate::series::{MultiSeries, Var};
use crate::algebra::Signature;

/// Block sizes `(μ_1, …, μ_m | μ_{m+1}, …, μ_{m+n})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    m: usize,
}

impl Composition {
    pub fn new(lambda: &[usize], nu: &[usize]) -> Result<Self> {
        if lambda.iter().chain(nu).any(|&p| p == 0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        let total: usize = lambda.iter().chain(nu).sum();
        if total == 0 {
            return Err(Error::InvalidComposition("composition of (0|0)".into()));
        }
        if total > 250 {
            return Err(Error::InvalidComposition("M + N is limited to 250".into()));
        }
        Ok(Composition { parts: lambda.iter().chain(nu).copied().collect(), m: lambda.len() })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.parts.len() - self.m
    }

    /// Number of blocks `m + n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `μ_a`, 1-based.
    pub fn size(&self, a: usize) -> usize {
        self.parts[a - 1]
    }

    /// `μ_1 + … + μ_{a-1}`.
    pub fn offset(&self, a: usize) -> usize {
        self.parts[..a - 1].iter().sum()
    }

    /// Block parity: odd iff `a > m`.
    pub fn parity(&self, a: usize) -> bool {
        a > self.m
    }

    pub fn signature(&self) -> Signature {
        let big_m = self.parts[..self.m].iter().sum();
        let big_n = self.parts[self.m..].iter().sum();
        Signature { m: big_m, n: big_n }
    }

    /// Every composition of (M|N), in a fixed order.
    pub fn all(sig: Signature) -> Vec<Composition> {
        let mut out = Vec::new();
        for l in compositions_of(sig.m) {
            for n in compositions_of(sig.n) {
                out.push(Composition::new(&l, &n).expect("valid parts"));
            }
        }
        out
    }

    /// `μ^r = (μ_{m+n}, …, μ_{m+1} | μ_m, …, μ_1)`, a composition of (N|M).
    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts, m: self.n() }
    }
}

/// All ordered tuples of positive integers summing to `n`.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n).rev() {
        for mut rest in compositions_of(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s
            .split_once('|')
            .ok_or_else(|| Error::InvalidComposition(format!("`{s}` has no `|`")))?;
        let side = |t: &str| -> Result<Vec<usize>> {
            let t = t.trim();
            if t.is_empty() {
                return Ok(vec![]);
            }
            t.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidComposition(format!("bad part `{p}` in `{s}`")))
                })
                .collect()
        };
        Composition::new(&side(l)?, &side(r)?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[usize]| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.parts[..self.m]), join(&self.parts[self.m..]))
    }
}

/// The blocks `D_a`, `D'_a`, `E_{a,b}`, `F_{b,a}` of `T(u)` in variable `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussData {
    mu: Composition,
    k: usize,
    d: Vec<MatrixSeries>,
    dp: Vec<MatrixSeries>,
    e: BTreeMap<(usize, usize), MatrixSeries>,
    f: BTreeMap<(usize, usize), MatrixSeries>,
}

fn check_mu(y: &Yangian, mu: &Composition) -> Result<()> {
    if mu.signature() != y.signature() {
        return Err(Error::InvalidComposition(format!(
            "{mu} is a composition of {}, not {}",
            mu.signature(),
            y.signature()
        )));
    }
    Ok(())
}

fn block(t: &MatrixSeries, mu: &Composition, a: usize, b: usize) -> MatrixSeries {
    let (r0, c0) = (mu.offset(a), mu.offset(b));
    t.submatrix(r0, r0 + mu.size(a), c0, c0 + mu.size(b))
}

/// Gauss blocks from the quasideterminant formulas.
pub fn gauss_blocks(y: &Yangian, mu: &Composition, k: usize) -> Result<GaussData> {
    check_mu(y, mu)?;
    let t = MatrixSeries::build_t(y, Var::U, k);
    let l = mu.len();
    let mut out = GaussData { mu: mu.clone(), k, d: vec![], dp: vec![], e: BTreeMap::new(), f: BTreeMap::new() };
    for a in 1..=l {
        let off = mu.offset(a);
        let lead = t.submatrix(0, off, 0, off);
        // corner(b, c) = |T_{<a,<a}  T_{<a,c}; T_{b,<a}  [T_{b,c}]|
        let corner = |b: usize, c: usize| -> Result<MatrixSeries> {
            let tbc = block(&t, mu, b, c);
            if off == 0 {
                return Ok(tbc);
            }
            let rb = t.submatrix(mu.offset(b), mu.offset(b) + mu.size(b), 0, off);
            let cc = t.submatrix(0, off, mu.offset(c), mu.offset(c) + mu.size(c));
            quasidet(y, &lead, &cc, &rb, &tbc)
        };
        let da = corner(a, a)?;
        let dpa = da.invert(y)?;
        for b in a + 1..=l {
            out.e.insert((a, b), dpa.mul(y, &corner(a, b)?)?);
            out.f.insert((b, a), corner(b, a)?.mul(y, &dpa)?);
        }
        out.d.push(da);
        out.dp.push(dpa);
    }
    Ok(out)
}

/// Gauss blocks by eliminating block column 1 and recursing on the Schur
/// complement.
pub fn gauss_ldu(y: &Yangian, mu: &Composition, k: usize) -> Result<GaussData> {
    check_mu(y, mu)?;
    let t = MatrixSeries::build_t(y, Var::U, k);
    let l = mu.len();
    let mut s: BTreeMap<(usize, usize), MatrixSeries> = BTreeMap::new();
    for a in 1..=l {
        for b in 1..=l {
            s.insert((a, b), block(&t, mu, a, b));
        }
    }
    let mut out = GaussData { mu: mu.clone(), k, d: vec![], dp: vec![], e: BTreeMap::new(), f: BTreeMap::new() };
    for a in 1..=l {
        let da = s[&(a, a)].clone();
        let dpa = da.invert(y)?;
        for b in a + 1..=l {
            out.e.insert((a, b), dpa.mul(y, &s[&(a, b)])?);
            out.f.insert((b, a), s[&(b, a)].mul(y, &dpa)?);
        }
        for b in a + 1..=l {
            for c in a + 1..=l {
                let corr = out.f[&(b, a)].mul(y, &s[&(a, c)])?;
                let next = s[&(b, c)].sub(&corr)?;
                s.insert((b, c), next);
            }
        }
        out.d.push(da);
        out.dp.push(dpa);
    }
    Ok(out)
}

impl GaussData {
    pub fn composition(&self) -> &Composition {
        &self.mu
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn d(&self, a: usize) -> &MatrixSeries {
        &self.d[a - 1]
    }

    pub fn dp(&self, a: usize) -> &MatrixSeries {
        &self.dp[a - 1]
    }

    /// `E_{a,b}` for `a < b`.
    pub fn e(&self, a: usize, b: usize) -> &MatrixSeries {
        &self.e[&(a, b)]
    }

    /// `F_{b,a}` for `a < b`.
    pub fn f(&self, b: usize, a: usize) -> &MatrixSeries {
        &self.f[&(b, a)]
    }

    /// Coefficient `D_{a;i,j}^{(r)}` (1-based entry indices).
    pub fn d_coeff(&self, a: usize, i: usize, j: usize, r: usize) -> Result<Elem> {
        self.d(a).get(i - 1, j - 1).coeff_at(Var::U, r as i32)
    }

    pub fn dp_coeff(&self, a: usize, i: usize, j: usize, r: usize) -> Result<Elem> {
        self.dp(a).get(i - 1, j - 1).coeff_at(Var::U, r as i32)
    }

    pub fn e_coeff(&self, a: usize, b: usize, i: usize, j: usize, r: usize) -> Result<Elem> {
        self.e(a, b).get(i - 1, j - 1).coeff_at(Var::U, r as i32)
    }

    pub fn f_coeff(&self, b: usize, a: usize, i: usize, j: usize, r: usize) -> Result<Elem> {
        self.f(b, a).get(i - 1, j - 1).coeff_at(Var::U, r as i32)
    }

    fn full(&self, pick: impl Fn(usize, usize) -> Option<MatrixSeries>) -> MatrixSeries {
        let l = self.mu.len();
        let k = self.k as i32;
        let grid: Vec<Vec<MatrixSeries>> = (1..=l)
            .map(|a| {
                (1..=l)
                    .map(|b| {
                        pick(a, b).unwrap_or_else(|| {
                            MatrixSeries::zeros(self.mu.size(a), self.mu.size(b), Var::U, k)
                        })
                    })
                    .collect()
            })
            .collect();
        MatrixSeries::from_blocks(&grid).expect("consistent block sizes")
    }

    pub fn full_d(&self) -> MatrixSeries {
        self.full(|a, b| (a == b).then(|| self.d(a).clone()))
    }

    pub fn full_dp(&self) -> MatrixSeries {
        self.full(|a, b| (a == b).then(|| self.dp(a).clone()))
    }

    pub fn full_e(&self) -> MatrixSeries {
        let k = self.k as i32;
        self.full(|a, b| match a.cmp(&b) {
            std::cmp::Ordering::Equal => Some(MatrixSeries::identity(self.mu.size(a), Var::U, k)),
            std::cmp::Ordering::Less => Some(self.e(a, b).clone()),
            _ => None,
        })
    }

    pub fn full_f(&self) -> MatrixSeries {
        let k = self.k as i32;
        self.full(|a, b| match a.cmp(&b) {
            std::cmp::Ordering::Equal => Some(MatrixSeries::identity(self.mu.size(a), Var::U, k)),
            std::cmp::Ordering::Greater => Some(self.f(a, b).clone()),
            _ => None,
        })
    }

    /// Blocks keyed `D/a`, `Dp/a`, `E/a/b`, `F/b/a`; each block is a list of
    /// rows of series.
    pub fn to_json(&self) -> Value {
        let mat = |m: &MatrixSeries| -> Value {
            Value::Array(
                (0..m.rows())
                    .map(|i| Value::Array((0..m.cols()).map(|j| series_to_value(m.get(i, j))).collect()))
                    .collect(),
            )
        };
        let mut blocks = Map::new();
        let l = self.mu.len();
        for a in 1..=l {
            blocks.insert(format!("D/{a}"), mat(self.d(a)));
        }
        for a in 1..=l {
            blocks.insert(format!("Dp/{a}"), mat(self.dp(a)));
        }
        for ((a, b), m) in &self.e {
            blocks.insert(format!("E/{a}/{b}"), mat(m));
        }
        for ((b, a), m) in &self.f {
            blocks.insert(format!("F/{b}/{a}"), mat(m));
        }
        json!({ "mu": self.mu.to_string(), "K": self.k, "blocks": Value::Object(blocks) })
    }
}

fn check_matrix_eq(
    report: &mut VerifyReport,
    relation: &str,
    idx: &[i64],
    lhs: &MatrixSeries,
    rhs: &MatrixSeries,
) -> Result<()> {
    let diff = lhs.sub(rhs)?;
    for i in 0..diff.rows() {
        for j in 0..diff.cols() {
            let mut ix = idx.to_vec();
            ix.extend([i as i64 + 1, j as i64 + 1]);
            report.check_series(relation, &ix, diff.get(i, j));
        }
    }
    Ok(())
}

/// `Ẽ_{a,b}`: the alternating sum over chains `a = i_0 < … < i_s = b`.
pub fn tilde_e(y: &Yangian, g: &GaussData, a: usize, b: usize) -> Result<MatrixSeries> {
    let mut acc = g.e(a, b).scale(&Rational::from_int(-1));
    for c in a + 1..b {
        // chains through c as their first stop: -E_{a,c} Ẽ_{c,b}
        let tail = tilde_e(y, g, c, b)?;
        acc = acc.sub(&g.e(a, c).mul(y, &tail)?)?;
    }
    Ok(acc)
}

/// `F̃_{b,a}`: the alternating sum `Σ (-1)^s F_{b,i_{s-1}} ⋯ F_{i_1,a}`.
pub fn tilde_f(y: &Yangian, g: &GaussData, b: usize, a: usize) -> Result<MatrixSeries> {
    let mut acc = g.f(b, a).scale(&Rational::from_int(-1));
    for c in a + 1..b {
        let head = tilde_f(y, g, b, c)?;
        acc = acc.sub(&head.mul(y, g.f(c, a))?)?;
    }
    Ok(acc)
}

/// Checks `T = F D E`, the elimination cross-check, `D D' = D' D = I`, the
/// constant terms and parities of all blocks, and `T^{-1} = E^{-1} D' F^{-1}`.
/// For `m = n = 1` also the entrywise formulas for `T` and `T^{-1}`.
pub fn check_gauss(y: &Yangian, mu: &Composition, k: usize) -> Result<VerifyReport> {
    let g = gauss_blocks(y, mu, k)?;
    let mut report = VerifyReport::new();
    let t = MatrixSeries::build_t(y, Var::U, k);
    let (fm, dm, em) = (g.full_f(), g.full_d(), g.full_e());
    let fde = fm.mul(y, &dm)?.mul(y, &em)?;
    check_matrix_eq(&mut report, "fde", &[], &fde, &t)?;

    let ldu = gauss_ldu(y, mu, k)?;
    report.check_that("ldu", &[], ldu == g, "elimination disagrees with the quasideterminant formulas");

    let l = mu.len();
    for a in 1..=l {
        let id = MatrixSeries::identity(mu.size(a), Var::U, k as i32);
        check_matrix_eq(&mut report, "d-dprime", &[a as i64], &g.d(a).mul(y, g.dp(a))?, &id)?;
        check_matrix_eq(&mut report, "dprime-d", &[a as i64], &g.dp(a).mul(y, g.d(a))?, &id)?;
        block_shape(y, &mut report, "d-shape", &[a as i64], g.d(a), Some(false), true);
        block_shape(y, &mut report, "dprime-shape", &[a as i64], g.dp(a), Some(false), true);
        for b in a + 1..=l {
            let par = mu.parity(a) != mu.parity(b);
            let ix = [a as i64, b as i64];
            block_shape(y, &mut report, "e-shape", &ix, g.e(a, b), Some(par), false);
            block_shape(y, &mut report, "f-shape", &ix, g.f(b, a), Some(par), false);
        }
    }

    let tinv = t.invert(y)?;
    let other = em.invert(y)?.mul(y, &g.full_dp())?.mul(y, &fm.invert(y)?)?;
    check_matrix_eq(&mut report, "inverse", &[], &other, &tinv)?;

    if mu.m() == 1 && mu.n() == 1 {
        check_two_block_formulas(y, &g, &t, &tinv, &mut report)?;
    }
    Ok(report.finish())
}

fn block_shape(
    y: &Yangian,
    report: &mut VerifyReport,
    relation: &str,
    idx: &[i64],
    m: &MatrixSeries,
    parity: Option<bool>,
    identity_constant: bool,
) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let s = m.get(i, j);
            let c0 = s.coeff_at(Var::U, 0).expect("order 0 is always known");
            let want = if identity_constant && i == j { Elem::one() } else { Elem::zero() };
            let mut ok = c0 == want;
            for (e, c) in s.coeffs() {
                if e[0] > 0 {
                    ok &= parity.is_none_or(|p| y.element_parity(c) == Some(p));
                }
            }
            let mut ix = idx.to_vec();
            ix.extend([i as i64 + 1, j as i64 + 1]);
            report.check_that(relation, &ix, ok, "wrong constant term or parity");
        }
    }
}

/// Entrywise formulas for `t_ij(u)` and `t'_ij(u)` when `μ = (M|N)`.
fn check_two_block_formulas(
    y: &Yangian,
    g: &GaussData,
    t: &MatrixSeries,
    tinv: &MatrixSeries,
    report: &mut VerifyReport,
) -> Result<()> {
    let (m, n) = (g.mu.size(1), g.mu.size(2));
    let (d1, d2, dp1, dp2) = (g.d(1), g.d(2), g.dp(1), g.dp(2));
    let (e, f) = (g.e(1, 2), g.f(2, 1));
    let fde = f.mul(y, d1)?.mul(y, e)?;
    let ed2f = e.mul(y, dp2)?.mul(y, f)?;
    let de = d1.mul(y, e)?;
    let fd = f.mul(y, d1)?;
    let ed = e.mul(y, dp2)?;
    let df = dp2.mul(y, f)?;
    let ent = |x: &MatrixSeries, i: usize, j: usize| x.get(i, j).clone();
    let mut cmp = |rel: &str, i: usize, j: usize, lhs: MultiSeries, rhs: MultiSeries| {
        report.check_series(rel, &[i as i64 + 1, j as i64 + 1], &lhs.sub(&rhs));
    };
    for i in 0..m {
        for j in 0..m {
            cmp("t-even", i, j, ent(t, i, j), ent(d1, i, j));
            cmp("tinv-even", i, j, ent(tinv, i, j), ent(dp1, i, j).add(&ent(&ed2f, i, j)));
        }
        for j in 0..n {
            cmp("t-upper", i, j, ent(t, i, m + j), ent(&de, i, j));
            cmp("tinv-upper", i, j, ent(tinv, i, m + j), ent(&ed, i, j).neg());
        }
    }
    for i in 0..n {
        for j in 0..m {
            cmp("t-lower", i, j, ent(t, m + i, j), ent(&fd, i, j));
            cmp("tinv-lower", i, j, ent(tinv, m + i, j), ent(&df, i, j).neg());
        }
        for j in 0..n {
            cmp("t-odd", i, j, ent(t, m + i, m + j), ent(&fde, i, j).add(&ent(d2, i, j)));
            cmp("tinv-odd", i, j, ent(tinv, m + i, m + j), ent(dp2, i, j));
        }
    }
    Ok(())
}

/// Rebuilds `E_{a,b}^{(r)}` and `F_{b,a}^{(r)}` for `b > a + 1` from
/// brackets with first-order adjacent generators, for every choice of the
/// auxiliary index, and compares with the quasideterminant values.
pub fn check_higher_ef(y: &Yangian, g: &GaussData) -> Result<VerifyReport> {
    let mu = &g.mu;
    let l = mu.len();
    let mut report = VerifyReport::new();
    for a in 1..=l {
        for b in a + 2..=l {
            let sign = Rational::sign(mu.parity(b - 1));
            for r in 1..=g.k {
                for i in 1..=mu.size(a) {
                    for j in 1..=mu.size(b) {
                        for kk in 1..=mu.size(b - 1) {
                            let ix = [a as i64, b as i64, i as i64, j as i64, r as i64, kk as i64];
                            let lhs = g.e_coeff(a, b, i, j, r)?;
                            let br = y.super_commutator(
                                &g.e_coeff(a, b - 1, i, kk, r)?,
                                &g.e_coeff(b - 1, b, kk, j, 1)?,
                            );
                            report.check("e-chain", &ix, &lhs.minus(&br.scale(&sign)));
                            let lhs = g.f_coeff(b, a, j, i, r)?;
                            let br = y.super_commutator(
                                &g.f_coeff(b, b - 1, j, kk, 1)?,
                                &g.f_coeff(b - 1, a, kk, i, r)?,
                            );
                            report.check("f-chain", &ix, &lhs.minus(&br.scale(&sign)));
                        }
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

/// Checks the block expansions of `T` and `T^{-1}` through `E`, `F` and
/// their alternating path sums.
pub fn check_tilde(y: &Yangian, g: &GaussData) -> Result<VerifyReport> {
    let mu = &g.mu;
    let l = mu.len();
    let k = g.k;
    let t = MatrixSeries::build_t(y, Var::U, k);
    let tinv = t.invert(y)?;
    let mut report = VerifyReport::new();
    let mut te = BTreeMap::new();
    let mut tf = BTreeMap::new();
    for a in 1..=l {
        for b in a + 1..=l {
            te.insert((a, b), tilde_e(y, g, a, b)?);
            tf.insert((b, a), tilde_f(y, g, b, a)?);
        }
    }
    let fdc = |b: usize, c: usize, x: usize| -> Result<MatrixSeries> { g.f(b, c).mul(y, g.d(c))?.mul(y, g.e(c, x)) };
    let edf = |a: usize, c: usize, b: usize| -> Result<MatrixSeries> { te[&(a, c)].mul(y, g.dp(c))?.mul(y, &tf[&(c, b)]) };
    for a in 1..=l {
        let ia = [a as i64];
        let mut rhs = g.d(a).clone();
        for c in 1..a {
            rhs = rhs.add(&fdc(a, c, a)?)?;
        }
        check_matrix_eq(&mut report, "t-diag", &ia, &block(&t, mu, a, a), &rhs)?;
        let mut rhs = g.dp(a).clone();
        for c in a + 1..=l {
            rhs = rhs.add(&edf(a, c, a)?)?;
        }
        check_matrix_eq(&mut report, "tinv-diag", &ia, &block(&tinv, mu, a, a), &rhs)?;
        for b in a + 1..=l {
            let ix = [a as i64, b as i64];
            let mut rhs = g.d(a).mul(y, g.e(a, b))?;
            for c in 1..a {
                rhs = rhs.add(&fdc(a, c, b)?)?;
            }
            check_matrix_eq(&mut report, "t-upper", &ix, &block(&t, mu, a, b), &rhs)?;
            let mut rhs = g.f(b, a).mul(y, g.d(a))?;
            for c in 1..a {
                rhs = rhs.add(&fdc(b, c, a)?)?;
            }
            check_matrix_eq(&mut report, "t-lower", &ix, &block(&t, mu, b, a), &rhs)?;
            let mut rhs = te[&(a, b)].mul(y, g.dp(b))?;
            for c in b + 1..=l {
                rhs = rhs.add(&edf(a, c, b)?)?;
            }
            check_matrix_eq(&mut report, "tinv-upper", &ix, &block(&tinv, mu, a, b), &rhs)?;
            let mut rhs = g.dp(b).mul(y, &tf[&(b, a)])?;
            for c in b + 1..=l {
                rhs = rhs.add(&te[&(b, c)].mul(y, g.dp(c))?.mul(y, &tf[&(c, a)])?)?;
            }
            check_matrix_eq(&mut report, "tinv-lower", &ix, &block(&tinv, mu, b, a), &rhs)?;
        }
    }
    Ok(report.finish())
}
