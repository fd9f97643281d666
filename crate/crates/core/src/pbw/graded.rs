//! The loop filtration `deg t_ij^(r) = r - 1` and its associated graded map
//! onto U(gl(M|N)[t]).

use crate::algebra::{loop_degree, max_loop_degree, Elem, Generator, Signature, Word, Yangian};
use crate::error::{Error, Result};
use crate::gauss::{gauss_blocks, Composition};
use crate::rational::Rational;
use crate::report::VerifyReport;

use super::loop_alg::{LoopAlgebra, LoopElement, LoopSymbol};

/// Image of `t_ij^(r)` in degree `r - 1`: `(-1)^{|i|} E_ij t^{r-1}`.
fn letter(sig: Signature, g: Generator) -> (LoopSymbol, bool) {
    (LoopSymbol::new(g.i(), g.j(), g.loop_degree()), sig.index_parity(g.i()))
}

/// Top component of `x` in filtration degree `k`, as an element of
/// U(gl(M|N)[t]). Terms of lower degree are dropped.
pub fn gr_image(y: &Yangian, l: &LoopAlgebra, x: &Elem, k: usize) -> Result<LoopElement> {
    let x = y.normal_form(x);
    let found = max_loop_degree(&x);
    if found > k {
        return Err(Error::DegreeExceeded { found, cap: k });
    }
    let mut out = LoopElement::zero();
    for (w, c) in x.terms() {
        if loop_degree(w) != k {
            continue;
        }
        let mut neg = false;
        let mut word = Word::new();
        for &g in w {
            let (s, p) = letter(y.signature(), g);
            neg ^= p;
            word.push(s);
        }
        out.add_term(word, if neg { -c.clone() } else { c.clone() });
    }
    Ok(l.normal_form(&out))
}

fn residual_text(x: &LoopElement) -> String {
    format!("{x:?}")
}

/// Generator brackets against the loop superalgebra, the graded images of
/// the parabolic generators, and the graded bracket of two `E` blocks.
/// Everything is checked in graded degree at most `k_max`.
pub fn gr_bracket_check(mu: &Composition, k_max: usize) -> Result<VerifyReport> {
    let sig = mu.signature();
    let y = Yangian::new(sig);
    let l = LoopAlgebra::new(sig);
    let mut rep = VerifyReport::new();

    let gens = y.generators(k_max + 1);
    for &a in &gens {
        for &b in &gens {
            let deg = a.loop_degree() + b.loop_degree();
            if deg > k_max {
                continue;
            }
            let lhs = gr_image(&y, &l, &y.super_commutator(&Elem::symbol(a), &Elem::symbol(b)), deg)?;
            let ga = gr_image(&y, &l, &Elem::symbol(a), a.loop_degree())?;
            let gb = gr_image(&y, &l, &Elem::symbol(b), b.loop_degree())?;
            let res = lhs.minus(&l.super_commutator(&ga, &gb));
            let idx = [a.i(), a.j(), a.r(), b.i(), b.j(), b.r()].map(|v| v as i64);
            rep.check_that("gr-bracket", &idx, res.is_zero(), &residual_text(&res));
        }
    }

    let g = gauss_blocks(&y, mu, k_max + 1)?;
    let len = mu.len();
    let row = |a: usize, i: usize| mu.offset(a) + i;
    let signed = |a: usize, i: usize, b: usize, j: usize, r: usize| {
        let e = l.e(row(a, i), row(b, j), r - 1);
        if sig.index_parity(row(a, i)) {
            e.neg()
        } else {
            e
        }
    };
    for r in 1..=k_max + 1 {
        for a in 1..=len {
            for b in 1..=len {
                for i in 1..=mu.size(a) {
                    for j in 1..=mu.size(b) {
                        let x = match a.cmp(&b) {
                            std::cmp::Ordering::Equal => g.d_coeff(a, i, j, r)?,
                            std::cmp::Ordering::Less => g.e_coeff(a, b, i, j, r)?,
                            std::cmp::Ordering::Greater => g.f_coeff(a, b, i, j, r)?,
                        };
                        let res = gr_image(&y, &l, &x, r - 1)?.minus(&signed(a, i, b, j, r));
                        let idx = [a, b, i, j, r].map(|v| v as i64);
                        rep.check_that("gr-parabolic", &idx, res.is_zero(), &residual_text(&res));
                    }
                }
            }
        }
    }

    // [E_{a,b;i,j}^(r), E_{c,d;h,k}^(s)] in degree r + s - 2
    let par = |a: usize| mu.parity(a);
    let gr_e = |a: usize, b: usize, i: usize, j: usize, r: usize| -> Result<LoopElement> {
        gr_image(&y, &l, &g.e_coeff(a, b, i, j, r)?, r - 1)
    };
    let pairs: Vec<(usize, usize)> = (1..=len).flat_map(|a| (a + 1..=len).map(move |b| (a, b))).collect();
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            for r in 1..=k_max + 1 {
                for s in 1..=k_max + 2 - r {
                    let n = r + s - 1;
                    for i in 1..=mu.size(a) {
                        for j in 1..=mu.size(b) {
                            for h in 1..=mu.size(c) {
                                for k in 1..=mu.size(d) {
                                    let x = g.e_coeff(a, b, i, j, r)?;
                                    let z = g.e_coeff(c, d, h, k, s)?;
                                    let lhs = gr_image(&y, &l, &y.super_commutator(&x, &z), n - 1)?;
                                    let mut rhs = LoopElement::zero();
                                    if b == c && h == j {
                                        rhs.add_scaled(&gr_e(a, d, i, k, n)?, &Rational::sign(par(b)));
                                    }
                                    if a == d && i == k {
                                        let neg = (par(a) & par(b)) ^ (par(a) & par(c)) ^ (par(b) & par(c));
                                        rhs.add_scaled(&gr_e(c, b, h, j, n)?, &Rational::sign(!neg));
                                    }
                                    let res = lhs.minus(&rhs);
                                    let idx = [a, b, c, d, i, j, h, k, r, s].map(|v| v as i64);
                                    rep.check_that("gr-e-bracket", &idx, res.is_zero(), &residual_text(&res));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rep.finish())
}
