//! Relations inside the standard Levi subalgebra generated by the `D`'s.

use super::ctx::{grid, ix, Ctx};
use super::Job;
use crate::algebra::{scalar, Elem};
use crate::series::Var;

/// `D^{(0)} = δ`.
pub(crate) fn constant_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    for a in 1..=c.len() {
        out.push(Box::new(move |rep| {
            let n = c.size(a);
            for t in grid(&[n, n]) {
                let want = scalar((t[0] == t[1]) as i64);
                rep.check("d-constant", &ix(&[a, t[0], t[1]]), &c.cd(a, t[0], t[1], 0)?.minus(&want));
            }
            Ok(())
        }));
    }
}

/// `Σ_t D^{(t)} D'^{(r-t)} = δ_{r0} δ`.
pub(crate) fn inverse_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    for a in 1..=c.len() {
        out.push(Box::new(move |rep| {
            let n = c.size(a);
            for t in grid(&[n, n]) {
                let (i, j) = (t[0], t[1]);
                for r in 0..=c.k() {
                    let mut lhs = Elem::zero();
                    for s in 0..=r {
                        for p in 1..=n {
                            lhs.add_assign(&c.mul(&c.cd(a, i, p, s)?, &c.cdp(a, p, j, r - s)?));
                        }
                    }
                    let want = scalar((r == 0 && i == j) as i64);
                    rep.check("d-inverse", &ix(&[a, i, j, r]), &lhs.minus(&want));
                }
            }
            Ok(())
        }));
    }
}

/// `[D_{a;i,j}^{(r)}, D_{b;h,k}^{(s)}]` against the convolution formula.
pub(crate) fn bracket_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    let l = c.len();
    for a in 1..=l {
        for b in 1..=l {
            out.push(Box::new(move |rep| {
                let sg = c.sgn(a);
                for t in grid(&[c.size(a), c.size(a), c.size(b), c.size(b)]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    for r in 1..=c.k() {
                        for s in 1..=c.k() {
                            if a == b && r + s - 1 > c.k() {
                                continue;
                            }
                            let lhs = c.br(&c.cd(a, i, j, r)?, &c.cd(b, h, k, s)?);
                            let mut rhs = Elem::zero();
                            if a == b {
                                let n = r + s - 1;
                                for t in 0..r.min(s) {
                                    rhs.add_assign(&c.mul(&c.cd(a, h, j, t)?, &c.cd(a, i, k, n - t)?));
                                    rhs.sub_assign(&c.mul(&c.cd(a, h, j, n - t)?, &c.cd(a, i, k, t)?));
                                }
                                rhs = rhs.scale(&sg);
                            }
                            rep.check("d-bracket", &ix(&[a, b, i, j, h, k, r, s]), &lhs.minus(&rhs));
                        }
                    }
                }
                Ok(())
            }));
        }
    }
}

/// Series forms: `[D_a(u), D_b(v)] = 0` for `a != b`, and the cleared
/// bracket `(u-v)[D_a(u), D_a(v)]`.
fn series_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    let l = c.len();
    for a in 1..=l {
        for b in 1..=l {
            out.push(Box::new(move |rep| {
                for t in grid(&[c.size(a), c.size(a), c.size(b), c.size(b)]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let lhs = c.sbr(&c.d(a, i, j, Var::U), &c.d(b, h, k, Var::V));
                    let idx = ix(&[a, b, i, j, h, k]);
                    if a != b {
                        rep.check_series("d-commute", &idx, &lhs);
                        continue;
                    }
                    let rhs = c
                        .smul(&c.d(a, h, j, Var::U), &c.d(a, i, k, Var::V))
                        .sub(&c.smul(&c.d(a, h, j, Var::V), &c.d(a, i, k, Var::U)))
                        .scale(&c.sgn(a));
                    rep.check_series("d-series", &idx, &lhs.times_difference(Var::U, Var::V).sub(&rhs));
                }
                Ok(())
            }));
        }
    }
}

pub(crate) fn jobs(c: Ctx<'_>) -> Vec<Job<'_>> {
    let mut out = vec![];
    constant_jobs(c, &mut out);
    inverse_jobs(c, &mut out);
    bracket_jobs(c, &mut out);
    series_jobs(c, &mut out);
    out
}
