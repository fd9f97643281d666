//! The full list of coefficient relations among `D`, `D'`, `E`, `F`.

use super::ctx::{grid, ix, Ctx};
use super::{levi, Job};
use crate::algebra::Elem;
use crate::rational::Rational;

fn neg(x: &Rational) -> Rational {
    Rational::from_int(-1) * x.clone()
}

/// `[D_{a;i,j}^{(r)}, E_{b;h,k}^{(s)}]` and `[D_{a;i,j}^{(r)}, F_{b;h,k}^{(s)}]`.
fn d_ef_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    let (l, m) = (c.len(), c.mu().m());
    for a in 1..=l {
        for b in 1..l {
            // (coefficient of the a = b term, coefficient of the a = b + 1 term)
            let (c1, c2) = if b == m { (Rational::ONE, Rational::from_int(-1)) } else { (c.sgn(b), c.sgn(b)) };
            let (e1, e2) = (c1.clone(), c2.clone());
            out.push(Box::new(move |rep| {
                let (na, nb, nb1) = (c.size(a), c.size(b), c.size(b + 1));
                for t in grid(&[na, na, nb, nb1]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    for r in 1..=c.k() {
                        for s in 1..=c.k() + 1 - r {
                            let n = r + s - 1;
                            let lhs = c.br(&c.cd(a, i, j, r)?, &c.ce(b, h, k, s)?);
                            let mut rhs = Elem::zero();
                            for t in 0..r {
                                if a == b && h == j {
                                    for p in 1..=na {
                                        rhs.add_scaled(&c.mul(&c.cd(a, i, p, t)?, &c.ce(a, p, k, n - t)?), &e1);
                                    }
                                }
                                if a == b + 1 {
                                    rhs.add_scaled(&c.mul(&c.cd(a, i, k, t)?, &c.ce(b, h, j, n - t)?), &neg(&e2));
                                }
                            }
                            rep.check("de-bracket", &ix(&[a, b, i, j, h, k, r, s]), &lhs.minus(&rhs));
                        }
                    }
                }
                Ok(())
            }));
            out.push(Box::new(move |rep| {
                let (na, nb, nb1) = (c.size(a), c.size(b), c.size(b + 1));
                for t in grid(&[na, na, nb1, nb]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    for r in 1..=c.k() {
                        for s in 1..=c.k() + 1 - r {
                            let n = r + s - 1;
                            let lhs = c.br(&c.cd(a, i, j, r)?, &c.cf(b, h, k, s)?);
                            let mut rhs = Elem::zero();
                            for t in 0..r {
                                if a == b && k == i {
                                    for p in 1..=na {
                                        rhs.add_scaled(&c.mul(&c.cf(b, h, p, n - t)?, &c.cd(a, p, j, t)?), &neg(&c1));
                                    }
                                }
                                if a == b + 1 {
                                    rhs.add_scaled(&c.mul(&c.cf(b, i, k, n - t)?, &c.cd(a, h, j, t)?), &c2);
                                }
                            }
                            rep.check("df-bracket", &ix(&[a, b, i, j, h, k, r, s]), &lhs.minus(&rhs));
                        }
                    }
                }
                Ok(())
            }));
        }
    }
}

/// `[E_a^{(r)}, E_a^{(s)}]`, `[F_a^{(r)}, F_a^{(s)}]` and `[E_a^{(r)}, F_b^{(s)}]`.
fn same_block_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    let (l, m) = (c.len(), c.mu().m());
    for a in 1..l {
        let se = if a == m { Rational::from_int(-1) } else { c.sgn(a) };
        let sf = if a == m { Rational::ONE } else { c.sgn(a) };
        out.push(Box::new(move |rep| {
            let (na, nb) = (c.size(a), c.size(a + 1));
            for t in grid(&[na, nb, na, nb]) {
                let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                for r in 1..=c.k() {
                    for s in 1..=c.k() + 1 - r {
                        let n = r + s - 1;
                        let lhs = c.br(&c.ce(a, i, j, r)?, &c.ce(a, h, k, s)?);
                        let mut rhs = Elem::zero();
                        for t in 1..s {
                            rhs.add_assign(&c.mul(&c.ce(a, i, k, t)?, &c.ce(a, h, j, n - t)?));
                        }
                        for t in 1..r {
                            rhs.sub_assign(&c.mul(&c.ce(a, i, k, t)?, &c.ce(a, h, j, n - t)?));
                        }
                        let idx = ix(&[a, i, j, h, k, r, s]);
                        if a == m && na == 1 && nb == 1 {
                            rep.check("ee-odd-degenerate", &idx, &lhs);
                        }
                        rep.check("ee-bracket", &idx, &lhs.minus(&rhs.scale(&se)));
                    }
                }
            }
            Ok(())
        }));
        out.push(Box::new(move |rep| {
            let (na, nb) = (c.size(a), c.size(a + 1));
            for t in grid(&[nb, na, nb, na]) {
                let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                for r in 1..=c.k() {
                    for s in 1..=c.k() + 1 - r {
                        let n = r + s - 1;
                        let lhs = c.br(&c.cf(a, i, j, r)?, &c.cf(a, h, k, s)?);
                        let mut rhs = Elem::zero();
                        for t in 1..r {
                            rhs.add_assign(&c.mul(&c.cf(a, i, k, n - t)?, &c.cf(a, h, j, t)?));
                        }
                        for t in 1..s {
                            rhs.sub_assign(&c.mul(&c.cf(a, i, k, n - t)?, &c.cf(a, h, j, t)?));
                        }
                        let idx = ix(&[a, i, j, h, k, r, s]);
                        if a == m && na == 1 && nb == 1 {
                            rep.check("ff-odd-degenerate", &idx, &lhs);
                        }
                        rep.check("ff-bracket", &idx, &lhs.minus(&rhs.scale(&sf)));
                    }
                }
            }
            Ok(())
        }));
        for b in 1..l {
            out.push(Box::new(move |rep| {
                let sg = neg(&c.sgn(b + 1));
                for t in grid(&[c.size(a), c.size(a + 1), c.size(b + 1), c.size(b)]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    for r in 1..=c.k() {
                        for s in 1..=c.k() + 1 - r {
                            let n = r + s - 1;
                            let lhs = c.br(&c.ce(a, i, j, r)?, &c.cf(b, h, k, s)?);
                            let mut rhs = Elem::zero();
                            if a == b {
                                for t in 0..=n {
                                    rhs.add_assign(&c.mul(&c.cd(a + 1, h, j, n - t)?, &c.cdp(a, i, k, t)?));
                                }
                            }
                            rep.check("ef-bracket", &ix(&[a, b, i, j, h, k, r, s]), &lhs.minus(&rhs.scale(&sg)));
                        }
                    }
                }
                Ok(())
            }));
        }
    }
}

/// Adjacent blocks: the shifted-order identities and the vanishing brackets.
fn adjacent_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    let l = c.len();
    for a in 1..l {
        for b in a + 1..l {
            out.push(Box::new(move |rep| {
                let sg = c.sgn(a + 1);
                let (na, na1, nb, nb1) = (c.size(a), c.size(a + 1), c.size(b), c.size(b + 1));
                for t in grid(&[na, na1, nb, nb1]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let idx = |r: usize, s: usize| ix(&[a, b, i, j, h, k, r, s]);
                    for r in 1..=c.k() {
                        for s in 1..=c.k() {
                            if b > a + 1 || h != j {
                                rep.check("ee-vanish", &idx(r, s), &c.br(&c.ce(a, i, j, r)?, &c.ce(b, h, k, s)?));
                            } else if r < c.k() && s < c.k() {
                                let lhs = c
                                    .br(&c.ce(a, i, j, r + 1)?, &c.ce(b, h, k, s)?)
                                    .minus(&c.br(&c.ce(a, i, j, r)?, &c.ce(b, h, k, s + 1)?));
                                let mut rhs = Elem::zero();
                                for q in 1..na1 + 1 {
                                    rhs.add_assign(&c.mul(&c.ce(a, i, q, r)?, &c.ce(b, q, k, s)?));
                                }
                                rep.check("ee-adjacent", &idx(r, s), &lhs.minus(&rhs.scale(&sg)));
                            }
                        }
                    }
                }
                for t in grid(&[na1, na, nb1, nb]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let idx = |r: usize, s: usize| ix(&[a, b, i, j, h, k, r, s]);
                    for r in 1..=c.k() {
                        for s in 1..=c.k() {
                            if b > a + 1 || i != k {
                                rep.check("ff-vanish", &idx(r, s), &c.br(&c.cf(a, i, j, r)?, &c.cf(b, h, k, s)?));
                            } else if r < c.k() && s < c.k() {
                                let lhs = c
                                    .br(&c.cf(a, i, j, r + 1)?, &c.cf(b, h, k, s)?)
                                    .minus(&c.br(&c.cf(a, i, j, r)?, &c.cf(b, h, k, s + 1)?));
                                let mut rhs = Elem::zero();
                                for q in 1..na1 + 1 {
                                    rhs.add_assign(&c.mul(&c.cf(b, h, q, s)?, &c.cf(a, q, j, r)?));
                                }
                                rep.check("ff-adjacent", &idx(r, s), &lhs.plus(&rhs.scale(&sg)));
                            }
                        }
                    }
                }
                Ok(())
            }));
        }
    }
}

/// `[X_a^{(r)}, [X_a^{(s)}, X_b^{(l)}]] + (r ↔ s) = 0` for `|a - b| >= 1`.
fn serre_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    let l = c.len();
    for a in 1..l {
        for b in 1..l {
            if a == b {
                continue;
            }
            for family in ["ee-serre", "ff-serre"] {
                out.push(Box::new(move |rep| {
                    let is_e = family == "ee-serre";
                    let x = |blk: usize, i: usize, j: usize, r: usize| {
                        if is_e {
                            c.ce(blk, i, j, r)
                        } else {
                            c.cf(blk, i, j, r)
                        }
                    };
                    let shape = |blk: usize| if is_e { (c.size(blk), c.size(blk + 1)) } else { (c.size(blk + 1), c.size(blk)) };
                    let ((ra, ca), (rb, cb)) = (shape(a), shape(b));
                    for t in grid(&[ra, ca, ra, ca, rb, cb]) {
                        let (i, j, h, k, f, g) = (t[0], t[1], t[2], t[3], t[4], t[5]);
                        for r in 1..=c.k() {
                            for s in r..=c.k() {
                                for q in 1..=c.k() {
                                    let z = x(b, f, g, q)?;
                                    let one = c.br(&x(a, i, j, r)?, &c.br(&x(a, h, k, s)?, &z));
                                    let two = c.br(&x(a, i, j, s)?, &c.br(&x(a, h, k, r)?, &z));
                                    rep.check(family, &ix(&[a, b, i, j, h, k, f, g, r, s, q]), &one.plus(&two));
                                }
                            }
                        }
                    }
                    Ok(())
                }));
            }
        }
    }
}

/// `[[X_{m-1}^{(r)}, X_m^{(1)}], [X_m^{(1)}, X_{m+1}^{(s)}]] = 0` when `m, n > 1`.
pub(crate) fn quartic_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>, max_sum: usize) {
    let m = c.mu().m();
    if m < 2 || c.mu().n() < 2 {
        return;
    }
    for family in ["eeee-quartic", "ffff-quartic"] {
        out.push(Box::new(move |rep| {
            let is_e = family == "eeee-quartic";
            let x = |blk: usize, i: usize, j: usize, r: usize| if is_e { c.ce(blk, i, j, r) } else { c.cf(blk, i, j, r) };
            let shape = |blk: usize| if is_e { [c.size(blk), c.size(blk + 1)] } else { [c.size(blk + 1), c.size(blk)] };
            let (p, q, w) = (shape(m - 1), shape(m), shape(m + 1));
            for t in grid(&[p[0], p[1], q[0], q[1], q[0], q[1], w[0], w[1]]) {
                for r in 1..=c.k() {
                    for s in 1..=c.k() {
                        if r + s > max_sum {
                            continue;
                        }
                        let left = c.br(&x(m - 1, t[0], t[1], r)?, &x(m, t[2], t[3], 1)?);
                        let right = c.br(&x(m, t[4], t[5], 1)?, &x(m + 1, t[6], t[7], s)?);
                        let mut idx = t.clone();
                        idx.extend([r, s]);
                        rep.check(family, &ix(&idx), &c.br(&left, &right));
                    }
                }
            }
            Ok(())
        }));
    }
}

pub(crate) fn jobs(c: Ctx<'_>) -> Vec<Job<'_>> {
    let mut out = vec![];
    levi::constant_jobs(c, &mut out);
    levi::inverse_jobs(c, &mut out);
    levi::bracket_jobs(c, &mut out);
    d_ef_jobs(c, &mut out);
    same_block_jobs(c, &mut out);
    adjacent_jobs(c, &mut out);
    serre_jobs(c, &mut out);
    quartic_jobs(c, &mut out, 2 * c.k());
    out
}
