//! Identities specific to three blocks `(μ1, μ2 | μ3)`, and the quartic
//! identities across the parity boundary.

use super::ctx::{grid, ix, Ctx};
use super::presentation::quartic_jobs;
use super::series_rel::cubic_jobs;
use super::Job;
use crate::series::{MultiSeries, Var};

const U: Var = Var::U;
const V: Var = Var::V;

fn sum(c: &Ctx<'_>, n: usize, term: impl Fn(usize) -> (MultiSeries, MultiSeries)) -> MultiSeries {
    let mut out = MultiSeries::zero_in(U, c.k() as i32);
    for q in 1..=n {
        let (x, z) = term(q);
        out = out.add(&c.smul(&x, &z));
    }
    out
}

fn e_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    let (n1, n2, n3) = (c.size(1), c.size(2), c.size(3));
    let e1 = move |i, j, v| c.ea(1, i, j, v);
    let e2 = move |i, j, v| c.ea(2, i, j, v);
    let e13 = move |i, j, v| c.e(1, 3, i, j, v);
    out.push(Box::new(move |rep| {
        for t in grid(&[n1, n2, n3, n2]) {
            let res = c.sbr(&e1(t[0], t[1], U), &c.fa(2, t[2], t[3], V));
            rep.check_series("e1-f2", &ix(&t), &res);
        }
        Ok(())
    }));
    out.push(Box::new(move |rep| {
        for t in grid(&[n1, n2, n2, n3]) {
            let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
            let lhs = c.sbr(&e1(i, j, U), &e2(h, k, V)).times_difference(U, V);
            let mut rhs = MultiSeries::zero_in(U, c.k() as i32);
            if h == j {
                rhs = sum(&c, n2, |q| (e1(i, q, U).sub(&e1(i, q, V)), e2(q, k, V)))
                    .add(&e13(i, k, V))
                    .sub(&e13(i, k, U));
            }
            rep.check_series("e1-e2", &ix(&t), &lhs.sub(&rhs));
        }
        Ok(())
    }));
    out.push(Box::new(move |rep| {
        for t in grid(&[n1, n3, n2, n3, n2]) {
            let (i, j, h, k, g) = (t[0], t[1], t[2], t[3], t[4]);
            let lhs = c.sbr(&e13(i, j, U), &e2(h, k, V));
            let rhs = c.smul(&e2(h, j, V), &c.sbr(&e1(i, g, U), &e2(g, k, V)));
            rep.check_series("e13-e2", &ix(&t), &lhs.sub(&rhs));
        }
        Ok(())
    }));
    out.push(Box::new(move |rep| {
        for t in grid(&[n1, n2, n1, n3, n2]) {
            let (i, j, h, k, g) = (t[0], t[1], t[2], t[3], t[4]);
            let inner = e13(h, k, V).sub(&sum(&c, n2, |q| (e1(h, q, V), e2(q, k, V))));
            let lhs = c.sbr(&e1(i, j, U), &inner);
            let rhs = c.smul(&c.sbr(&e1(i, g, U), &e2(g, k, V)), &e1(h, j, U)).neg();
            rep.check_series("e1-e13", &ix(&t), &lhs.sub(&rhs));
        }
        Ok(())
    }));
}

fn f_jobs<'a>(c: Ctx<'a>, out: &mut Vec<Job<'a>>) {
    let (n1, n2, n3) = (c.size(1), c.size(2), c.size(3));
    let f1 = move |i, j, v| c.fa(1, i, j, v);
    let f2 = move |i, j, v| c.fa(2, i, j, v);
    let f31 = move |i, j, v| c.f(3, 1, i, j, v);
    out.push(Box::new(move |rep| {
        for t in grid(&[n2, n1, n2, n3]) {
            let res = c.sbr(&f1(t[0], t[1], U), &c.ea(2, t[2], t[3], V));
            rep.check_series("f1-e2", &ix(&t), &res);
        }
        Ok(())
    }));
    out.push(Box::new(move |rep| {
        for t in grid(&[n2, n1, n3, n2]) {
            let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
            let lhs = c.sbr(&f1(i, j, U), &f2(h, k, V)).times_difference(U, V);
            let mut rhs = MultiSeries::zero_in(U, c.k() as i32);
            if i == k {
                rhs = sum(&c, n2, |q| (f2(h, q, V), f1(q, j, V).sub(&f1(q, j, U))))
                    .sub(&f31(h, j, V))
                    .add(&f31(h, j, U));
            }
            rep.check_series("f1-f2", &ix(&t), &lhs.sub(&rhs));
        }
        Ok(())
    }));
    out.push(Box::new(move |rep| {
        for t in grid(&[n3, n1, n3, n2, n2]) {
            let (i, j, h, k, g) = (t[0], t[1], t[2], t[3], t[4]);
            let lhs = c.sbr(&f31(i, j, U), &f2(h, k, V));
            let rhs = c.smul(&c.sbr(&f2(h, g, V), &f1(g, j, U)), &f2(i, k, V));
            rep.check_series("f31-f2", &ix(&t), &lhs.sub(&rhs));
        }
        Ok(())
    }));
    out.push(Box::new(move |rep| {
        for t in grid(&[n2, n1, n3, n1, n2]) {
            let (i, j, h, k, g) = (t[0], t[1], t[2], t[3], t[4]);
            let inner = sum(&c, n2, |q| (f2(h, q, V), f1(q, k, V))).sub(&f31(h, k, V));
            let lhs = c.sbr(&f1(i, j, U), &inner);
            let rhs = c.smul(&f1(i, k, U), &c.sbr(&f1(g, j, U), &f2(h, g, V)));
            rep.check_series("f1-f31", &ix(&t), &lhs.sub(&rhs));
        }
        Ok(())
    }));
}

/// Everything for a composition `(μ1, μ2 | μ3)`.
pub(crate) fn m2n1_jobs(c: Ctx<'_>) -> Vec<Job<'_>> {
    let mut out = vec![];
    e_jobs(c, &mut out);
    f_jobs(c, &mut out);
    cubic_jobs(c, 1, "cubic-", &mut out);
    out
}

/// The quartic identities at orders `r + s <= K`, and for `m = n = 2`
/// the commutation of `E_{1,3}(u)` with `E_2(v) E_3(v) - E_{2,4}(v)`.
pub(crate) fn lemma72_jobs(c: Ctx<'_>) -> Vec<Job<'_>> {
    let mut out = vec![];
    quartic_jobs(c, &mut out, c.k());
    if c.mu().m() == 2 && c.mu().n() == 2 {
        out.push(Box::new(move |rep| {
            let (n1, n2, n3, n4) = (c.size(1), c.size(2), c.size(3), c.size(4));
            for t in grid(&[n1, n3, n2, n4]) {
                let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                let prod = sum(&c, n3, |q| (c.ea(2, h, q, V), c.ea(3, q, k, V)));
                let res = c.sbr(&c.e(1, 3, i, j, U), &prod.sub(&c.e(2, 4, h, k, V)));
                rep.check_series("e13-e24", &ix(&t), &res);
            }
            Ok(())
        }));
    }
    out
}
