//! Generating-series relations, checked after clearing `(u - v)`.

use super::ctx::{grid, ix, Ctx};
use super::Job;
use crate::series::{MultiSeries, Var};

const U: Var = Var::U;
const V: Var = Var::V;
const W: Var = Var::W;

fn cleared(c: &Ctx<'_>, x: &MultiSeries, z: &MultiSeries) -> MultiSeries {
    c.sbr(x, z).times_difference(U, V)
}

/// Blocks `lo..=hi` of one parity; `D_a` for `a` in the range and `E_a`,
/// `F_a` whenever `a + 1` is in the range too.
#[derive(Clone, Copy)]
struct Part {
    lo: usize,
    hi: usize,
}

impl Part {
    fn ds(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    fn efs(self) -> std::ops::Range<usize> {
        self.lo..self.hi
    }
}

fn d_ef_jobs<'a>(c: Ctx<'a>, p: Part, out: &mut Vec<Job<'a>>) {
    for a in p.ds() {
        for b in p.efs() {
            out.push(Box::new(move |rep| {
                let sg = c.sgn(b);
                let (na, nb, nb1) = (c.size(a), c.size(b), c.size(b + 1));
                for t in grid(&[na, na, nb, nb1]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let lhs = cleared(&c, &c.d(a, i, j, U), &c.ea(b, h, k, V));
                    let mut rhs = MultiSeries::zero_in(U, c.k() as i32);
                    if a == b && h == j {
                        for p in 1..=na {
                            let diff = c.ea(a, p, k, V).sub(&c.ea(a, p, k, U));
                            rhs = rhs.add(&c.smul(&c.d(a, i, p, U), &diff));
                        }
                    }
                    if a == b + 1 {
                        let diff = c.ea(b, h, j, V).sub(&c.ea(b, h, j, U));
                        rhs = rhs.sub(&c.smul(&c.d(a, i, k, U), &diff));
                    }
                    rep.check_series("de", &ix(&[a, b, i, j, h, k]), &lhs.sub(&rhs.scale(&sg)));
                }
                for t in grid(&[na, na, nb1, nb]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let lhs = cleared(&c, &c.d(a, i, j, U), &c.fa(b, h, k, V));
                    let mut rhs = MultiSeries::zero_in(U, c.k() as i32);
                    if a == b && k == i {
                        for p in 1..=na {
                            let diff = c.fa(b, h, p, V).sub(&c.fa(b, h, p, U));
                            rhs = rhs.sub(&c.smul(&diff, &c.d(a, p, j, U)));
                        }
                    }
                    if a == b + 1 {
                        let diff = c.fa(b, i, k, V).sub(&c.fa(b, i, k, U));
                        rhs = rhs.add(&c.smul(&diff, &c.d(a, h, j, U)));
                    }
                    rep.check_series("df", &ix(&[a, b, i, j, h, k]), &lhs.sub(&rhs.scale(&sg)));
                }
                Ok(())
            }));
        }
    }
}

fn ef_jobs<'a>(c: Ctx<'a>, p: Part, out: &mut Vec<Job<'a>>) {
    for a in p.efs() {
        for b in p.efs() {
            out.push(Box::new(move |rep| {
                let sg = c.sgn(b + 1);
                for t in grid(&[c.size(a), c.size(a + 1), c.size(b + 1), c.size(b)]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let lhs = cleared(&c, &c.ea(a, i, j, U), &c.fa(b, h, k, V));
                    let idx = ix(&[a, b, i, j, h, k]);
                    if a != b {
                        rep.check_series("ef", &idx, &lhs);
                        continue;
                    }
                    let rhs = c
                        .smul(&c.dp(a, i, k, U), &c.d(a + 1, h, j, U))
                        .sub(&c.smul(&c.d(a + 1, h, j, V), &c.dp(a, i, k, V)))
                        .scale(&sg);
                    rep.check_series("ef", &idx, &lhs.sub(&rhs));
                }
                Ok(())
            }));
        }
    }
}

fn same_block_jobs<'a>(c: Ctx<'a>, p: Part, out: &mut Vec<Job<'a>>) {
    for a in p.efs() {
        out.push(Box::new(move |rep| {
            let sg = c.sgn(a);
            let (na, nb) = (c.size(a), c.size(a + 1));
            for t in grid(&[na, nb, na, nb]) {
                let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                let lhs = cleared(&c, &c.ea(a, i, j, U), &c.ea(a, h, k, V));
                let x = c.ea(a, i, k, U).sub(&c.ea(a, i, k, V));
                let z = c.ea(a, h, j, U).sub(&c.ea(a, h, j, V));
                rep.check_series("ee", &ix(&[a, i, j, h, k]), &lhs.sub(&c.smul(&x, &z).scale(&sg)));
            }
            for t in grid(&[nb, na, nb, na]) {
                let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                let lhs = cleared(&c, &c.fa(a, i, j, U), &c.fa(a, h, k, V));
                let x = c.fa(a, i, k, U).sub(&c.fa(a, i, k, V));
                let z = c.fa(a, h, j, U).sub(&c.fa(a, h, j, V));
                let rhs = c.smul(&x, &z).scale(&sg).neg();
                rep.check_series("ff", &ix(&[a, i, j, h, k]), &lhs.sub(&rhs));
            }
            Ok(())
        }));
    }
}

fn adjacent_jobs<'a>(c: Ctx<'a>, p: Part, out: &mut Vec<Job<'a>>) {
    for a in p.efs() {
        for b in a + 1..p.hi {
            out.push(Box::new(move |rep| {
                let sg = c.sgn(a + 1);
                let (na, na1, nb, nb1) = (c.size(a), c.size(a + 1), c.size(b), c.size(b + 1));
                for t in grid(&[na, na1, nb, nb1]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let lhs = c.sbr(&c.ea(a, i, j, U), &c.ea(b, h, k, V));
                    let idx = ix(&[a, b, i, j, h, k]);
                    if b > a + 1 || h != j {
                        rep.check_series("ee-vanish", &idx, &lhs);
                        continue;
                    }
                    let mut rhs = c.e(a, a + 2, i, k, V).sub(&c.e(a, a + 2, i, k, U));
                    for q in 1..=na1 {
                        let diff = c.ea(a, i, q, U).sub(&c.ea(a, i, q, V));
                        rhs = rhs.add(&c.smul(&diff, &c.ea(b, q, k, V)));
                    }
                    rep.check_series("ee-adjacent", &idx, &lhs.times_difference(U, V).sub(&rhs.scale(&sg)));
                }
                for t in grid(&[na1, na, nb1, nb]) {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let lhs = c.sbr(&c.fa(a, i, j, U), &c.fa(b, h, k, V));
                    let idx = ix(&[a, b, i, j, h, k]);
                    if b > a + 1 || i != k {
                        rep.check_series("ff-vanish", &idx, &lhs);
                        continue;
                    }
                    let mut rhs = c.f(a + 2, a, h, j, U).sub(&c.f(a + 2, a, h, j, V));
                    for q in 1..=na1 {
                        let diff = c.fa(a, q, j, V).sub(&c.fa(a, q, j, U));
                        rhs = rhs.add(&c.smul(&c.fa(b, h, q, V), &diff));
                    }
                    rep.check_series("ff-adjacent", &idx, &lhs.times_difference(U, V).sub(&rhs.scale(&sg)));
                }
                Ok(())
            }));
        }
    }
}

/// The cubic identities between `X_a` and `X_{a+1}` for `X = E, F`:
/// `a`, `b` with a repeated variable, `c`, `d` symmetrised over two variables.
pub(crate) fn cubic_jobs<'a>(c: Ctx<'a>, a: usize, prefix: &'static str, out: &mut Vec<Job<'a>>) {
    for is_e in [true, false] {
        for form in ['a', 'b', 'c', 'd'] {
            out.push(Box::new(move |rep| {
                let x = |blk: usize, i: usize, j: usize, v: Var| if is_e { c.ea(blk, i, j, v) } else { c.fa(blk, i, j, v) };
                let shape = |blk: usize| if is_e { [c.size(blk), c.size(blk + 1)] } else { [c.size(blk + 1), c.size(blk)] };
                let (one, two) = (shape(a), shape(a + 1));
                let third = if form == 'b' || form == 'd' { one } else { two };
                let name = format!("{prefix}{}", if is_e { form } else { (form as u8 + 4) as char });
                for t in grid(&[one[0], one[1], third[0], third[1], two[0], two[1]]) {
                    let (i, j, h, k, f, g) = (t[0], t[1], t[2], t[3], t[4], t[5]);
                    let res = match form {
                        'a' => c.sbr(&c.sbr(&x(a, i, j, U), &x(a + 1, h, k, V)), &x(a + 1, f, g, V)),
                        'b' => c.sbr(&x(a, i, j, U), &c.sbr(&x(a, h, k, U), &x(a + 1, f, g, V))),
                        'c' => c
                            .sbr(&c.sbr(&x(a, i, j, U), &x(a + 1, h, k, V)), &x(a + 1, f, g, W))
                            .add(&c.sbr(&c.sbr(&x(a, i, j, U), &x(a + 1, h, k, W)), &x(a + 1, f, g, V))),
                        _ => c
                            .sbr(&x(a, i, j, U), &c.sbr(&x(a, h, k, V), &x(a + 1, f, g, W)))
                            .add(&c.sbr(&x(a, i, j, V), &c.sbr(&x(a, h, k, U), &x(a + 1, f, g, W)))),
                    };
                    rep.check_series(&name, &ix(&[a, i, j, h, k, f, g]), &res);
                }
                Ok(())
            }));
        }
    }
}

/// Relations among generators lying entirely inside the even blocks, or
/// entirely inside the odd blocks.
pub(crate) fn even_jobs(c: Ctx<'_>) -> Vec<Job<'_>> {
    let mut out = vec![];
    let (m, l) = (c.mu().m(), c.len());
    let parts = [Part { lo: 1, hi: m }, Part { lo: m + 1, hi: l }];
    for p in parts {
        if p.hi <= p.lo {
            continue;
        }
        d_ef_jobs(c, p, &mut out);
        ef_jobs(c, p, &mut out);
        same_block_jobs(c, p, &mut out);
        adjacent_jobs(c, p, &mut out);
        for a in p.lo..p.hi.saturating_sub(1) {
            cubic_jobs(c, a, "cubic-", &mut out);
        }
    }
    out
}

/// The five relations for a composition `(M | N)` with two blocks.
pub(crate) fn mn11_jobs(c: Ctx<'_>) -> Vec<Job<'_>> {
    let mut out: Vec<Job<'_>> = vec![];
    let (mm, nn) = (c.size(1), c.size(2));
    let e = move |i, j, v| c.ea(1, i, j, v);
    let f = move |i, j, v| c.fa(1, i, j, v);
    for a in 1..=2usize {
        out.push(Box::new(move |rep| {
            let na = c.size(a);
            for t in grid(&[na, na, mm, nn]) {
                let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                let lhs = cleared(&c, &c.d(a, i, j, U), &e(h, k, V));
                let mut rhs = MultiSeries::zero_in(U, c.k() as i32);
                if a == 1 && h == j {
                    for p in 1..=mm {
                        rhs = rhs.add(&c.smul(&c.d(1, i, p, U), &e(p, k, V).sub(&e(p, k, U))));
                    }
                }
                if a == 2 {
                    rhs = c.smul(&c.d(2, i, k, U), &e(h, j, V).sub(&e(h, j, U)));
                }
                rep.check_series("de", &ix(&[a, i, j, h, k]), &lhs.sub(&rhs));
            }
            for t in grid(&[na, na, nn, mm]) {
                let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                let lhs = cleared(&c, &c.d(a, i, j, U), &f(h, k, V));
                let mut rhs = MultiSeries::zero_in(U, c.k() as i32);
                if a == 1 && k == i {
                    for p in 1..=mm {
                        rhs = rhs.add(&c.smul(&f(h, p, U).sub(&f(h, p, V)), &c.d(1, p, j, U)));
                    }
                }
                if a == 2 {
                    rhs = c.smul(&f(i, k, U).sub(&f(i, k, V)), &c.d(2, h, j, U));
                }
                rep.check_series("df", &ix(&[a, i, j, h, k]), &lhs.sub(&rhs));
            }
            Ok(())
        }));
    }
    out.push(Box::new(move |rep| {
        for t in grid(&[mm, nn, nn, mm]) {
            let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
            let lhs = cleared(&c, &e(i, j, U), &f(h, k, V));
            let rhs = c
                .smul(&c.dp(1, i, k, V), &c.d(2, h, j, V))
                .sub(&c.smul(&c.d(2, h, j, U), &c.dp(1, i, k, U)));
            rep.check_series("ef", &ix(&[i, j, h, k]), &lhs.sub(&rhs));
        }
        Ok(())
    }));
    out.push(Box::new(move |rep| {
        for t in grid(&[mm, nn, mm, nn]) {
            let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
            let lhs = cleared(&c, &e(i, j, U), &e(h, k, V));
            let rhs = c.smul(&e(i, k, U).sub(&e(i, k, V)), &e(h, j, V).sub(&e(h, j, U)));
            rep.check_series("ee", &ix(&[i, j, h, k]), &lhs.sub(&rhs));
        }
        for t in grid(&[nn, mm, nn, mm]) {
            let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
            let lhs = cleared(&c, &f(i, j, U), &f(h, k, V));
            let rhs = c.smul(&f(i, k, U).sub(&f(i, k, V)), &f(h, j, V).sub(&f(h, j, U)));
            rep.check_series("ff", &ix(&[i, j, h, k]), &lhs.sub(&rhs));
        }
        Ok(())
    }));
    out
}
