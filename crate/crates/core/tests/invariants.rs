use proptest::prelude::*;

use syk::algebra::{Elem, Generator, Signature, Word, Yangian};
use syk::pbw::{LoopAlgebra, LoopElement};
use syk::Rational;

fn yangian(m: usize, n: usize) -> Yangian {
    Yangian::new(Signature::new(m, n).unwrap())
}

fn generator(d: usize, k: usize) -> impl Strategy<Value = (usize, usize, usize)> {
    (1..=d, 1..=d, 1..=k)
}

fn element(d: usize) -> impl Strategy<Value = Elem> {
    let term = (prop::collection::vec(generator(d, 3), 1..=2), -3i64..=3, 1i64..=2);
    prop::collection::vec(term, 1..=3).prop_map(|ts| {
        let mut x = Elem::zero();
        for (w, a, b) in ts {
            let w: Word<Generator> = w.into_iter().map(|(i, j, r)| Generator::new(i, j, r)).collect();
            x.add_term(w, Rational::new(a, b));
        }
        x
    })
}

fn sign(odd: bool) -> Rational {
    Rational::from(if odd { -1 } else { 1 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(x in element(3)) {
        let y = yangian(2, 1);
        let nf = y.normal_form(&x);
        prop_assert!(y.is_normal(&nf));
        prop_assert_eq!(y.normal_form(&nf), nf);
    }

    #[test]
    fn product_is_associative(a in generator(3, 3), b in generator(3, 3), c in generator(3, 3)) {
        let y = yangian(1, 2);
        let (a, b, c) = (y.t(a.0, a.1, a.2), y.t(b.0, b.1, b.2), y.t(c.0, c.1, c.2));
        prop_assert_eq!(y.multiply(&y.multiply(&a, &b), &c), y.multiply(&a, &y.multiply(&b, &c)));
    }

    #[test]
    fn bracket_is_super_antisymmetric(a in generator(4, 3), b in generator(4, 3)) {
        let y = yangian(2, 2);
        let (ga, gb) = (Generator::new(a.0, a.1, a.2), Generator::new(b.0, b.1, b.2));
        let (x, z) = (Elem::symbol(ga), Elem::symbol(gb));
        let s = sign(y.is_odd(ga) && y.is_odd(gb));
        prop_assert_eq!(y.super_commutator(&x, &z), y.super_commutator(&z, &x).scale(&s).neg());
    }

    #[test]
    fn yangian_super_jacobi(a in generator(2, 2), b in generator(2, 2), c in generator(2, 2)) {
        let y = yangian(1, 1);
        let g = [a, b, c].map(|(i, j, r)| Generator::new(i, j, r));
        let p = g.map(|x| y.is_odd(x));
        let e = g.map(Elem::symbol);
        let br = |u: &Elem, v: &Elem| y.super_commutator(u, v);
        // (-1)^{|a||c|}[a,[b,c]] + cyclic = 0
        let mut sum = br(&e[0], &br(&e[1], &e[2])).scale(&sign(p[0] && p[2]));
        sum.add_assign(&br(&e[1], &br(&e[2], &e[0])).scale(&sign(p[1] && p[0])));
        sum.add_assign(&br(&e[2], &br(&e[0], &e[1])).scale(&sign(p[2] && p[1])));
        prop_assert!(sum.is_zero(), "{:?}", sum);
    }

    #[test]
    fn loop_super_jacobi(a in (1..=3usize, 1..=3usize, 0..=2usize), b in (1..=3usize, 1..=3usize, 0..=2usize), c in (1..=3usize, 1..=3usize, 0..=2usize)) {
        let l = LoopAlgebra::new(Signature::new(1, 2).unwrap());
        let e: [LoopElement; 3] = [a, b, c].map(|(i, j, s)| l.e(i, j, s));
        let p = [a, b, c].map(|(i, j, _)| (i > 1) != (j > 1));
        let br = |u: &LoopElement, v: &LoopElement| l.super_commutator(u, v);
        let mut sum = br(&e[0], &br(&e[1], &e[2])).scale(&sign(p[0] && p[2]));
        sum.add_assign(&br(&e[1], &br(&e[2], &e[0])).scale(&sign(p[1] && p[0])));
        sum.add_assign(&br(&e[2], &br(&e[0], &e[1])).scale(&sign(p[2] && p[1])));
        prop_assert!(sum.is_zero(), "{:?}", sum);
    }
}
