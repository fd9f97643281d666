use std::sync::Arc;

use rayon::prelude::*;

use super::{psi_quasidet, zeta_inverse_entries, MapKind, Morphism};
use crate::algebra::{Elem, Generator, Signature, Yangian};
use crate::error::Result;
use crate::gauss::{compositions_of, gauss_blocks, tilde_e, tilde_f, Composition};
use crate::matrix::MatrixSeries;
use crate::rational::Rational;
use crate::report::VerifyReport;
use crate::series::Var;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    pub kind: MapKind,
    pub source: Signature,
}

impl MorphismSpec {
    pub fn target(&self) -> Signature {
        self.kind.target(self.source)
    }
}

fn gen_idx(g: Generator) -> [i64; 3] {
    [g.i() as i64, g.j() as i64, g.r() as i64]
}

/// Images of both sides of the defining relation, for all generator pairs
/// with `r + s <= order`.
fn check_homomorphism(f: &Morphism, report: &mut VerifyReport) {
    let src = f.source();
    let tgt = f.target();
    let k = f.order();
    let gens = src.generators(k);
    let pairs: Vec<(Generator, Generator)> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a.r() + b.r() <= k)
        .collect();
    let residuals: Vec<Elem> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let lhs = f.apply(&src.defining_bracket(a, b)).expect("orders within table");
            let rhs = tgt.super_commutator(f.image(a).unwrap(), f.image(b).unwrap());
            lhs.minus(&rhs)
        })
        .collect();
    for ((a, b), res) in pairs.iter().zip(&residuals) {
        let mut ix = gen_idx(*a).to_vec();
        ix.extend(gen_idx(*b));
        report.check("homomorphism", &ix, res);
    }
    for g in gens {
        let want = src.is_odd(g);
        let img = f.image(g).unwrap();
        let ok = img.is_zero() || tgt.element_parity(img) == Some(want);
        report.check_that("parity", &gen_idx(g), ok, "image is not homogeneous of the generator's parity");
    }
}

/// `g ∘ f` against `expected` on every generator of `f`'s source.
fn check_composite(
    relation: &str,
    f: &Morphism,
    g: &Morphism,
    expected: impl Fn(Generator) -> Elem,
    report: &mut VerifyReport,
) -> Result<()> {
    for gen in f.source().generators(f.order()) {
        let img = g.apply(f.image(gen)?)?;
        report.check(relation, &gen_idx(gen), &img.minus(&expected(gen)));
    }
    Ok(())
}

fn flip(m: &MatrixSeries) -> MatrixSeries {
    let (r, c) = (m.rows(), m.cols());
    MatrixSeries::from_fn(r, c, |i, j| m.get(r - 1 - i, c - 1 - j).clone())
}

fn check_matrix(report: &mut VerifyReport, relation: &str, idx: &[i64], lhs: &MatrixSeries, rhs: &MatrixSeries) -> Result<()> {
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

fn check_psi(f: &Morphism, k: usize, report: &mut VerifyReport) -> Result<()> {
    let src = f.source().clone();
    let tgt = f.target().clone();
    let order = f.order();
    let sig = src.signature();

    let q = psi_quasidet(&tgt, k, order)?;
    for g in src.generators(order) {
        let want = q.get(g.i() - 1, g.j() - 1).coeff_at(Var::U, g.r() as i32)?;
        report.check("psi-quasidet", &gen_idx(g), &f.image(g)?.minus(&want));
    }

    // the north-west k×k corner supercommutes with the image
    for a in 1..=k {
        for b in 1..=k {
            for r in 1..=order {
                let x = tgt.t(a, b, r);
                for g in src.generators(order) {
                    let mut ix = vec![a as i64, b as i64, r as i64];
                    ix.extend(gen_idx(g));
                    report.check("corner-commute", &ix, &tgt.super_commutator(&x, f.image(g)?));
                }
            }
        }
    }

    // ψ_{k-l} ∘ ψ_l = ψ_k
    for l in 0..=k {
        let mid = Arc::new(Yangian::new(Signature { m: sig.m + l, n: sig.n }));
        let first = Morphism::new(MapKind::Psi(l), src.clone(), mid.clone(), order)?;
        let second = Morphism::new(MapKind::Psi(k - l), mid, tgt.clone(), order)?;
        check_composite(&format!("psi-compose-{l}"), &first, &second, |g| f.image(g).unwrap().clone(), report)?;
    }

    // shifted Gauss blocks: D_a, E_a, F_a of (κ, μ') are the images of D_1, E_1, F_1 of μ'
    for prefix in compositions_of(k) {
        for tail in Composition::all(sig) {
            let lambda: Vec<usize> = prefix.iter().chain(&tail.parts()[..tail.m()]).copied().collect();
            let mu = Composition::new(&lambda, &tail.parts()[tail.m()..])?;
            let a = prefix.len() + 1;
            let gs = gauss_blocks(&src, &tail, order)?;
            let gt = gauss_blocks(&tgt, &mu, order)?;
            let mut ix: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
            ix.push(mu.m() as i64);
            check_matrix(report, "psi-d", &ix, &f.apply_matrix(gs.d(1))?, gt.d(a))?;
            if tail.len() >= 2 {
                check_matrix(report, "psi-e", &ix, &f.apply_matrix(gs.e(1, 2))?, gt.e(a, a + 1))?;
                check_matrix(report, "psi-f", &ix, &f.apply_matrix(gs.f(2, 1))?, gt.f(a + 1, a))?;
            }
        }
    }
    Ok(())
}

fn check_zeta(f: &Morphism, report: &mut VerifyReport) -> Result<()> {
    let src = f.source().clone();
    let tgt = f.target().clone();
    let order = f.order();
    let z = zeta_inverse_entries(&tgt, order)?;
    for g in src.generators(order) {
        let want = z.get(g.i() - 1, g.j() - 1).coeff_at(Var::U, g.r() as i32)?;
        report.check("zeta-inverse", &gen_idx(g), &f.image(g)?.minus(&want));
    }
    let minus = Rational::from_int(-1);
    for mu in Composition::all(src.signature()) {
        let l = mu.len();
        let gs = gauss_blocks(&src, &mu, order)?;
        let gt = gauss_blocks(&tgt, &mu.reversed(), order)?;
        let base: Vec<i64> = mu.parts().iter().map(|&p| p as i64).chain([mu.m() as i64]).collect();
        let with = |xs: &[usize]| -> Vec<i64> {
            let mut v = base.clone();
            v.extend(xs.iter().map(|&x| x as i64));
            v
        };
        for a in 1..=l {
            check_matrix(report, "zeta-d", &with(&[a]), &f.apply_matrix(gs.d(a))?, &flip(gt.dp(l + 1 - a)))?;
        }
        for a in 1..l {
            let ix = with(&[a]);
            let e = f.apply_matrix(gs.e(a, a + 1))?;
            check_matrix(report, "zeta-e-adjacent", &ix, &e, &flip(gt.f(l + 1 - a, l - a)).scale(&minus))?;
            let fa = f.apply_matrix(gs.f(a + 1, a))?;
            check_matrix(report, "zeta-f-adjacent", &ix, &fa, &flip(gt.e(l - a, l + 1 - a)).scale(&minus))?;
        }
        for a in 1..=l {
            for b in a + 1..=l {
                let ix = with(&[a, b]);
                let e = f.apply_matrix(gs.e(a, b))?;
                check_matrix(report, "zeta-e", &ix, &e, &flip(&tilde_f(&tgt, &gt, l + 1 - a, l + 1 - b)?))?;
                let fb = f.apply_matrix(gs.f(b, a))?;
                check_matrix(report, "zeta-f", &ix, &fb, &flip(&tilde_e(&tgt, &gt, l + 1 - b, l + 1 - a)?))?;
            }
        }
    }
    Ok(())
}

/// Runs every check that applies to the map: the defining relation is
/// preserved, parities are kept, involutions square to the identity, and
/// the map-specific block formulas hold.
pub fn verify_morphism(spec: &MorphismSpec, order: usize) -> Result<VerifyReport> {
    let f = Morphism::build(spec.kind, spec.source, order)?;
    let mut report = VerifyReport::new();
    check_homomorphism(&f, &mut report);
    let src = f.source().clone();
    let same = |g: Generator| src.t(g.i(), g.j(), g.r());
    match spec.kind {
        MapKind::Rho | MapKind::Zeta => {
            let back = Morphism::new(spec.kind, f.target().clone(), src.clone(), order)?;
            check_composite("involution", &f, &back, same, &mut report)?;
        }
        MapKind::Omega => check_composite("involution", &f, &f, same, &mut report)?,
        MapKind::Psi(_) | MapKind::Phi(_) => {}
    }
    match spec.kind {
        MapKind::Psi(k) => check_psi(&f, k, &mut report)?,
        MapKind::Zeta => check_zeta(&f, &mut report)?,
        _ => {}
    }
    Ok(report.finish())
}
