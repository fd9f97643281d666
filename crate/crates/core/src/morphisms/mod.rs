//! The maps ρ, ω, φ_k, ψ_k and ζ between super Yangians.
//!
//! A map is stored as its table of generator images up to a fixed order and
//! extended multiplicatively to elements and coefficientwise to series.

mod checks;

pub use checks::{verify_morphism, MorphismSpec};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Elem, Generator, Signature, Yangian};
use crate::error::{Error, Result};
use crate::matrix::{quasidet, MatrixSeries};
use crate::rational::Rational;
use crate::series::{MultiSeries, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// `t_ij(u) ↦ t_{M+N+1-i, M+N+1-j}(-u)` into (N|M)
    Rho,
    /// `T(u) ↦ T(-u)^{-1}`
    Omega,
    /// `t_ij^(r) ↦ t_{k+i, k+j}^(r)` into (k+M|N)
    Phi(usize),
    /// `ω ∘ φ_k ∘ ω` into (k+M|N)
    Psi(usize),
    /// `ρ ∘ ω` into (N|M)
    Zeta,
}

impl MapKind {
    pub fn target(self, sig: Signature) -> Signature {
        match self {
            MapKind::Rho | MapKind::Zeta => sig.swapped(),
            MapKind::Omega => sig,
            MapKind::Phi(k) | MapKind::Psi(k) => Signature { m: sig.m + k, n: sig.n },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Rho => "rho",
            MapKind::Omega => "omega",
            MapKind::Phi(_) => "phi",
            MapKind::Psi(_) => "psi",
            MapKind::Zeta => "zeta",
        }
    }

    /// Parses a map name; `shift` is used by `phi` and `psi` only.
    pub fn parse(name: &str, shift: usize) -> Result<Self> {
        match name {
            "rho" => Ok(MapKind::Rho),
            "omega" => Ok(MapKind::Omega),
            "phi" => Ok(MapKind::Phi(shift)),
            "psi" => Ok(MapKind::Psi(shift)),
            "zeta" => Ok(MapKind::Zeta),
            _ => Err(Error::Parse(format!("unknown map `{name}`"))),
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapKind::Phi(k) | MapKind::Psi(k) => write!(f, "{}_{k}", self.name()),
            _ => write!(f, "{}", self.name()),
        }
    }
}

impl FromStr for MapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('_') {
            Some((name, k)) => {
                let k = k.parse().map_err(|_| Error::Parse(format!("bad shift in `{s}`")))?;
                MapKind::parse(name, k)
            }
            None => MapKind::parse(s, 0),
        }
    }
}

/// A homomorphism given by its generator images of order `<= order`.
pub struct Morphism {
    kind: MapKind,
    source: Arc<Yangian>,
    target: Arc<Yangian>,
    order: usize,
    images: HashMap<Generator, Elem>,
}

/// `(-1)^r` times the `u^{-r}` coefficients of `T(u)^{-1}`, i.e. `T(-u)^{-1}`.
fn omega_table(y: &Yangian, order: usize) -> Result<MatrixSeries> {
    let t = MatrixSeries::build_t(y, Var::U, order);
    Ok(t.invert(y)?.map(|s| s.negate_var(Var::U)))
}

fn table_from_matrix(y: &Yangian, m: &MatrixSeries, order: usize, flip: bool) -> HashMap<Generator, Elem> {
    let d = y.signature().dim();
    let mut out = HashMap::new();
    for r in 1..=order {
        for i in 1..=d {
            for j in 1..=d {
                let (si, sj) = if flip { (d + 1 - i, d + 1 - j) } else { (i, j) };
                let c = m.get(si - 1, sj - 1).coeff_at(Var::U, r as i32).expect("within order");
                out.insert(Generator::new(i, j, r), c);
            }
        }
    }
    out
}

impl Morphism {
    /// Builds a map out of `source`; `target` must have the matching signature.
    pub fn new(kind: MapKind, source: Arc<Yangian>, target: Arc<Yangian>, order: usize) -> Result<Self> {
        let sig = source.signature();
        if kind.target(sig) != target.signature() {
            return Err(Error::DimensionMismatch(format!(
                "{kind} maps {sig} to {}, not {}",
                kind.target(sig),
                target.signature()
            )));
        }
        let d = sig.dim();
        let mut images = HashMap::new();
        match kind {
            MapKind::Rho => {
                for g in source.generators(order) {
                    let x = target.t(d + 1 - g.i(), d + 1 - g.j(), g.r());
                    images.insert(g, x.scale(&Rational::sign(g.r() % 2 == 1)));
                }
            }
            MapKind::Phi(k) => {
                for g in source.generators(order) {
                    images.insert(g, target.t(k + g.i(), k + g.j(), g.r()));
                }
            }
            MapKind::Omega => {
                images = table_from_matrix(&source, &omega_table(&source, order)?, order, false);
            }
            MapKind::Zeta => {
                let omega = Morphism::new(MapKind::Omega, source.clone(), source.clone(), order)?;
                let rho = Morphism::new(MapKind::Rho, source.clone(), target.clone(), order)?;
                for g in source.generators(order) {
                    images.insert(g, rho.apply(omega.image(g)?)?);
                }
            }
            MapKind::Psi(k) => {
                let omega_s = Morphism::new(MapKind::Omega, source.clone(), source.clone(), order)?;
                let phi = Morphism::new(MapKind::Phi(k), source.clone(), target.clone(), order)?;
                let omega_t = Morphism::new(MapKind::Omega, target.clone(), target.clone(), order)?;
                for g in source.generators(order) {
                    images.insert(g, omega_t.apply(&phi.apply(omega_s.image(g)?)?)?);
                }
            }
        }
        Ok(Morphism { kind, source, target, order, images })
    }

    /// Convenience constructor creating fresh algebras.
    pub fn build(kind: MapKind, sig: Signature, order: usize) -> Result<Self> {
        let source = Arc::new(Yangian::new(sig));
        let target = if kind.target(sig) == sig {
            source.clone()
        } else {
            Arc::new(Yangian::new(kind.target(sig)))
        };
        Morphism::new(kind, source, target, order)
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn source(&self) -> &Arc<Yangian> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Yangian> {
        &self.target
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn image(&self, g: Generator) -> Result<&Elem> {
        self.images.get(&g).ok_or_else(|| {
            if g.r() > self.order {
                Error::OrderTooSmall { have: self.order, need: g.r() }
            } else {
                Error::IndexOutOfRange(format!("{g:?} is not a generator of {}", self.source.signature()))
            }
        })
    }

    /// Image of an element: each word is sent to the ordered product of the
    /// images of its letters.
    pub fn apply(&self, x: &Elem) -> Result<Elem> {
        let mut out = Elem::zero();
        for (w, c) in x.terms() {
            let mut acc = Elem::one();
            for &g in w.iter() {
                acc = self.target.multiply(&acc, self.image(g)?);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    pub fn apply_series(&self, s: &MultiSeries) -> Result<MultiSeries> {
        let mut err = None;
        let out = s.map_coeffs(|c| match self.apply(c) {
            Ok(x) => x,
            Err(e) => {
                err.get_or_insert(e);
                Elem::zero()
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    pub fn apply_matrix(&self, m: &MatrixSeries) -> Result<MatrixSeries> {
        let mut out = m.clone();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, self.apply_series(m.get(i, j))?);
            }
        }
        Ok(out)
    }
}

/// `ψ_k(T(u))` in (k+M|N) from the bordered quasideterminant of the target
/// `T(u)`; entry `(i, j)` is `ψ_k(t_{i+1, j+1}(u))`.
pub fn psi_quasidet(target: &Yangian, k: usize, order: usize) -> Result<MatrixSeries> {
    let d = target.signature().dim();
    if k > target.signature().m {
        return Err(Error::DimensionMismatch(format!("shift {k} exceeds M in {}", target.signature())));
    }
    let t = MatrixSeries::build_t(target, Var::U, order);
    if k == 0 {
        return Ok(t);
    }
    quasidet(
        target,
        &t.submatrix(0, k, 0, k),
        &t.submatrix(0, k, k, d),
        &t.submatrix(k, d, 0, k),
        &t.submatrix(k, d, k, d),
    )
}

/// `ζ(T(u))` in (N|M): entry `(i, j)` (1-based) is `t'_{M+N+1-i, M+N+1-j}(u)`
/// of the target.
pub fn zeta_inverse_entries(target: &Yangian, order: usize) -> Result<MatrixSeries> {
    let d = target.signature().dim();
    let tinv = MatrixSeries::build_t(target, Var::U, order).invert(target)?;
    Ok(MatrixSeries::from_fn(d, d, |i, j| tinv.get(d - 1 - i, d - 1 - j).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(m: usize, n: usize) -> Signature {
        Signature::new(m, n).unwrap()
    }

    #[test]
    fn rho_on_generators() {
        let f = Morphism::build(MapKind::Rho, sig(1, 1), 3).unwrap();
        let y = f.target();
        assert_eq!(f.image(Generator::new(1, 1, 1)).unwrap(), &y.t(2, 2, 1).neg());
        assert_eq!(f.image(Generator::new(1, 2, 2)).unwrap(), &y.t(2, 1, 2));
        assert!(matches!(f.image(Generator::new(1, 1, 4)), Err(Error::OrderTooSmall { .. })));
    }

    #[test]
    fn omega_first_order_and_unit() {
        let f = Morphism::build(MapKind::Omega, sig(2, 1), 3).unwrap();
        let y = f.target();
        for (i, j) in [(1, 2), (3, 1), (2, 2)] {
            assert_eq!(f.image(Generator::new(i, j, 1)).unwrap(), &y.t(i, j, 1));
        }
        assert_eq!(f.apply(&Elem::one()).unwrap(), Elem::one());
    }

    #[test]
    fn zeta_of_t11_in_one_one() {
        let f = Morphism::build(MapKind::Zeta, sig(1, 1), 2).unwrap();
        let y = f.target();
        let s = MultiSeries::univariate(Var::U, 2, (0..=2).map(|r| f.source().t(1, 1, r)).collect());
        let img = f.apply_series(&s).unwrap();
        let t22 = y.t(2, 2, 1);
        let want2 = y
            .multiply(&t22, &t22)
            .plus(&y.multiply(&y.t(2, 1, 1), &y.t(1, 2, 1)))
            .minus(&y.t(2, 2, 2));
        assert_eq!(img.coeff_at(Var::U, 0).unwrap(), Elem::one());
        assert_eq!(img.coeff_at(Var::U, 1).unwrap(), t22.neg());
        assert_eq!(img.coeff_at(Var::U, 2).unwrap(), want2);
        let direct = zeta_inverse_entries(y, 2).unwrap();
        assert_eq!(direct.get(0, 0), &img);
    }

    #[test]
    fn psi_zero_is_identity() {
        let f = Morphism::build(MapKind::Psi(0), sig(1, 1), 3).unwrap();
        for g in f.source().generators(3) {
            assert_eq!(f.image(g).unwrap(), &f.target().t(g.i(), g.j(), g.r()));
        }
    }

    #[test]
    fn psi_one_on_t11() {
        let f = Morphism::build(MapKind::Psi(1), sig(1, 1), 3).unwrap();
        let y = f.target();
        let t = MatrixSeries::build_t(y, Var::U, 3);
        let t11inv = t.submatrix(0, 1, 0, 1).invert(y).unwrap();
        let want = t.get(1, 1).sub(&t.get(1, 0).mul(y, t11inv.get(0, 0)).mul(y, t.get(0, 1)));
        for r in 1..=3 {
            assert_eq!(f.image(Generator::new(1, 1, r)).unwrap(), &want.coeff_at(Var::U, r as i32).unwrap());
        }
    }

    #[test]
    fn map_names() {
        assert_eq!("psi_2".parse::<MapKind>().unwrap(), MapKind::Psi(2));
        assert_eq!("zeta".parse::<MapKind>().unwrap(), MapKind::Zeta);
        assert!("sigma".parse::<MapKind>().is_err());
        assert_eq!(MapKind::Psi(1).target(sig(1, 1)), sig(2, 1));
    }
}
