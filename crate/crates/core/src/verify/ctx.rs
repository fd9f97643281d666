use crate::algebra::{Elem, Yangian};
use crate::error::Result;
use crate::gauss::{Composition, GaussData};
use crate::rational::Rational;
use crate::series::{MultiSeries, Var};

/// Entry-level access to the Gauss blocks, 1-based like the formulas.
#[derive(Clone, Copy)]
pub(crate) struct Ctx<'a> {
    pub y: &'a Yangian,
    pub g: &'a GaussData,
}

/// `(-1)^odd` as a rational.
pub(crate) fn sign(odd: bool) -> Rational {
    Rational::from_int(if odd { -1 } else { 1 })
}

/// All tuples `(x_1, …, x_n)` with `1 <= x_t <= sizes[t]`, lexicographic.
pub(crate) fn grid(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=s).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

pub(crate) fn ix(xs: &[usize]) -> Vec<i64> {
    xs.iter().map(|&x| x as i64).collect()
}

impl<'a> Ctx<'a> {
    pub fn new(y: &'a Yangian, g: &'a GaussData) -> Self {
        Ctx { y, g }
    }

    pub fn mu(&self) -> &'a Composition {
        self.g.composition()
    }

    pub fn k(&self) -> usize {
        self.g.order()
    }

    pub fn len(&self) -> usize {
        self.mu().len()
    }

    pub fn size(&self, a: usize) -> usize {
        self.mu().size(a)
    }

    /// Sign `(-1)^{par(a)}`.
    pub fn sgn(&self, a: usize) -> Rational {
        sign(self.mu().parity(a))
    }

    fn at(s: &MultiSeries, var: Var) -> MultiSeries {
        s.rename(Var::U, var)
    }

    fn zero(&self, var: Var) -> MultiSeries {
        MultiSeries::zero_in(var, self.k() as i32)
    }

    pub fn d(&self, a: usize, i: usize, j: usize, var: Var) -> MultiSeries {
        Self::at(self.g.d(a).get(i - 1, j - 1), var)
    }

    pub fn dp(&self, a: usize, i: usize, j: usize, var: Var) -> MultiSeries {
        Self::at(self.g.dp(a).get(i - 1, j - 1), var)
    }

    /// `E_{a,b;i,j}`; zero when `b` is past the last block.
    pub fn e(&self, a: usize, b: usize, i: usize, j: usize, var: Var) -> MultiSeries {
        if b > self.len() {
            return self.zero(var);
        }
        Self::at(self.g.e(a, b).get(i - 1, j - 1), var)
    }

    /// `F_{b,a;i,j}`; zero when `b` is past the last block.
    pub fn f(&self, b: usize, a: usize, i: usize, j: usize, var: Var) -> MultiSeries {
        if b > self.len() {
            return self.zero(var);
        }
        Self::at(self.g.f(b, a).get(i - 1, j - 1), var)
    }

    pub fn ea(&self, a: usize, i: usize, j: usize, var: Var) -> MultiSeries {
        self.e(a, a + 1, i, j, var)
    }

    pub fn fa(&self, a: usize, i: usize, j: usize, var: Var) -> MultiSeries {
        self.f(a + 1, a, i, j, var)
    }

    pub fn cd(&self, a: usize, i: usize, j: usize, r: usize) -> Result<Elem> {
        self.g.d_coeff(a, i, j, r)
    }

    pub fn cdp(&self, a: usize, i: usize, j: usize, r: usize) -> Result<Elem> {
        self.g.dp_coeff(a, i, j, r)
    }

    /// `E_{a;i,j}^{(r)}`, the coefficient of `E_{a,a+1}`.
    pub fn ce(&self, a: usize, i: usize, j: usize, r: usize) -> Result<Elem> {
        self.g.e_coeff(a, a + 1, i, j, r)
    }

    /// `F_{a;i,j}^{(r)}`, the coefficient of `F_{a+1,a}`.
    pub fn cf(&self, a: usize, i: usize, j: usize, r: usize) -> Result<Elem> {
        self.g.f_coeff(a + 1, a, i, j, r)
    }

    pub fn mul(&self, x: &Elem, z: &Elem) -> Elem {
        self.y.multiply(x, z)
    }

    pub fn br(&self, x: &Elem, z: &Elem) -> Elem {
        self.y.super_commutator(x, z)
    }

    pub fn smul(&self, x: &MultiSeries, z: &MultiSeries) -> MultiSeries {
        x.mul(self.y, z)
    }

    pub fn sbr(&self, x: &MultiSeries, z: &MultiSeries) -> MultiSeries {
        x.super_commutator(self.y, z)
    }
}
