//! Matrices over algebra-valued series.

use rayon::prelude::*;

use crate::algebra::{Elem, Yangian};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::{MultiSeries, Var};

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixSeries {
    rows: usize,
    cols: usize,
    entries: Vec<MultiSeries>,
}

impl MatrixSeries {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> MultiSeries) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        MatrixSeries { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize, var: Var, k: i32) -> Self {
        Self::from_fn(rows, cols, |_, _| MultiSeries::zero_in(var, k))
    }

    pub fn identity(n: usize, var: Var, k: i32) -> Self {
        Self::from_fn(n, n, |i, j| {
            let c = if i == j { Elem::one() } else { Elem::zero() };
            MultiSeries::univariate(var, k, vec![c])
        })
    }

    /// `T(u)` truncated at order `k`; entry `(i, j)` is `t_{i+1, j+1}(var)`.
    pub fn build_t(y: &Yangian, var: Var, k: usize) -> Self {
        let d = y.signature().dim();
        Self::from_fn(d, d, |i, j| {
            MultiSeries::univariate(var, k as i32, (0..=k).map(|r| y.t(i + 1, j + 1, r)).collect())
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &MultiSeries {
        assert!(i < self.rows && j < self.cols, "matrix index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: MultiSeries) {
        assert!(i < self.rows && j < self.cols, "matrix index ({i}, {j}) out of bounds");
        self.entries[i * self.cols + j] = s;
    }

    pub fn entries(&self) -> &[MultiSeries] {
        &self.entries
    }

    /// Smallest known order in `var` over all entries.
    pub fn known_in(&self, var: Var) -> i32 {
        self.entries.iter().map(|e| e.known_in(var)).min().unwrap_or(crate::series::UNBOUNDED)
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Assembles a matrix from a grid of blocks with matching row/column sizes.
    pub fn from_blocks(blocks: &[Vec<MatrixSeries>]) -> Result<Self> {
        let row_sizes: Vec<usize> = blocks.iter().map(|r| r.first().map_or(0, |b| b.rows)).collect();
        let col_sizes: Vec<usize> = blocks.first().map_or(vec![], |r| r.iter().map(|b| b.cols).collect());
        for (bi, row) in blocks.iter().enumerate() {
            if row.len() != col_sizes.len() {
                return Err(Error::DimensionMismatch("ragged block grid".into()));
            }
            for (bj, b) in row.iter().enumerate() {
                if b.rows != row_sizes[bi] || b.cols != col_sizes[bj] {
                    return Err(Error::DimensionMismatch(format!("block ({bi}, {bj}) has the wrong size")));
                }
            }
        }
        let rows = row_sizes.iter().sum();
        let cols = col_sizes.iter().sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for (bi, row) in blocks.iter().enumerate() {
            for i in 0..row_sizes[bi] {
                for b in row {
                    for j in 0..b.cols {
                        entries.push(b.get(i, j).clone());
                    }
                }
            }
        }
        Ok(MatrixSeries { rows, cols, entries })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} against {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a.add(b)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a.sub(b)))
    }

    fn zip(&self, other: &Self, f: impl Fn(&MultiSeries, &MultiSeries) -> MultiSeries) -> Self {
        MatrixSeries {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|s| s.scale(c))
    }

    pub fn map(&self, f: impl Fn(&MultiSeries) -> MultiSeries) -> Self {
        MatrixSeries { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn rename(&self, from: Var, to: Var) -> Self {
        self.map(|s| s.rename(from, to))
    }

    /// Row-by-column product; entries of `self` multiply from the left.
    pub fn mul(&self, y: &Yangian, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = (0..self.rows * other.cols)
            .into_par_iter()
            .map(|n| {
                let (i, j) = (n / other.cols, n % other.cols);
                let mut acc: Option<MultiSeries> = None;
                for k in 0..self.cols {
                    let p = self.get(i, k).mul(y, other.get(k, j));
                    acc = Some(match acc {
                        None => p,
                        Some(a) => a.add(&p),
                    });
                }
                acc.unwrap_or_else(|| MultiSeries::zero_in(Var::U, crate::series::UNBOUNDED))
            })
            .collect();
        Ok(MatrixSeries { rows: self.rows, cols: other.cols, entries })
    }

    /// The single variable all entries are series in.
    fn sole_var(&self) -> Result<Var> {
        let mut found: Option<Var> = None;
        for e in &self.entries {
            for v in e.active_vars() {
                match found {
                    None => found = Some(v),
                    Some(w) if w != v => {
                        return Err(Error::WrongShape("inversion needs series in a single variable".into()))
                    }
                    _ => {}
                }
            }
        }
        Ok(found.unwrap_or(Var::U))
    }

    /// Inverse of a square matrix with constant term `I`, by the Neumann
    /// recursion `B^(r) = -Σ_{t=1}^{r} A^(t) B^(r-t)`.
    pub fn invert(&self, y: &Yangian) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let var = self.sole_var()?;
        let n = self.rows;
        for i in 0..n {
            for j in 0..n {
                let e = self.get(i, j);
                if e.low()[var.index()] < 0 {
                    return Err(Error::NotUnitriangularConstantTerm);
                }
                let c = e.coeff_at(var, 0).map_err(|_| Error::NotUnitriangularConstantTerm)?;
                let expect = if i == j { Elem::one() } else { Elem::zero() };
                if c != expect {
                    return Err(Error::NotUnitriangularConstantTerm);
                }
            }
        }
        let k = self.known_in(var);
        let k = if k >= crate::series::UNBOUNDED { 0 } else { k };
        let coeff = |t: i32, i: usize, j: usize| self.get(i, j).coeff_at(var, t).expect("within known order");
        let a: Vec<Vec<Elem>> = (1..=k)
            .map(|t| (0..n * n).map(|x| coeff(t, x / n, x % n)).collect())
            .collect();
        // b[r][i*n + j] is the coefficient of var^{-r} in the inverse
        let mut b: Vec<Vec<Elem>> = Vec::with_capacity(k as usize + 1);
        b.push((0..n * n).map(|x| if x / n == x % n { Elem::one() } else { Elem::zero() }).collect());
        for r in 1..=k as usize {
            let next: Vec<Elem> = (0..n * n)
                .into_par_iter()
                .map(|x| {
                    let (i, j) = (x / n, x % n);
                    let mut acc = Elem::zero();
                    for t in 1..=r {
                        let at = &a[t - 1];
                        let bt = &b[r - t];
                        for l in 0..n {
                            let (p, q) = (&at[i * n + l], &bt[l * n + j]);
                            if !p.is_zero() && !q.is_zero() {
                                acc.sub_assign(&y.multiply(p, q));
                            }
                        }
                    }
                    acc
                })
                .collect();
            b.push(next);
        }
        Ok(Self::from_fn(n, n, |i, j| {
            MultiSeries::univariate(var, k, b.iter().map(|br| br[i * n + j].clone()).collect())
        }))
    }

    /// Every coefficient of every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.coeffs().count() == 1 && e.coeff([0, 0, 0]).is_ok_and(|c| c == Elem::one())
                    } else {
                        e.is_zero()
                    }
                })
            })
    }
}

/// `D - C A^{-1} B`.
pub fn quasidet(
    y: &Yangian,
    a: &MatrixSeries,
    b: &MatrixSeries,
    c: &MatrixSeries,
    d: &MatrixSeries,
) -> Result<MatrixSeries> {
    let ainv = a.invert(y)?;
    d.sub(&c.mul(y, &ainv)?.mul(y, b)?)
}

impl std::fmt::Debug for MatrixSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                writeln!(f, "  ({i},{j}): {:?}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{scalar, Signature};

    fn y11() -> Yangian {
        Yangian::new(Signature::new(1, 1).unwrap())
    }

    fn constant(v: i64) -> MultiSeries {
        MultiSeries::univariate(Var::U, 3, vec![scalar(v)])
    }

    #[test]
    fn t_matrix_at_low_order() {
        let y = y11();
        let t = MatrixSeries::build_t(&y, Var::U, 1);
        assert_eq!(t.get(0, 0).coeff_at(Var::U, 0).unwrap(), Elem::one());
        assert_eq!(t.get(0, 1).coeff_at(Var::U, 1).unwrap(), y.t(1, 2, 1));
        assert!(t.get(0, 1).coeff_at(Var::U, 0).unwrap().is_zero());
        assert!(MatrixSeries::build_t(&y, Var::U, 0).is_identity());
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let odd = (i == 0) != (j == 0);
            for (_, c) in t.get(i, j).coeffs() {
                assert_eq!(y.element_parity(c), Some(odd));
            }
        }
    }

    #[test]
    fn identity_is_neutral() {
        let y = y11();
        let t = MatrixSeries::build_t(&y, Var::U, 2);
        let i = MatrixSeries::identity(2, Var::U, 2);
        assert_eq!(t.mul(&y, &i).unwrap(), t);
        assert_eq!(i.mul(&y, &t).unwrap(), t);
        assert!(matches!(
            t.mul(&y, &MatrixSeries::identity(3, Var::U, 2)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn geometric_series_inverse() {
        let y = y11();
        let x = y.t(1, 1, 1);
        let a = MatrixSeries::from_fn(1, 1, |_, _| MultiSeries::univariate(Var::U, 2, vec![Elem::one(), x.clone()]));
        let b = a.invert(&y).unwrap();
        let e = b.get(0, 0);
        assert_eq!(e.coeff_at(Var::U, 1).unwrap(), x.neg());
        assert_eq!(e.coeff_at(Var::U, 2).unwrap(), y.multiply(&x, &x));
        assert!(MatrixSeries::identity(2, Var::U, 3).invert(&y).unwrap().is_identity());
    }

    #[test]
    fn inverse_is_two_sided() {
        let y = Yangian::new(Signature::new(2, 1).unwrap());
        let t = MatrixSeries::build_t(&y, Var::U, 3);
        let ti = t.invert(&y).unwrap();
        assert!(t.mul(&y, &ti).unwrap().is_identity());
        assert!(ti.mul(&y, &t).unwrap().is_identity());
        assert_eq!(ti.get(2, 2).coeff_at(Var::U, 1).unwrap(), y.t(3, 3, 1).neg());
    }

    #[test]
    fn non_unitriangular_is_rejected() {
        let y = y11();
        let a = MatrixSeries::from_fn(1, 1, |_, _| constant(2));
        assert_eq!(a.invert(&y).unwrap_err(), Error::NotUnitriangularConstantTerm);
        let s = MatrixSeries::from_fn(1, 1, |_, _| MultiSeries::univariate(Var::U, 2, vec![Elem::one()]).shift(Var::U, 1));
        assert_eq!(s.invert(&y).unwrap_err(), Error::NotUnitriangularConstantTerm);
    }

    #[test]
    fn scalar_quasideterminant() {
        let y = y11();
        let m = |v| MatrixSeries::from_fn(1, 1, |_, _| constant(v));
        let q = quasidet(&y, &m(1), &m(2), &m(3), &m(4)).unwrap();
        assert_eq!(q.get(0, 0).coeff_at(Var::U, 0).unwrap(), scalar(-2));
        let z = MatrixSeries::zeros(1, 1, Var::U, 3);
        assert_eq!(quasidet(&y, &m(1), &z, &m(3), &m(4)).unwrap(), m(4));
    }
}
