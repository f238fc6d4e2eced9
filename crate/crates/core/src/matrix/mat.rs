//! Dense matrices over a coefficient ring, with exact elimination.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::coeff::to_f64;
use crate::algebra::{Coefficient, ExactComplex, Real};
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<C = ExactComplex> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coefficient> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<C>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, c) in entries.into_iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: C) {
        self.data[i * self.cols + j] = c;
    }

    pub fn row_vecs(&self) -> Vec<Vec<C>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[C]>::to_vec)
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<C> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(C::is_zero)
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].plus(&a.try_mul(b)?);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&C, &C) -> C) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, C::plus)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, C::minus)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| c.try_mul(x).expect("ring product"))
    }

    pub fn trace(&self) -> C {
        (0..self.rows.min(self.cols)).fold(C::zero(), |acc, i| acc.plus(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        self.map(C::conjugate)
    }

    pub fn anticommutator(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(rhs)?.try_add(&rhs.try_mul(self)?)
    }
}

impl<C: Coefficient> Mul for &Matrix<C> {
    type Output = Matrix<C>;
    fn mul(self, rhs: Self) -> Matrix<C> {
        self.try_mul(rhs).expect("matrix shapes agree")
    }
}

impl<C: Coefficient> Add for &Matrix<C> {
    type Output = Matrix<C>;
    fn add(self, rhs: Self) -> Matrix<C> {
        self.try_add(rhs).expect("matrix shapes agree")
    }
}

impl<C: Coefficient> Sub for &Matrix<C> {
    type Output = Matrix<C>;
    fn sub(self, rhs: Self) -> Matrix<C> {
        self.try_sub(rhs).expect("matrix shapes agree")
    }
}

impl<C: Coefficient> Neg for &Matrix<C> {
    type Output = Matrix<C>;
    fn neg(self) -> Matrix<C> {
        self.map(C::negate)
    }
}

impl<R: Real> Matrix<Complex<R>> {
    /// Promotes an integer-and-`i` matrix built over one real field to another.
    pub fn from_exact(m: &Matrix<ExactComplex>) -> Self
    where
        R: ReprReal,
    {
        m.map(|c| Complex::new(R::from_exact(&c.re), R::from_exact(&c.im)))
    }
}

/// Real fields the representations are instantiated over: exact
/// rationals for identities, `f64` for sampled fields.
pub trait ReprReal: Real {
    fn from_exact(r: &BigRational) -> Self;
    /// Equality for exact fields, relative closeness for floats.
    fn approx_eq(a: &Complex<Self>, b: &Complex<Self>) -> bool;
}

impl ReprReal for f64 {
    fn from_exact(r: &BigRational) -> Self {
        to_f64(&Complex::new(r.clone(), BigRational::zero())).re
    }
    fn approx_eq(a: &Complex<f64>, b: &Complex<f64>) -> bool {
        (a - b).norm() <= 1e-10 * (1.0 + a.norm().max(b.norm()))
    }
}

impl ReprReal for BigRational {
    fn from_exact(r: &BigRational) -> Self {
        r.clone()
    }
    fn approx_eq(a: &ExactComplex, b: &ExactComplex) -> bool {
        a == b
    }
}

impl<R: ReprReal> Matrix<Complex<R>> {
    pub fn approx_eq(&self, rhs: &Self) -> bool {
        (self.rows, self.cols) == (rhs.rows, rhs.cols)
            && self
                .data
                .iter()
                .zip(&rhs.data)
                .all(|(a, b)| R::approx_eq(a, b))
    }
}

impl Matrix<ExactComplex> {
    pub fn rank(&self) -> usize {
        exact_rank(self.row_vecs())
    }

    pub fn to_f64(&self) -> Matrix<Complex<f64>> {
        self.map(to_f64)
    }
}

impl Matrix<Complex<f64>> {
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Reduces `rows` to row echelon form in place and returns the pivot columns.
fn echelon<T>(rows: &mut [Vec<T>]) -> Vec<usize>
where
    T: Clone
        + Zero
        + PartialEq
        + std::ops::Div<Output = T>
        + std::ops::Mul<Output = T>
        + std::ops::Sub<Output = T>,
{
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / pivot.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..cols {
                    let v = rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Exact rank of a list of row vectors over the Gaussian rationals.
pub fn exact_rank(mut rows: Vec<Vec<ExactComplex>>) -> usize {
    echelon(&mut rows).len()
}

/// Basis of the right nullspace `{x : Mx = 0}` of a rational matrix.
pub fn rational_nullspace(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let pivots = echelon(&mut rows);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::from_integer(1.into());
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::{exact, rational};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| exact(x, 0)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn product_and_identity() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(&a * &Matrix::identity(2), a);
        assert_eq!(&a * &a, m(&[&[7, 10], &[15, 22]]));
        assert_eq!(a.trace(), exact(5, 0));
        assert!(a.try_mul(&Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn rank_by_elimination() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(Matrix::<ExactComplex>::zeros(3, 3).rank(), 0);
        // complex dependence: row2 = i * row1
        assert_eq!(
            exact_rank(vec![
                vec![exact(1, 0), exact(0, 1)],
                vec![exact(0, 1), exact(-1, 0)]
            ]),
            1
        );
    }

    #[test]
    fn nullspace_basis() {
        let rows = vec![vec![rational(1, 1), rational(1, 1), rational(0, 1)]];
        let ns = rational_nullspace(rows.clone(), 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot = rows[0]
                .iter()
                .zip(&v)
                .fold(rational(0, 1), |a, (x, y)| a + x * y);
            assert!(dot.is_zero());
        }
    }
}
