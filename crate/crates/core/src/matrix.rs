//! Dense square matrices over a [`Scalar`].
//!
//! Entry `(i, j)` is the coefficient of `|i>` in the image of `|j>`: operators act
//! on column vectors.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{quot, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![S::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    pub fn try_from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Result<S>) -> Result<Self> {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j)?);
            }
        }
        Ok(Matrix { dim, data })
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<S>]) -> Result<Self> {
        let dim = cols.len();
        if cols.iter().any(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch("columns must have length equal to their count".into()));
        }
        Ok(Self::from_fn(dim, |i, j| cols[j][i].clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.dim).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix { dim: self.dim, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        (0..self.dim)
            .map(|i| (0..self.dim).fold(S::zero(), |acc, k| acc + self[(i, k)].clone() * v[k].clone()))
            .collect()
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self * other + other * self
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        let dim = self.dim;
        self.data.iter().enumerate().map(move |(k, x)| (k / dim, k % dim, x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.entries().all(|(i, j, x)| i >= j || x.is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.entries().all(|(i, j, x)| i <= j || x.is_zero())
    }

    /// Zero outside the band `j - upper <= i <= j + lower`.
    pub fn is_banded(&self, lower: usize, upper: usize) -> bool {
        self.entries().all(|(i, j, x)| (i <= j + lower && j <= i + upper) || x.is_zero())
    }

    /// Solves `self * Y = rhs` for triangular `self` with nonzero pivots.
    pub fn solve_triangular(&self, rhs: &Self) -> Result<Self> {
        let n = self.dim;
        if rhs.dim != n {
            return Err(Error::DimensionMismatch(format!("{} vs {}", n, rhs.dim)));
        }
        let lower = self.is_lower_triangular();
        if !lower && !self.is_upper_triangular() {
            return Err(Error::SingularBasis);
        }
        if (0..n).any(|i| self[(i, i)].is_zero()) {
            return Err(Error::SingularBasis);
        }
        let mut out = Self::zeros(n);
        for col in 0..n {
            let order: Vec<usize> = if lower { (0..n).collect() } else { (0..n).rev().collect() };
            for (pos, &i) in order.iter().enumerate() {
                let mut acc = rhs[(i, col)].clone();
                for &k in &order[..pos] {
                    if !self[(i, k)].is_zero() {
                        acc = acc - self[(i, k)].clone() * out[(k, col)].clone();
                    }
                }
                out[(i, col)] = quot(acc, &self[(i, i)], "triangular pivot")?;
            }
        }
        Ok(out)
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.dim + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.dim + j]
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Matrix::<S>::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect() }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect() }
    }
}

impl<S: Scalar> Add for Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: Matrix<S>) -> Matrix<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: Matrix<S>) -> Matrix<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        Matrix { dim: self.dim, data: self.data.into_iter().map(|x| -x).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(p: i64) -> Rational {
        Rational::from_integer(p.into())
    }

    #[test]
    fn transpose_involution_and_identity() {
        let m = Matrix::from_fn(3, |i, j| r((3 * i + j) as i64 - 4));
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(Matrix::<Rational>::identity(4).transpose(), Matrix::identity(4));
    }

    #[test]
    fn triangular_solve_roundtrip() {
        let lower = Matrix::from_fn(4, |i, j| {
            if i == j {
                r(1)
            } else if i > j {
                r((i + 2 * j) as i64)
            } else {
                r(0)
            }
        });
        let rhs = Matrix::from_fn(4, |i, j| r(i as i64 - j as i64 * 3));
        let y = lower.solve_triangular(&rhs).unwrap();
        assert_eq!(&lower * &y, rhs);
        let upper = lower.transpose();
        let y = upper.solve_triangular(&rhs).unwrap();
        assert_eq!(&upper * &y, rhs);
        let full = Matrix::from_fn(2, |_, _| r(1));
        assert_eq!(full.solve_triangular(&rhs_2()), Err(Error::SingularBasis));
    }

    fn rhs_2() -> Matrix<Rational> {
        Matrix::identity(2)
    }

    #[test]
    fn commutator_of_identity_vanishes() {
        let m = Matrix::from_fn(3, |i, j| r((i * j) as i64 + 1));
        assert!(m.commutator(&Matrix::identity(3)).is_zero());
        assert_eq!(m.anticommutator(&Matrix::identity(3)), m.scale(&r(2)));
    }
}
