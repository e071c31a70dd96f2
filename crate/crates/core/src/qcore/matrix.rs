// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense square complex matrices at small fixed dimension.

use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Row-major square complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![Complex::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::one();
        }
        m
    }

    /// Builds a matrix from row-major entries; `data.len()` must be a square.
    pub fn from_vec(data: Vec<Complex<T>>) -> Result<Self> {
        let dim = (data.len() as f64).sqrt().round() as usize;
        if dim * dim != data.len() {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: data.len(),
            });
        }
        Ok(CMatrix { dim, data })
    }

    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(CMatrix { dim, data })
    }

    pub fn from_real_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex::new(d, T::zero());
        }
        m
    }

    /// Permutation matrix sending basis state `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len());
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = Complex::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * rhs.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ rhs`; `self` occupies the most significant
    /// bits of the combined index.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (n, m) = (self.dim, rhs.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out[(i * m + k, j * m + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        Ok(CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::zero(), |acc, i| acc + self[(i, i)])
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> T {
        assert_eq!(self.dim, rhs.dim, "max_abs_diff on mismatched dimensions");
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Max-abs deviation of `self† self` from the identity.
    pub fn unitarity_defect(&self) -> T {
        let prod = self.adjoint().matmul(self).expect("square");
        prod.max_abs_diff(&Self::identity(self.dim))
    }

    pub fn hermiticity_defect(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    /// Best global-phase-aligned distance: `min_α max |self - e^{iα} rhs|`,
    /// with `α` taken from the overlap `Tr(rhs† self)`.
    pub fn phase_aligned_diff(&self, rhs: &Self) -> T {
        let overlap = rhs.adjoint().matmul(self).expect("square").trace();
        let phase = if overlap.norm() > T::zero() {
            overlap / Complex::new(overlap.norm(), T::zero())
        } else {
            Complex::one()
        };
        self.max_abs_diff(&rhs.scale(phase))
    }

    /// Checks that `self + shift·I` admits a Cholesky factorization, i.e.
    /// that every eigenvalue of the Hermitian matrix is above `-shift`.
    pub fn is_positive_semidefinite(&self, shift: T) -> bool {
        let n = self.dim;
        let mut l = Self::zeros(n);
        for j in 0..n {
            let mut d = self[(j, j)].re + shift;
            for k in 0..j {
                d = d - l[(j, k)].norm_sqr();
            }
            if !(d > T::zero()) {
                return false;
            }
            let d = d.sqrt();
            l[(j, j)] = Complex::new(d, T::zero());
            for i in (j + 1)..n {
                let mut s = self[(i, j)];
                for k in 0..j {
                    s = s - l[(i, k)] * l[(j, k)].conj();
                }
                l[(i, j)] = s / Complex::new(d, T::zero());
            }
        }
        true
    }

    /// Entrywise conversion to another scalar type.
    pub fn cast<U: Real>(&self) -> CMatrix<U> {
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .map(|z| Complex::new(U::lit(z.re.as_f64()), U::lit(z.im.as_f64())))
                .collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Real> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;

    fn mul(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        self.matmul(rhs)
            .expect("matrix product of mismatched dimensions")
    }
}
