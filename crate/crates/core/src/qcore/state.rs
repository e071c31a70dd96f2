// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Validated quantum objects: pure states, unitaries, density operators and
//! classical outcome distributions.

use std::ops::Deref;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qcore::matrix::CMatrix;
use crate::scalar::Real;

fn check_power_of_two(dim: usize) -> Result<()> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    Ok(())
}

/// Normalized pure state.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        check_power_of_two(amplitudes.len())?;
        let norm: T = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - T::one()).abs().as_f64() > T::STATE_TOL {
            return Err(Error::InvalidProbabilities(format!(
                "squared norm is {norm}, not 1"
            )));
        }
        Ok(StateVector { amplitudes })
    }

    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        check_power_of_two(dim)?;
        if index >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: index,
            });
        }
        let mut amplitudes = vec![Complex::zero(); dim];
        amplitudes[index] = Complex::one();
        Ok(StateVector { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn to_density(&self) -> DensityOperator<T> {
        let n = self.dim();
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        DensityOperator { matrix: m }
    }
}

/// Square matrix with `U†U = I` to within `T::UNITARY_TOL`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryMatrix<T> {
    matrix: CMatrix<T>,
}

impl<T: Real> UnitaryMatrix<T> {
    pub fn new(matrix: CMatrix<T>) -> Result<Self> {
        let deviation = matrix.unitarity_defect().as_f64();
        if !(deviation <= T::UNITARY_TOL) {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(UnitaryMatrix { matrix })
    }

    pub(crate) fn new_unchecked(matrix: CMatrix<T>) -> Self {
        UnitaryMatrix { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        UnitaryMatrix {
            matrix: CMatrix::identity(dim),
        }
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.matrix
    }

    pub fn adjoint(&self) -> Self {
        UnitaryMatrix {
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        UnitaryMatrix {
            matrix: self.matrix.kron(&rhs.matrix),
        }
    }

    /// `rhs` applied first, then `self`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Ok(UnitaryMatrix {
            matrix: self.matrix.matmul(&rhs.matrix)?,
        })
    }

    /// Squared moduli `|⟨r|U|c⟩|²` in row-major order.
    pub fn transition_probabilities(&self) -> Vec<T> {
        self.matrix
            .as_slice()
            .iter()
            .map(|z| z.norm_sqr())
            .collect()
    }
}

impl<T> Deref for UnitaryMatrix<T> {
    type Target = CMatrix<T>;

    fn deref(&self) -> &CMatrix<T> {
        &self.matrix
    }
}

/// Hermitian, unit-trace, positive semidefinite operator.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator<T> {
    matrix: CMatrix<T>,
}

impl<T: Real> DensityOperator<T> {
    pub fn new(matrix: CMatrix<T>) -> Result<Self> {
        check_power_of_two(matrix.dim())?;
        let herm = matrix.hermiticity_defect().as_f64();
        if herm > T::STATE_TOL {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (defect {herm:e})"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - T::one()).abs().as_f64() > T::STATE_TOL || tr.im.abs().as_f64() > T::STATE_TOL {
            return Err(Error::InvalidDensity(format!("trace is {tr}")));
        }
        if !matrix.is_positive_semidefinite(T::lit(T::NEGATIVE_TOL)) {
            return Err(Error::InvalidDensity("eigenvalue below -tolerance".into()));
        }
        Ok(DensityOperator { matrix })
    }

    pub(crate) fn new_unchecked(matrix: CMatrix<T>) -> Self {
        DensityOperator { matrix }
    }

    /// Diagonal operator with the given populations.
    pub fn diagonal(p: &ProbabilityVector<T>) -> Self {
        DensityOperator {
            matrix: CMatrix::from_real_diagonal(p.probs()),
        }
    }

    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        Ok(StateVector::basis(dim, index)?.to_density())
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        check_power_of_two(dim)?;
        let w = T::one() / T::lit(dim as f64);
        Ok(DensityOperator {
            matrix: CMatrix::from_real_diagonal(&vec![w; dim]),
        })
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        DensityOperator {
            matrix: self.matrix.kron(&rhs.matrix),
        }
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> T {
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }
}

impl<T> Deref for DensityOperator<T> {
    type Target = CMatrix<T>;

    fn deref(&self) -> &CMatrix<T> {
        &self.matrix
    }
}

/// Nonnegative distribution summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityVector<T> {
    probs: Vec<T>,
}

impl<T: Real> ProbabilityVector<T> {
    pub fn new(probs: Vec<T>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidProbabilities("empty".into()));
        }
        if let Some((i, p)) = probs.iter().enumerate().find(|(_, p)| !(**p >= T::zero())) {
            return Err(Error::InvalidProbabilities(format!("entry {i} is {p}")));
        }
        let total: T = probs.iter().copied().sum();
        if (total - T::one()).abs().as_f64() > T::STATE_TOL {
            return Err(Error::InvalidProbabilities(format!("sums to {total}")));
        }
        Ok(ProbabilityVector { probs })
    }

    /// Clips entries in `[-NEGATIVE_TOL, 0)` and renormalizes. Entries below
    /// the tolerance are rejected.
    pub fn from_unnormalized(mut probs: Vec<T>) -> Result<Self> {
        for (index, p) in probs.iter_mut().enumerate() {
            if p.as_f64() < -T::NEGATIVE_TOL || p.is_nan() {
                return Err(Error::NegativeDiagonal {
                    index,
                    value: p.as_f64(),
                });
            }
            if *p < T::zero() {
                *p = T::zero();
            }
        }
        let total: T = probs.iter().copied().sum();
        if !(total > T::zero()) {
            return Err(Error::InvalidProbabilities("no positive mass".into()));
        }
        probs.iter_mut().for_each(|p| *p = *p / total);
        Ok(ProbabilityVector { probs })
    }

    pub fn point_mass(dim: usize, index: usize) -> Self {
        let mut probs = vec![T::zero(); dim];
        probs[index] = T::one();
        ProbabilityVector { probs }
    }

    pub fn uniform(dim: usize) -> Self {
        ProbabilityVector {
            probs: vec![T::one() / T::lit(dim as f64); dim],
        }
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = T> + '_ {
        self.probs.iter().copied()
    }
}

impl<T> Deref for ProbabilityVector<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.probs
    }
}

/// `U ρ U†`.
pub fn apply_unitary<T: Real>(
    u: &UnitaryMatrix<T>,
    rho: &DensityOperator<T>,
) -> Result<DensityOperator<T>> {
    if u.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: u.dim(),
        });
    }
    let out = &(u.matrix() * rho.matrix()) * &u.matrix().adjoint();
    Ok(DensityOperator { matrix: out })
}

/// Computational-basis outcome distribution `p[m] = Re ρ[m][m]`.
pub fn born_probabilities<T: Real>(rho: &DensityOperator<T>) -> Result<ProbabilityVector<T>> {
    let diag: Vec<T> = (0..rho.dim()).map(|m| rho[(m, m)].re).collect();
    ProbabilityVector::from_unnormalized(diag)
}
