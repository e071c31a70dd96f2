// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use crate::circuits::Circuit;
use crate::error::{Error, Result};
use crate::noise::{apply_readout_error, evolve_noisy, mitigate, ConfusionMatrix, NoiseModel};
use crate::qcore::{
    born_probabilities, sample_counts, DensityOperator, ProbabilityVector, UnitaryMatrix,
};
use crate::scalar::Real;

/// Column-stochastic `p[i'|i]`; `entry(out, input)`.
///
/// `shots` is the number of samples behind each column, 0 for exact
/// columns.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionMatrix<T> {
    dim: usize,
    entries: Vec<T>,
    shots: u64,
}

impl<T: Real> TransitionMatrix<T> {
    pub fn from_columns(columns: &[ProbabilityVector<T>], shots: u64) -> Result<Self> {
        let dim = columns.len();
        let mut entries = vec![T::zero(); dim * dim];
        for (i, col) in columns.iter().enumerate() {
            if col.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: col.dim(),
                });
            }
            for (o, x) in col.iter().enumerate() {
                entries[o * dim + i] = x;
            }
        }
        Ok(TransitionMatrix {
            dim,
            entries,
            shots,
        })
    }

    pub fn identity(dim: usize) -> Self {
        let cols: Vec<_> = (0..dim)
            .map(|i| ProbabilityVector::point_mass(dim, i))
            .collect();
        Self::from_columns(&cols, 0).expect("square")
    }

    /// `|⟨i'|U|i⟩|²`.
    pub fn from_unitary(u: &UnitaryMatrix<T>) -> Self {
        TransitionMatrix {
            dim: u.dim(),
            entries: u.transition_probabilities(),
            shots: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn entry(&self, out: usize, input: usize) -> T {
        self.entries[out * self.dim + input]
    }

    pub fn column(&self, input: usize) -> Vec<T> {
        (0..self.dim).map(|o| self.entry(o, input)).collect()
    }

    /// `p' = P p`.
    pub fn apply(&self, p: &[T]) -> Result<Vec<T>> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.len(),
            });
        }
        Ok((0..self.dim)
            .map(|o| (0..self.dim).map(|i| self.entry(o, i) * p[i]).sum())
            .collect())
    }

    /// Largest `|Σ_o P[o|i] − 1|`.
    pub fn stochasticity_defect(&self) -> T {
        (0..self.dim)
            .map(|i| (self.column(i).into_iter().sum::<T>() - T::one()).abs())
            .fold(T::zero(), T::max)
    }
}

fn measured_column<T: Real>(
    c: &Circuit,
    nm: &NoiseModel,
    input: usize,
    shots: u64,
    seed: u64,
) -> Result<ProbabilityVector<T>> {
    let dim = 1 << c.n_wires();
    let rho = evolve_noisy(c, &DensityOperator::<T>::basis(dim, input)?, nm)?;
    let p = apply_readout_error(&born_probabilities(&rho)?, nm)?;
    if shots == 0 {
        return Ok(p);
    }
    Ok(sample_counts(&p, shots, seed.wrapping_add(input as u64)).frequencies())
}

/// Prepares every basis state, runs `c` under `nm`, and records the outcome
/// distribution. `shots = 0` gives exact columns; otherwise column `i` is
/// sampled with seed `seed + i`.
pub fn transition_matrix<T: Real>(
    c: &Circuit,
    nm: &NoiseModel,
    shots: u64,
    seed: u64,
) -> Result<TransitionMatrix<T>> {
    c.validate()?;
    let dim = 1 << c.n_wires();
    let cols = (0..dim)
        .map(|i| measured_column(c, nm, i, shots, seed))
        .collect::<Result<Vec<_>>>()?;
    TransitionMatrix::from_columns(&cols, shots)
}

/// As [`transition_matrix`], with each column passed through [`mitigate`].
pub fn transition_matrix_mitigated<T: Real>(
    c: &Circuit,
    nm: &NoiseModel,
    shots: u64,
    seed: u64,
    confusion: &ConfusionMatrix,
) -> Result<TransitionMatrix<T>> {
    c.validate()?;
    let dim = 1 << c.n_wires();
    let cols = (0..dim)
        .map(|i| measured_column(c, nm, i, shots, seed).and_then(|p| mitigate(&p, confusion)))
        .collect::<Result<Vec<_>>>()?;
    TransitionMatrix::from_columns(&cols, shots)
}
