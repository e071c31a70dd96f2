// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::noise::NoiseModel;
use crate::qcore::{sample_counts, ProbabilityVector};
use crate::scalar::Real;

/// Column-stochastic readout matrix: `entry(m, t)` is the probability of
/// reading `m` when the true state is `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfusionMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl ConfusionMatrix {
    pub fn from_columns(columns: &[Vec<f64>]) -> Result<Self> {
        let dim = columns.len();
        let mut entries = vec![0.0; dim * dim];
        for (t, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: col.len(),
                });
            }
            if col.iter().any(|&x| !(x >= 0.0)) {
                return Err(Error::InvalidProbabilities(format!(
                    "column {t} has a negative entry"
                )));
            }
            let total: f64 = col.iter().sum();
            if (total - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidProbabilities(format!(
                    "column {t} sums to {total}"
                )));
            }
            for (m, &x) in col.iter().enumerate() {
                entries[m * dim + t] = x;
            }
        }
        Ok(ConfusionMatrix { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let cols: Vec<Vec<f64>> = (0..dim)
            .map(|t| (0..dim).map(|m| f64::from(u8::from(m == t))).collect())
            .collect();
        Self::from_columns(&cols).expect("identity is stochastic")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, measured: usize, truth: usize) -> f64 {
        self.entries[measured * self.dim + truth]
    }

    pub fn column(&self, truth: usize) -> Vec<f64> {
        (0..self.dim).map(|m| self.entry(m, truth)).collect()
    }

    fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.dim, self.dim, &self.entries)
    }
}

/// `p' = M_ro p` with `M_ro` the tensor product of per-qubit flip matrices
/// `[[1−ε01, ε10], [ε01, 1−ε10]]`.
pub fn apply_readout_error<T: Real>(
    p: &ProbabilityVector<T>,
    nm: &NoiseModel,
) -> Result<ProbabilityVector<T>> {
    if !nm.has_readout_error() {
        return Ok(p.clone());
    }
    let dim = p.dim();
    let n = dim.trailing_zeros() as usize;
    if !dim.is_power_of_two() || nm.readout.len() != n {
        return Err(Error::InvalidNoise(format!(
            "{} readout entries for a {}-outcome distribution",
            nm.readout.len(),
            dim
        )));
    }
    let mut q: Vec<T> = p.probs().to_vec();
    for (pos, flip) in nm.readout.iter().enumerate() {
        let bit = 1 << (n - 1 - pos);
        let (e01, e10) = (T::lit(flip.eps01), T::lit(flip.eps10));
        for x0 in (0..dim).filter(|x| x & bit == 0) {
            let x1 = x0 | bit;
            let (a, b) = (q[x0], q[x1]);
            q[x0] = (T::one() - e01) * a + e10 * b;
            q[x1] = e01 * a + (T::one() - e10) * b;
        }
    }
    ProbabilityVector::from_unnormalized(q)
}

/// The confusion matrix implied by `nm` on `n_qubits`, without sampling.
pub fn exact_confusion(nm: &NoiseModel, n_qubits: usize) -> Result<ConfusionMatrix> {
    let dim = 1 << n_qubits;
    let cols = (0..dim)
        .map(|t| {
            apply_readout_error(&ProbabilityVector::<f64>::point_mass(dim, t), nm)
                .map(|p| p.probs().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    ConfusionMatrix::from_columns(&cols)
}

/// Simulated calibration: prepare each basis state, read out with errors,
/// and record `shots` samples. Column `t` uses seed `seed + t`.
pub fn calibrate(
    nm: &NoiseModel,
    n_qubits: usize,
    shots: u64,
    seed: u64,
) -> Result<ConfusionMatrix> {
    if shots == 0 {
        return Err(Error::InvalidNoise(
            "calibration needs at least one shot".into(),
        ));
    }
    let dim = 1 << n_qubits;
    let mut cols = Vec::with_capacity(dim);
    for t in 0..dim {
        let p = apply_readout_error(&ProbabilityVector::<f64>::point_mass(dim, t), nm)?;
        let counts = sample_counts(&p, shots, seed.wrapping_add(t as u64));
        cols.push(
            counts
                .counts()
                .iter()
                .map(|&c| c as f64 / shots as f64)
                .collect(),
        );
    }
    ConfusionMatrix::from_columns(&cols)
}

/// Solves `M q = raw` in the least-squares sense, clips negatives and
/// renormalizes.
pub fn mitigate<T: Real>(
    raw: &ProbabilityVector<T>,
    m: &ConfusionMatrix,
) -> Result<ProbabilityVector<T>> {
    if raw.dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: raw.dim(),
        });
    }
    let svd = m.to_dmatrix().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition = if smin > 0.0 {
        smax / smin
    } else {
        f64::INFINITY
    };
    if !(condition < 1e12) {
        return Err(Error::SingularConfusion { condition });
    }
    let rhs = DVector::from_iterator(raw.dim(), raw.iter().map(Real::as_f64));
    let q = svd
        .solve(&rhs, 0.0)
        .map_err(|_| Error::SingularConfusion { condition })?;
    let clipped: Vec<T> = q.iter().map(|&x| T::lit(x.max(0.0))).collect();
    ProbabilityVector::from_unnormalized(clipped)
}
