// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense linear algebra and quantum-state primitives for up to four qubits.

pub mod basis;
pub mod matrix;
pub mod random;
pub mod sampling;
pub mod state;

pub use basis::{BasisLabel, WireLayout};
pub use matrix::CMatrix;
pub use random::{haar_unitary, random_density, random_probabilities};
pub use sampling::{sample_counts, CountsVector};
pub use state::{
    apply_unitary, born_probabilities, DensityOperator, ProbabilityVector, StateVector,
    UnitaryMatrix,
};

/// Tensor product of two unitaries; `a` takes the high bits.
pub fn kron<T: crate::scalar::Real>(
    a: &UnitaryMatrix<T>,
    b: &UnitaryMatrix<T>,
) -> UnitaryMatrix<T> {
    a.kron(b)
}
