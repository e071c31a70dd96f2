// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("matrix is not unitary (max |U†U - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("invalid density operator: {0}")]
    InvalidDensity(String),

    #[error("invalid probability vector: {0}")]
    InvalidProbabilities(String),

    #[error("diagonal entry {index} is {value:e}, below the clipping tolerance")]
    NegativeDiagonal { index: usize, value: f64 },

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("CNOT on wires ({0}, {1}) is not allowed by the coupling map")]
    CouplingViolation(usize, usize),

    #[error("wires {0} and {1} are disconnected in the coupling map")]
    Disconnected(usize, usize),

    #[error("invalid noise model: {0}")]
    InvalidNoise(String),

    #[error("confusion matrix is singular (condition number {condition:e})")]
    SingularConfusion { condition: f64 },

    #[error("temperature must be positive, got {0} mK")]
    NonPositiveTemperature(f64),

    #[error("invalid device: {0}")]
    InvalidDevice(String),

    #[error("preparation was built for a different device")]
    PrepMismatch,

    #[error("operation requires a {0} preparation")]
    WrongScheme(&'static str),

    #[error("line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("grid is incomplete: expected {expected} rows, found {found}")]
    IncompleteGrid { expected: usize, found: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
