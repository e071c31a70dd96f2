// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Simulation of a three-qubit swap-engine refrigerator and qubit purifier.
//!
//! The hot subsystem is the compound of qubits q0 and q2, the cold one is
//! q1. The crate compiles the engine unitary to elementary gates, evolves
//! thermal preparations through ideal or depolarizing channels, and reports
//! energy changes, operation modes, final temperatures and purities over
//! `(T_H, T_C)` grids.
//!
//! Linear algebra and thermodynamic formulas are generic over [`Real`];
//! the aliases below fix the `f64` types used by the sweep and the CLI.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circuits;
pub mod error;
pub mod noise;
pub mod qcore;
pub mod scalar;
pub mod sweep;
pub mod thermo;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Complex = num_complex::Complex<f64>;
pub type Matrix = qcore::CMatrix<f64>;
pub type Unitary = qcore::UnitaryMatrix<f64>;
pub type Density = qcore::DensityOperator<f64>;
pub type Probabilities = qcore::ProbabilityVector<f64>;
pub type Transition = thermo::TransitionMatrix<f64>;
pub type Ledger = thermo::EnergyLedger<f64>;
pub type Prep = thermo::ThermalPrep<f64>;

pub type Unitary32 = qcore::UnitaryMatrix<f32>;
pub type Density32 = qcore::DensityOperator<f32>;
pub type Ledger32 = thermo::EnergyLedger<f32>;
