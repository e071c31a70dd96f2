// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Gate-level depolarizing noise, readout flips, calibration, and
//! confusion-matrix mitigation.

mod channel;
mod readout;

pub use channel::{depolarize, evolve_noisy};
pub use readout::{apply_readout_error, calibrate, exact_confusion, mitigate, ConfusionMatrix};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-qubit readout flip probabilities.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReadoutFlip {
    /// P(read 1 | state 0)
    pub eps01: f64,
    /// P(read 0 | state 1)
    pub eps10: f64,
}

/// Depolarizing probabilities per gate kind plus readout flips.
///
/// `readout` is indexed by bit position of the outcome index (position 0 is
/// the most significant bit). An empty list means perfect readout.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    pub p1: f64,
    pub p2: f64,
    pub readout: Vec<ReadoutFlip>,
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidNoise(format!(
            "{name} = {p} is outside [0, 1]"
        )));
    }
    Ok(())
}

impl NoiseModel {
    pub fn ideal() -> Self {
        Self::default()
    }

    pub fn new(p1: f64, p2: f64, readout: Vec<ReadoutFlip>) -> Result<Self> {
        let nm = NoiseModel { p1, p2, readout };
        nm.validate()?;
        Ok(nm)
    }

    /// Same readout flips on each of `n_qubits`.
    pub fn uniform(p1: f64, p2: f64, eps01: f64, eps10: f64, n_qubits: usize) -> Result<Self> {
        let readout = if eps01 == 0.0 && eps10 == 0.0 {
            Vec::new()
        } else {
            vec![ReadoutFlip { eps01, eps10 }; n_qubits]
        };
        Self::new(p1, p2, readout)
    }

    pub fn validate(&self) -> Result<()> {
        check_probability("p1", self.p1)?;
        check_probability("p2", self.p2)?;
        for r in &self.readout {
            check_probability("eps01", r.eps01)?;
            check_probability("eps10", r.eps10)?;
        }
        Ok(())
    }

    pub fn is_gate_noiseless(&self) -> bool {
        self.p1 == 0.0 && self.p2 == 0.0
    }

    pub fn has_readout_error(&self) -> bool {
        self.readout
            .iter()
            .any(|r| r.eps01 != 0.0 || r.eps10 != 0.0)
    }
}
