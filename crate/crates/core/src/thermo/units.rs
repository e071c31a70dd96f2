// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Units: frequencies in GHz (energy quantum `h·f`), temperatures in mK.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// `h / k_B` in mK per GHz.
pub const H_OVER_KB_MK_PER_GHZ: f64 = 47.9924;

/// `h f / (k_B T)` for `f` in GHz and `T` in mK.
pub fn dimensionless_beta_omega<T: Real>(f_ghz: T, t_mk: T) -> Result<T> {
    if !(t_mk > T::zero()) {
        return Err(Error::NonPositiveTemperature(t_mk.as_f64()));
    }
    Ok(T::lit(H_OVER_KB_MK_PER_GHZ) * f_ghz / t_mk)
}

/// Qubit frequencies of the three-qubit device: q0 and q2 form the hot
/// pair, q1 is the cold qubit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeviceSpec {
    pub f0: f64,
    pub f1: f64,
    pub f2: f64,
}

impl DeviceSpec {
    pub fn new(f0: f64, f1: f64, f2: f64) -> Result<Self> {
        for (name, f) in [("f0", f0), ("f1", f1), ("f2", f2)] {
            if !(f > 0.0) || !f.is_finite() {
                return Err(Error::InvalidDevice(format!(
                    "{name} = {f} GHz must be positive"
                )));
            }
        }
        Ok(DeviceSpec { f0, f1, f2 })
    }

    /// ibmq_casablanca qubits 0, 1, 2.
    pub fn casablanca() -> Self {
        DeviceSpec {
            f0: 4.82,
            f1: 4.76,
            f2: 4.90,
        }
    }

    /// ibmq_jakarta qubits 0, 1, 2.
    pub fn jakarta() -> Self {
        DeviceSpec {
            f0: 5.24,
            f1: 5.01,
            f2: 5.11,
        }
    }

    pub fn identical(f: f64) -> Self {
        DeviceSpec {
            f0: f,
            f1: f,
            f2: f,
        }
    }

    /// `Ω = f0 + f2`, the resonance of the hot pair between `|00⟩` and `|11⟩`.
    pub fn omega_hot(&self) -> f64 {
        self.f0 + self.f2
    }

    /// `Δ = f0 − f2`.
    pub fn detuning(&self) -> f64 {
        self.f0 - self.f2
    }
}
