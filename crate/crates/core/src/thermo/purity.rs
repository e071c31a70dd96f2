// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::DensityOperator;
use crate::scalar::Real;
use crate::thermo::prep::{ground_populations, PrepScheme, ThermalPrep};
use crate::thermo::transition::TransitionMatrix;
use crate::thermo::units::{DeviceSpec, H_OVER_KB_MK_PER_GHZ};

/// Effective temperature of the cold qubit after the stroke.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum ColdTemperature<T> {
    /// In mK.
    Finite(T),
    /// Excited population exactly 1/2.
    Infinite,
    /// Excited population above 1/2.
    Inverted,
}

impl<T: Real> ColdTemperature<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            ColdTemperature::Finite(t) => Some(t),
            _ => None,
        }
    }
}

/// Two-level Gibbs inversion: `T = (h/k_B) f1 / ln((1−Q)/Q)` for excited
/// population `Q`.
pub fn cold_temperature_from_population<T: Real>(q: T, f1: f64) -> ColdTemperature<T> {
    let half = T::lit(0.5);
    if q > half {
        return ColdTemperature::Inverted;
    }
    let log = ((T::one() - q) / q).ln();
    if q == half || log == T::zero() {
        return ColdTemperature::Infinite;
    }
    ColdTemperature::Finite(T::lit(H_OVER_KB_MK_PER_GHZ * f1) / log)
}

fn final_populations<T: Real>(p: &TransitionMatrix<T>, prep: &ThermalPrep<T>) -> Result<Vec<T>> {
    p.apply(prep.probs.probs())
}

/// Excited population of q1 after `p`.
pub fn final_cold_excited_population<T: Real>(
    p: &TransitionMatrix<T>,
    prep: &ThermalPrep<T>,
) -> Result<T> {
    let out = final_populations(p, prep)?;
    Ok(T::one() - ground_populations(&out).1)
}

pub fn final_cold_temperature<T: Real>(
    p: &TransitionMatrix<T>,
    prep: &ThermalPrep<T>,
    device: &DeviceSpec,
) -> Result<ColdTemperature<T>> {
    if prep.device != *device {
        return Err(Error::PrepMismatch);
    }
    let q = final_cold_excited_population(p, prep)?;
    Ok(cold_temperature_from_population(q, device.f1))
}

/// True when q1 ends purer than any qubit started, with every qubit
/// initially closer to its ground state.
pub fn is_purifier<T: Real>(p: &TransitionMatrix<T>, prep: &ThermalPrep<T>) -> Result<bool> {
    if prep.scheme != PrepScheme::FullThermal8 {
        return Err(Error::WrongScheme("full_thermal8"));
    }
    let (g0, g1, g2) = ground_populations(prep.probs.probs());
    let after = ground_populations(&final_populations(p, prep)?).1;
    let half = T::lit(0.5);
    Ok(g0 >= half && g1 >= half && g2 >= half && after > g0.max(g1).max(g2))
}

/// `(Tr ρ², Σ ρ_ii²)`; the first is never smaller.
pub fn renyi2_purity_check<T: Real>(rho: &DensityOperator<T>) -> (T, T) {
    let projected = (0..rho.dim())
        .map(|i| rho[(i, i)].re * rho[(i, i)].re)
        .sum();
    (rho.purity(), projected)
}
