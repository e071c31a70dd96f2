// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Bi-thermal preparations over the eight `|ij,k⟩` basis states.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{BasisLabel, ProbabilityVector};
use crate::scalar::Real;
use crate::thermo::units::{DeviceSpec, H_OVER_KB_MK_PER_GHZ};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrepScheme {
    /// Only `|00,k⟩` and `|11,k⟩` populated, hot pair as a two-level system.
    SwapEngine4,
    /// Every qubit in its own Gibbs state.
    FullThermal8,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThermalPrep<T> {
    pub scheme: PrepScheme,
    pub t_hot: T,
    pub t_cold: T,
    pub device: DeviceSpec,
    pub probs: ProbabilityVector<T>,
}

/// Numerically stable `exp(-E_i / (k T_i)) / Z` from reduced energies.
fn boltzmann<T: Real>(reduced: &[Option<T>]) -> ProbabilityVector<T> {
    let min = reduced
        .iter()
        .flatten()
        .copied()
        .fold(T::infinity(), T::min);
    let w: Vec<T> = reduced
        .iter()
        .map(|r| r.map_or(T::zero(), |x| (min - x).exp()))
        .collect();
    let z: T = w.iter().copied().sum();
    ProbabilityVector::from_unnormalized(w.into_iter().map(|x| x / z).collect())
        .expect("positive weights")
}

fn check_temperature<T: Real>(t: T) -> Result<()> {
    if !(t > T::zero()) {
        return Err(Error::NonPositiveTemperature(t.as_f64()));
    }
    Ok(())
}

fn signed_half<T: Real>(bit: u8, f: f64) -> T {
    T::lit(if bit == 0 { -f / 2.0 } else { f / 2.0 })
}

/// Builds the initial populations for `scheme` at `(t_hot, t_cold)` in mK.
pub fn prepare<T: Real>(
    scheme: PrepScheme,
    device: &DeviceSpec,
    t_hot: T,
    t_cold: T,
) -> Result<ThermalPrep<T>> {
    check_temperature(t_hot)?;
    check_temperature(t_cold)?;
    let k = T::lit(H_OVER_KB_MK_PER_GHZ);
    let reduced: Vec<Option<T>> = BasisLabel::all()
        .map(|l| {
            let cold = signed_half::<T>(l.k, device.f1) * k / t_cold;
            match scheme {
                PrepScheme::SwapEngine4 => l
                    .hot_pair_aligned()
                    .then(|| signed_half::<T>(l.i, device.omega_hot()) * k / t_hot + cold),
                PrepScheme::FullThermal8 => {
                    let hot = signed_half::<T>(l.i, device.f0) + signed_half::<T>(l.j, device.f2);
                    Some(hot * k / t_hot + cold)
                }
            }
        })
        .collect();
    Ok(ThermalPrep {
        scheme,
        t_hot,
        t_cold,
        device: *device,
        probs: boltzmann(&reduced),
    })
}

/// Ground-state populations `(p_g0, p_g1, p_g2)` of q0, q1, q2 in `p`.
pub fn ground_populations<T: Real>(p: &[T]) -> (T, T, T) {
    let mut g = (T::zero(), T::zero(), T::zero());
    for (idx, &x) in p.iter().enumerate() {
        let l = BasisLabel::from_index(idx);
        if l.i == 0 {
            g.0 = g.0 + x;
        }
        if l.k == 0 {
            g.1 = g.1 + x;
        }
        if l.j == 0 {
            g.2 = g.2 + x;
        }
    }
    g
}
