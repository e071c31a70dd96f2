// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::BasisLabel;
use crate::scalar::Real;
use crate::thermo::prep::ThermalPrep;
use crate::thermo::transition::TransitionMatrix;
use crate::thermo::units::DeviceSpec;

/// Hot-subsystem spectrum used for energy accounting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HotEnergyMode {
    /// `∓Ω/2` on `|00⟩`, `|11⟩` and zero on `|01⟩`, `|10⟩`.
    Ideal,
    /// As `Ideal`, with `|01⟩ → −Δ/2` and `|10⟩ → +Δ/2`. This equals the
    /// per-qubit sum `∓f0/2 ∓ f2/2`.
    #[default]
    Detuned,
}

/// Mean energy changes in units of `h·GHz`. `w` is always `d_e_h + d_e_c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EnergyLedger<T> {
    pub d_e_h: T,
    pub d_e_c: T,
    pub w: T,
}

impl<T: Real> EnergyLedger<T> {
    pub fn new(d_e_h: T, d_e_c: T) -> Self {
        EnergyLedger {
            d_e_h,
            d_e_c,
            w: d_e_h + d_e_c,
        }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        (self.d_e_h - other.d_e_h)
            .abs()
            .max((self.d_e_c - other.d_e_c).abs())
            .max((self.w - other.w).abs())
    }
}

pub fn hot_energy(label: BasisLabel, device: &DeviceSpec, mode: HotEnergyMode) -> f64 {
    let omega = device.omega_hot();
    match (label.i, label.j, mode) {
        (0, 0, _) => -omega / 2.0,
        (1, 1, _) => omega / 2.0,
        (_, _, HotEnergyMode::Ideal) => 0.0,
        (0, _, HotEnergyMode::Detuned) => -device.detuning() / 2.0,
        (_, _, HotEnergyMode::Detuned) => device.detuning() / 2.0,
    }
}

pub fn cold_energy(label: BasisLabel, device: &DeviceSpec) -> f64 {
    if label.k == 0 {
        -device.f1 / 2.0
    } else {
        device.f1 / 2.0
    }
}

fn spectra<T: Real>(device: &DeviceSpec, mode: HotEnergyMode) -> (Vec<T>, Vec<T>) {
    BasisLabel::all()
        .map(|l| {
            (
                T::lit(hot_energy(l, device, mode)),
                T::lit(cold_energy(l, device)),
            )
        })
        .unzip()
}

fn check_consistency<T: Real>(
    p: &TransitionMatrix<T>,
    prep: &ThermalPrep<T>,
    device: &DeviceSpec,
) -> Result<()> {
    if prep.device != *device {
        return Err(Error::PrepMismatch);
    }
    if p.dim() != prep.probs.dim() {
        return Err(Error::DimensionMismatch {
            expected: prep.probs.dim(),
            found: p.dim(),
        });
    }
    Ok(())
}

/// `⟨ΔE⟩ = Σ_{i,i'} (E_{i'} − E_i) p[i'|i] p_i` for both subsystems.
pub fn energy_changes<T: Real>(
    p: &TransitionMatrix<T>,
    prep: &ThermalPrep<T>,
    device: &DeviceSpec,
    mode: HotEnergyMode,
) -> Result<EnergyLedger<T>> {
    check_consistency(p, prep, device)?;
    let (eh, ec) = spectra::<T>(device, mode);
    let mut dh = T::zero();
    let mut dc = T::zero();
    for (i, pi) in prep.probs.iter().enumerate() {
        if pi == T::zero() {
            continue;
        }
        for o in 0..p.dim() {
            let w = p.entry(o, i) * pi;
            dh = dh + (eh[o] - eh[i]) * w;
            dc = dc + (ec[o] - ec[i]) * w;
        }
    }
    Ok(EnergyLedger::new(dh, dc))
}

/// Shot-noise standard errors of `(ΔE_H, ΔE_C, W)`. Column `i` contributes
/// `p_i² Var_i(E) / N`; zero for exact matrices.
pub fn energy_standard_errors<T: Real>(
    p: &TransitionMatrix<T>,
    prep: &ThermalPrep<T>,
    device: &DeviceSpec,
    mode: HotEnergyMode,
) -> Result<[T; 3]> {
    check_consistency(p, prep, device)?;
    if p.shots() == 0 {
        return Ok([T::zero(); 3]);
    }
    let (eh, ec) = spectra::<T>(device, mode);
    let var_of = |col: &[T], e: &dyn Fn(usize) -> T| {
        let mean: T = col.iter().enumerate().map(|(o, &q)| q * e(o)).sum();
        let second: T = col.iter().enumerate().map(|(o, &q)| q * e(o) * e(o)).sum();
        (second - mean * mean).max(T::zero())
    };
    let n = T::lit(p.shots() as f64);
    let mut acc = [T::zero(); 3];
    for (i, pi) in prep.probs.iter().enumerate() {
        let col = p.column(i);
        let vars = [
            var_of(&col, &|o| eh[o]),
            var_of(&col, &|o| ec[o]),
            var_of(&col, &|o| eh[o] + ec[o]),
        ];
        for (a, v) in acc.iter_mut().zip(vars) {
            *a = *a + pi * pi * v / n;
        }
    }
    Ok(acc.map(T::sqrt))
}
