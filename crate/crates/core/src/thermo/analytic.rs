// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed forms for the ideal `V = I` engine on a fully thermal preparation.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::thermo::energy::EnergyLedger;
use crate::thermo::mode::{ModeTag, OperationMode};
use crate::thermo::units::{dimensionless_beta_omega, DeviceSpec};

fn half_tanh<T: Real>(x: T) -> T {
    (x / T::lit(2.0)).tanh()
}

/// `f(x, y) = tanh(x/2) − tanh(y/2)`.
pub fn f_term<T: Real>(x: T, y: T) -> T {
    half_tanh(x) - half_tanh(y)
}

/// `g(x, y) = 1 + tanh(x/2) tanh(y/2)`.
pub fn g_term<T: Real>(x: T, y: T) -> T {
    T::one() + half_tanh(x) * half_tanh(y)
}

/// `ΔE_H = (Ω/4) f(β_H Ω, β_C f1) g(β_H f0, β_H f2)`, `ΔE_C = −(f1/4) f g`.
pub fn analytic_energy_changes<T: Real>(
    device: &DeviceSpec,
    t_hot: T,
    t_cold: T,
) -> Result<EnergyLedger<T>> {
    let omega = T::lit(device.omega_hot());
    let f1 = T::lit(device.f1);
    let f = f_term(
        dimensionless_beta_omega(omega, t_hot)?,
        dimensionless_beta_omega(f1, t_cold)?,
    );
    let g = g_term(
        dimensionless_beta_omega(T::lit(device.f0), t_hot)?,
        dimensionless_beta_omega(T::lit(device.f2), t_hot)?,
    );
    let quarter = T::lit(0.25);
    Ok(EnergyLedger::new(
        quarter * omega * f * g,
        -quarter * f1 * f * g,
    ))
}

/// Region inequalities with `r = Ω/f1`:
/// `E` for `T_H > r T_C`, `R` for `T_C < T_H < r T_C`, `A` for `T_H < T_C`.
/// Inside `R`, `purifier` holds for `T_H ≥ T_C max(f0/f1, f2/f1, 1)`.
/// Points exactly on `T_H = T_C` or `T_H = r T_C` are `Boundary`.
pub fn analytic_regions<T: Real>(
    device: &DeviceSpec,
    t_hot: T,
    t_cold: T,
) -> Result<OperationMode> {
    for t in [t_hot, t_cold] {
        if !(t > T::zero()) {
            return Err(Error::NonPositiveTemperature(t.as_f64()));
        }
    }
    let r = T::lit(device.omega_hot() / device.f1);
    let pmin = T::lit((device.f0 / device.f1).max(device.f2 / device.f1).max(1.0));
    let upper = r * t_cold;
    let mode = if t_hot > upper {
        OperationMode::new(ModeTag::E)
    } else if t_hot < t_cold {
        OperationMode::new(ModeTag::A)
    } else if t_hot > t_cold && t_hot < upper {
        OperationMode {
            tag: ModeTag::R,
            purifier: t_hot >= pmin * t_cold,
        }
    } else {
        OperationMode::new(ModeTag::Boundary)
    };
    Ok(mode)
}

/// Ground population of q1 after one ideal round from three qubits with
/// equal ground population `x`: `3x² − 2x³`.
pub fn ground_population_map<T: Real>(x: T) -> T {
    x * x * (T::lit(3.0) - T::lit(2.0) * x)
}

/// Purity of a dephased qubit with ground population `pg`.
pub fn projected_purity<T: Real>(pg: T) -> T {
    T::lit(2.0) * pg * pg - T::lit(2.0) * pg + T::one()
}

/// Best cooling coefficient of performance `(Ω/f1 − 1)⁻¹`.
pub fn swap_engine_cop(device: &DeviceSpec) -> Result<f64> {
    let omega = device.omega_hot();
    if omega <= device.f1 {
        return Err(Error::InvalidDevice(format!(
            "Ω = {omega} GHz must exceed f1 = {} GHz",
            device.f1
        )));
    }
    Ok(1.0 / (omega / device.f1 - 1.0))
}
