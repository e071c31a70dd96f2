// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Thermal preparations, energy bookkeeping, operation modes, final
//! temperatures and purities.

mod analytic;
mod energy;
mod mode;
mod prep;
mod purity;
mod transition;
mod units;

pub use analytic::{
    analytic_energy_changes, analytic_regions, f_term, g_term, ground_population_map,
    projected_purity, swap_engine_cop,
};
pub use energy::{
    cold_energy, energy_changes, energy_standard_errors, hot_energy, EnergyLedger, HotEnergyMode,
};
pub use mode::{classify_mode, classify_oriented, ModeTag, OperationMode, EXACT_BOUNDARY_EPS};
pub use prep::{ground_populations, prepare, PrepScheme, ThermalPrep};
pub use purity::{
    cold_temperature_from_population, final_cold_excited_population, final_cold_temperature,
    is_purifier, renyi2_purity_check, ColdTemperature,
};
pub use transition::{transition_matrix, transition_matrix_mitigated, TransitionMatrix};
pub use units::{dimensionless_beta_omega, DeviceSpec, H_OVER_KB_MK_PER_GHZ};
