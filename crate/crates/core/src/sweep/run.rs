// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use serde::{Serialize, Serializer};

use crate::circuits::{engine_circuit, Circuit};
use crate::error::Result;
use crate::noise::{calibrate, exact_confusion};
use crate::sweep::config::SweepConfig;
use crate::thermo::{
    classify_oriented, cold_temperature_from_population, energy_changes, energy_standard_errors,
    final_cold_excited_population, is_purifier, prepare, transition_matrix,
    transition_matrix_mitigated, ColdTemperature, ModeTag, PrepScheme, TransitionMatrix,
    EXACT_BOUNDARY_EPS,
};

/// One grid point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "T_H")]
    pub t_hot: f64,
    #[serde(rename = "T_C")]
    pub t_cold: f64,
    #[serde(rename = "dE_H")]
    pub d_e_h: f64,
    #[serde(rename = "dE_C")]
    pub d_e_c: f64,
    #[serde(rename = "W")]
    pub w: f64,
    #[serde(serialize_with = "tag_as_str")]
    pub mode: ModeTag,
    #[serde(rename = "T_C_final", serialize_with = "cold_temperature_value")]
    pub t_cold_final: ColdTemperature<f64>,
    pub p_g_final: f64,
    pub purifier: bool,
}

fn tag_as_str<S: Serializer>(tag: &ModeTag, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(tag.as_str())
}

fn cold_temperature_value<S: Serializer>(
    t: &ColdTemperature<f64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match t {
        ColdTemperature::Finite(x) => s.serialize_f64(*x),
        ColdTemperature::Infinite => s.serialize_str("inf"),
        ColdTemperature::Inverted => s.serialize_str("inverted"),
    }
}

/// The temperature-independent part of a sweep: circuit plus measured
/// transition matrix.
pub struct Engine {
    pub circuit: Circuit,
    pub transition: TransitionMatrix<f64>,
}

/// Builds the engine circuit and its (optionally mitigated) transition
/// matrix. Calibration columns use seeds `seed + 8 ..`.
pub fn build_engine(cfg: &SweepConfig) -> Result<Engine> {
    let circuit = engine_circuit(&cfg.v, &cfg.phases)?;
    let transition = if cfg.mitigation {
        let confusion = if cfg.shots == 0 {
            exact_confusion(&cfg.noise, 3)?
        } else {
            calibrate(&cfg.noise, 3, cfg.shots, cfg.seed.wrapping_add(8))?
        };
        transition_matrix_mitigated(&circuit, &cfg.noise, cfg.shots, cfg.seed, &confusion)?
    } else {
        transition_matrix(&circuit, &cfg.noise, cfg.shots, cfg.seed)?
    };
    Ok(Engine {
        circuit,
        transition,
    })
}

/// Evaluates one `(T_H, T_C)` point against a fixed transition matrix. Modes
/// are oriented by temperature, see [`classify_oriented`].
pub fn evaluate_point(
    cfg: &SweepConfig,
    p: &TransitionMatrix<f64>,
    t_hot: f64,
    t_cold: f64,
) -> Result<SweepRow> {
    let prep = prepare(cfg.scheme, &cfg.device, t_hot, t_cold)?;
    let ledger = energy_changes(p, &prep, &cfg.device, cfg.hot_energy_mode)?;
    let eps = match cfg.epsilon {
        Some(e) => e,
        None if p.shots() == 0 => EXACT_BOUNDARY_EPS,
        None => {
            let se = energy_standard_errors(p, &prep, &cfg.device, cfg.hot_energy_mode)?;
            3.0 * se.into_iter().fold(0.0, f64::max)
        }
    };
    let mode = classify_oriented(&ledger, t_hot, t_cold, eps).tag;
    let purifier =
        mode == ModeTag::R && cfg.scheme == PrepScheme::FullThermal8 && is_purifier(p, &prep)?;
    let q = final_cold_excited_population(p, &prep)?;
    Ok(SweepRow {
        t_hot,
        t_cold,
        d_e_h: ledger.d_e_h,
        d_e_c: ledger.d_e_c,
        w: ledger.w,
        mode,
        t_cold_final: cold_temperature_from_population(q, cfg.device.f1),
        p_g_final: 1.0 - q,
        purifier,
    })
}

fn grid_points(cfg: &SweepConfig) -> impl Iterator<Item = (f64, f64)> {
    let tc = cfg.grid.t_cold_values();
    cfg.grid
        .t_hot_values()
        .into_iter()
        .flat_map(move |th| tc.clone().into_iter().map(move |c| (th, c)))
}

/// Runs the full grid, `T_H` outer. The transition matrix is built once.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    let engine = build_engine(cfg)?;
    run_sweep_with(cfg, &engine.transition)
}

pub fn run_sweep_with(cfg: &SweepConfig, p: &TransitionMatrix<f64>) -> Result<Vec<SweepRow>> {
    grid_points(cfg)
        .map(|(th, tc)| evaluate_point(cfg, p, th, tc))
        .collect()
}

/// Same rows as [`run_sweep`], rebuilding the engine at every point.
pub fn run_sweep_rebuilding(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    grid_points(cfg)
        .map(|(th, tc)| evaluate_point(cfg, &build_engine(cfg)?.transition, th, tc))
        .collect()
}
