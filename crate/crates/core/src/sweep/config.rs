// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Sweep configuration: `key = value` lines under optional `[section]`
//! headers, `#` starts a comment.
//!
//! ```text
//! [device]
//! f0 = 4.82
//! f1 = 4.76
//! f2 = 4.90
//!
//! [prep]
//! scheme = full_thermal8        # or swap_engine4
//! hot_energy_mode = detuned     # or ideal
//!
//! [circuit]
//! v = identity                  # or vstar
//! phi1 = 0                      # W phases phi1..phi4, V* phases psi1..psi4
//!
//! [noise]
//! p1 = 0
//! p2 = 0
//! eps01 = 0
//! eps10 = 0
//! mitigation = off
//!
//! [run]
//! shots = 8192                  # 0 = exact
//! seed = 0
//! epsilon = 1e-10               # optional boundary tolerance in h·GHz
//!
//! [grid]
//! th_min = 20
//! th_max = 1000
//! tc_min = 20
//! tc_max = 1000
//! n_h = 64
//! n_c = 64
//!
//! [output]
//! outputs = csv, heatmap        # any of csv, json, heatmap
//! prefix = sweep
//! heatmap_field = mode          # or T_C_final, p_g_final
//! ```
//!
//! Keys may also appear before any header. Output paths are relative to the
//! config file.

use std::str::FromStr;

use crate::circuits::{PhaseChoice, VChoice};
use crate::error::{Error, Result};
use crate::noise::NoiseModel;
use crate::thermo::{DeviceSpec, HotEnergyMode, PrepScheme};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub th_min: f64,
    pub th_max: f64,
    pub tc_min: f64,
    pub tc_max: f64,
    pub n_h: usize,
    pub n_c: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            th_min: 20.0,
            th_max: 1000.0,
            tc_min: 20.0,
            tc_max: 1000.0,
            n_h: 64,
            n_c: 64,
        }
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + step * i as f64 })
        .collect()
}

impl GridSpec {
    pub fn t_hot_values(&self) -> Vec<f64> {
        linspace(self.th_min, self.th_max, self.n_h)
    }

    pub fn t_cold_values(&self) -> Vec<f64> {
        linspace(self.tc_min, self.tc_max, self.n_c)
    }

    pub fn len(&self) -> usize {
        self.n_h * self.n_c
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn validate(&self) -> std::result::Result<(), String> {
        for (name, v) in [
            ("th_min", self.th_min),
            ("th_max", self.th_max),
            ("tc_min", self.tc_min),
            ("tc_max", self.tc_max),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(format!("{name} = {v}: temperatures must be positive"));
            }
        }
        if !(self.th_max > self.th_min) {
            return Err(format!(
                "th_max = {} must exceed th_min = {}",
                self.th_max, self.th_min
            ));
        }
        if !(self.tc_max > self.tc_min) {
            return Err(format!(
                "tc_max = {} must exceed tc_min = {}",
                self.tc_max, self.tc_min
            ));
        }
        if self.n_h < 2 || self.n_c < 2 {
            return Err(format!(
                "n_h = {}, n_c = {}: need at least 2 points per axis",
                self.n_h, self.n_c
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputKind {
    Csv,
    Json,
    Heatmap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeatmapField {
    Mode,
    TColdFinal,
    GroundPopulation,
}

impl HeatmapField {
    pub fn name(self) -> &'static str {
        match self {
            HeatmapField::Mode => "mode",
            HeatmapField::TColdFinal => "T_C_final",
            HeatmapField::GroundPopulation => "p_g_final",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub device: DeviceSpec,
    pub scheme: PrepScheme,
    pub hot_energy_mode: HotEnergyMode,
    pub v: VChoice,
    pub phases: PhaseChoice,
    pub noise: NoiseModel,
    pub mitigation: bool,
    /// 0 = exact.
    pub shots: u64,
    pub seed: u64,
    /// Boundary tolerance; `None` picks the exact default or 3 standard
    /// errors for sampled runs.
    pub epsilon: Option<f64>,
    pub grid: GridSpec,
    pub outputs: Vec<OutputKind>,
    pub prefix: String,
    pub heatmap_field: HeatmapField,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            device: DeviceSpec::casablanca(),
            scheme: PrepScheme::FullThermal8,
            hot_energy_mode: HotEnergyMode::Detuned,
            v: VChoice::Identity,
            phases: PhaseChoice::zero(),
            noise: NoiseModel::ideal(),
            mitigation: false,
            shots: 8192,
            seed: 0,
            epsilon: None,
            grid: GridSpec::default(),
            outputs: vec![OutputKind::Csv],
            prefix: "sweep".into(),
            heatmap_field: HeatmapField::Mode,
        }
    }
}

const SECTIONS: &[(&str, &[&str])] = &[
    ("device", &["f0", "f1", "f2"]),
    ("prep", &["scheme", "hot_energy_mode"]),
    (
        "circuit",
        &[
            "v", "phi1", "phi2", "phi3", "phi4", "psi1", "psi2", "psi3", "psi4",
        ],
    ),
    ("noise", &["p1", "p2", "eps01", "eps10", "mitigation"]),
    ("run", &["shots", "seed", "epsilon"]),
    (
        "grid",
        &["th_min", "th_max", "tc_min", "tc_max", "n_h", "n_c"],
    ),
    ("output", &["outputs", "prefix", "heatmap_field"]),
];

fn section_of(key: &str) -> Option<&'static str> {
    SECTIONS
        .iter()
        .find(|(_, keys)| keys.contains(&key))
        .map(|(s, _)| *s)
}

fn number<T: FromStr>(key: &str, value: &str) -> std::result::Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("{key} = {value:?} is not a valid number"))
}

fn positive(key: &str, value: &str) -> std::result::Result<f64, String> {
    let x: f64 = number(key, value)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(format!("{key} = {value}: must be positive"));
    }
    Ok(x)
}

fn probability(key: &str, value: &str) -> std::result::Result<f64, String> {
    let x: f64 = number(key, value)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(format!("{key} = {value}: must lie in [0, 1]"));
    }
    Ok(x)
}

fn switch(key: &str, value: &str) -> std::result::Result<bool, String> {
    match value {
        "on" | "true" | "yes" | "1" => Ok(true),
        "off" | "false" | "no" | "0" => Ok(false),
        _ => Err(format!("{key} = {value:?}: expected on or off")),
    }
}

impl SweepConfig {
    /// Applies one `key = value` assignment. Noise fields are checked for
    /// range here; cross-field checks happen in [`SweepConfig::validate`].
    pub fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        let readout = |nm: &NoiseModel| nm.readout.first().copied().unwrap_or_default();
        match key {
            "f0" => self.device.f0 = positive(key, value)?,
            "f1" => self.device.f1 = positive(key, value)?,
            "f2" => self.device.f2 = positive(key, value)?,
            "scheme" => {
                self.scheme = match value {
                    "swap_engine4" => PrepScheme::SwapEngine4,
                    "full_thermal8" => PrepScheme::FullThermal8,
                    _ => {
                        return Err(format!(
                            "scheme = {value:?}: expected swap_engine4 or full_thermal8"
                        ))
                    }
                }
            }
            "hot_energy_mode" => {
                self.hot_energy_mode = match value {
                    "ideal" => HotEnergyMode::Ideal,
                    "detuned" => HotEnergyMode::Detuned,
                    _ => {
                        return Err(format!(
                            "hot_energy_mode = {value:?}: expected ideal or detuned"
                        ))
                    }
                }
            }
            "v" => {
                self.v = match value {
                    "identity" => VChoice::Identity,
                    "vstar" => VChoice::VStar,
                    _ => return Err(format!("v = {value:?}: expected identity or vstar")),
                }
            }
            "phi1" | "phi2" | "phi3" | "phi4" => {
                let idx = key[3..].parse::<usize>().expect("phi index") - 1;
                self.phases.w[idx] = number(key, value)?;
            }
            "psi1" | "psi2" | "psi3" | "psi4" => {
                let idx = key[3..].parse::<usize>().expect("psi index") - 1;
                self.phases.v.get_or_insert([0.0; 4])[idx] = number(key, value)?;
            }
            "p1" => self.noise.p1 = probability(key, value)?,
            "p2" => self.noise.p2 = probability(key, value)?,
            "eps01" | "eps10" => {
                let mut flip = readout(&self.noise);
                let x = probability(key, value)?;
                if key == "eps01" {
                    flip.eps01 = x;
                } else {
                    flip.eps10 = x;
                }
                self.noise.readout = if flip.eps01 == 0.0 && flip.eps10 == 0.0 {
                    Vec::new()
                } else {
                    vec![flip; 3]
                };
            }
            "mitigation" => self.mitigation = switch(key, value)?,
            "shots" => self.shots = number(key, value)?,
            "seed" => self.seed = number(key, value)?,
            "epsilon" => {
                let x: f64 = number(key, value)?;
                if !(x >= 0.0) {
                    return Err(format!("epsilon = {value}: must be non-negative"));
                }
                self.epsilon = Some(x);
            }
            "th_min" => self.grid.th_min = positive(key, value)?,
            "th_max" => self.grid.th_max = positive(key, value)?,
            "tc_min" => self.grid.tc_min = positive(key, value)?,
            "tc_max" => self.grid.tc_max = positive(key, value)?,
            "n_h" => self.grid.n_h = number(key, value)?,
            "n_c" => self.grid.n_c = number(key, value)?,
            "outputs" => {
                self.outputs = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| match s {
                        "csv" => Ok(OutputKind::Csv),
                        "json" => Ok(OutputKind::Json),
                        "heatmap" => Ok(OutputKind::Heatmap),
                        _ => Err(format!("outputs: unknown format {s:?}")),
                    })
                    .collect::<std::result::Result<_, _>>()?;
            }
            "prefix" => {
                if value.is_empty() {
                    return Err("prefix must not be empty".into());
                }
                self.prefix = value.to_string();
            }
            "heatmap_field" => {
                self.heatmap_field = match value {
                    "mode" => HeatmapField::Mode,
                    "T_C_final" => HeatmapField::TColdFinal,
                    "p_g_final" => HeatmapField::GroundPopulation,
                    _ => {
                        return Err(format!(
                            "heatmap_field = {value:?}: expected mode, T_C_final or p_g_final"
                        ))
                    }
                }
            }
            _ => return Err(format!("unknown key {key:?}")),
        }
        Ok(())
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        self.grid.validate()?;
        if self.phases.v.is_some() && self.v != VChoice::VStar {
            return Err("psi phases need v = vstar".into());
        }
        self.noise.validate().map_err(|e| e.to_string())
    }
}

/// Parses a configuration document. Absent keys keep their defaults.
pub fn parse_config(text: &str) -> Result<SweepConfig> {
    let mut cfg = SweepConfig::default();
    let mut section: Option<&str> = None;
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let err = |message: String| Error::Config { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| err(format!("malformed section header {content:?}")))?
                .trim();
            let known = SECTIONS
                .iter()
                .find(|(s, _)| *s == name)
                .ok_or_else(|| err(format!("unknown section [{name}]")))?;
            section = Some(known.0);
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, found {content:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() {
            return Err(err("missing key before `=`".into()));
        }
        match (section, section_of(key)) {
            (_, None) => return Err(err(format!("unknown key {key:?}"))),
            (Some(s), Some(owner)) if s != owner => {
                return Err(err(format!("key {key:?} belongs in [{owner}], not [{s}]")));
            }
            _ => {}
        }
        cfg.set(key, value).map_err(err)?;
    }
    cfg.validate().map_err(|message| Error::Config {
        line: last_line,
        message,
    })?;
    Ok(cfg)
}
