// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Grid sweeps over `(T_H, T_C)`, output writers and the command line.

mod cli;
pub mod config;
pub mod output;
pub mod run;
mod selftest;

pub use cli::cli_main;
pub use config::{parse_config, GridSpec, HeatmapField, OutputKind, SweepConfig};
pub use output::{format_sig9, write_csv, write_heatmap, write_json, Heatmap, CSV_HEADER};
pub use run::{
    build_engine, evaluate_point, run_sweep, run_sweep_rebuilding, run_sweep_with, Engine, SweepRow,
};
pub use selftest::run_selftest;
