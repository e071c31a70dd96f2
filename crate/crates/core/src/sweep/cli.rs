// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circuits::{
    build_target_unitary, build_vstar_circuit, compile_with_layout, emit_qasm, CouplingMap,
    PhaseChoice, VChoice,
};
use crate::error::{Error, Result};
use crate::qcore::WireLayout;
use crate::sweep::config::{parse_config, OutputKind, SweepConfig};
use crate::sweep::output::{write_csv, write_heatmap, write_json};
use crate::sweep::run::{build_engine, evaluate_point, run_sweep};
use crate::sweep::selftest::run_selftest;

#[derive(Parser, Debug)]
#[command(
    name = "qpurify",
    version,
    about = "Swap-engine refrigeration and purification simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a (T_H, T_C) grid and write the configured outputs.
    Sweep { config: PathBuf },
    /// Evaluate one grid point and print it as JSON.
    Point(Box<PointArgs>),
    /// Compile the engine unitary and print the gate report.
    Compile {
        #[arg(long, value_enum)]
        v: VArg,
        /// Also write OpenQASM 2.0 to this path.
        #[arg(long)]
        qasm: Option<PathBuf>,
    },
    /// Run the built-in oracle checks.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VArg {
    Identity,
    Vstar,
}

#[derive(Args, Debug)]
struct PointArgs {
    #[arg(long)]
    th: f64,
    #[arg(long)]
    tc: f64,
    /// Base configuration; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    f0: Option<String>,
    #[arg(long)]
    f1: Option<String>,
    #[arg(long)]
    f2: Option<String>,
    #[arg(long)]
    scheme: Option<String>,
    #[arg(long)]
    hot_energy_mode: Option<String>,
    #[arg(long)]
    v: Option<String>,
    #[arg(long)]
    p1: Option<String>,
    #[arg(long)]
    p2: Option<String>,
    #[arg(long)]
    eps01: Option<String>,
    #[arg(long)]
    eps10: Option<String>,
    #[arg(long)]
    mitigation: Option<String>,
    #[arg(long)]
    shots: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    epsilon: Option<String>,
}

impl PointArgs {
    fn overrides(&self) -> Vec<(&'static str, &str)> {
        [
            ("f0", &self.f0),
            ("f1", &self.f1),
            ("f2", &self.f2),
            ("scheme", &self.scheme),
            ("hot_energy_mode", &self.hot_energy_mode),
            ("v", &self.v),
            ("p1", &self.p1),
            ("p2", &self.p2),
            ("eps01", &self.eps01),
            ("eps10", &self.eps10),
            ("mitigation", &self.mitigation),
            ("shots", &self.shots),
            ("seed", &self.seed),
            ("epsilon", &self.epsilon),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
        .collect()
    }
}

fn usage(message: String) -> Error {
    Error::Config { line: 0, message }
}

fn load_config(path: &Path) -> Result<SweepConfig> {
    parse_config(&std::fs::read_to_string(path)?)
}

fn cmd_sweep(path: &Path, out: &mut dyn Write) -> Result<()> {
    let cfg = load_config(path)?;
    let rows = run_sweep(&cfg)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let base = dir.join(&cfg.prefix);
    let with_ext = |ext: &str| PathBuf::from(format!("{}{ext}", base.display()));
    for kind in &cfg.outputs {
        match kind {
            OutputKind::Csv => {
                let p = with_ext(".csv");
                std::fs::write(&p, write_csv(&rows))?;
                writeln!(out, "wrote {}", p.display())?;
            }
            OutputKind::Json => {
                let p = with_ext(".json");
                std::fs::write(&p, write_json(&rows)?)?;
                writeln!(out, "wrote {}", p.display())?;
            }
            OutputKind::Heatmap => {
                let hm = write_heatmap(&rows, &cfg.grid, cfg.heatmap_field)?;
                let stem = format!("_{}", cfg.heatmap_field.name());
                let p = with_ext(&format!("{stem}.ppm"));
                std::fs::write(&p, &hm.ppm)?;
                writeln!(out, "wrote {}", p.display())?;
                if let Some(side) = hm.sidecar {
                    let p = with_ext(&format!("{stem}.txt"));
                    std::fs::write(&p, side)?;
                    writeln!(out, "wrote {}", p.display())?;
                }
            }
        }
    }
    Ok(())
}

fn cmd_point(args: &PointArgs, out: &mut dyn Write) -> Result<()> {
    let mut cfg = match &args.config {
        Some(p) => load_config(p)?,
        None => SweepConfig::default(),
    };
    for (key, value) in args.overrides() {
        cfg.set(key, value).map_err(usage)?;
    }
    cfg.validate().map_err(usage)?;
    let engine = build_engine(&cfg)?;
    let row = evaluate_point(&cfg, &engine.transition, args.th, args.tc)?;
    writeln!(out, "{}", serde_json::to_string(&row)?)?;
    Ok(())
}

fn cmd_compile(v: VArg, qasm: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let circuit = match v {
        VArg::Vstar => build_vstar_circuit(),
        VArg::Identity => {
            let u = build_target_unitary::<f64>(&VChoice::Identity, &PhaseChoice::zero())?;
            compile_with_layout(&u, &CouplingMap::line(3), &WireLayout::engine())?.0
        }
    };
    writeln!(out, "{}", serde_json::to_string(&circuit.report())?)?;
    if let Some(path) = qasm {
        std::fs::write(path, emit_qasm(&circuit))?;
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name). Exit status: 0 on
/// success, 1 for usage errors, 2 for runtime errors.
pub fn cli_main<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Sweep { config } => cmd_sweep(config, out),
        Command::Point(args) => cmd_point(args, out),
        Command::Compile { v, qasm } => cmd_compile(*v, qasm.as_deref(), out),
        Command::Selftest => {
            if run_selftest(out) {
                Ok(())
            } else {
                let _ = writeln!(err, "selftest failed");
                return 2;
            }
        }
    };
    match result {
        Ok(()) => 0,
        Err(Error::Config { line: 0, message }) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
