// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Quick oracle checks behind `qpurify selftest`.

use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::circuits::{
    build_target_unitary, build_vstar_circuit, compile_generic, unitary_of_circuit, CouplingMap,
    PhaseChoice, VChoice,
};
use crate::noise::{apply_readout_error, exact_confusion, mitigate, NoiseModel};
use crate::qcore::{haar_unitary, random_density, random_probabilities, BasisLabel};
use crate::thermo::{
    analytic_energy_changes, cold_temperature_from_population, energy_changes,
    ground_population_map, prepare, renyi2_purity_check, DeviceSpec, HotEnergyMode, PrepScheme,
    TransitionMatrix,
};

type Check = fn() -> Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gate_maps() -> Result<(), String> {
    let u = build_target_unitary::<f64>(&VChoice::VStar, &PhaseChoice::zero())
        .map_err(|e| e.to_string())?;
    for l in BasisLabel::all() {
        let img = BasisLabel::new(l.k, l.i ^ l.j ^ l.k, l.i).index();
        ensure(u[(img, l.index())].norm() == 1.0, || {
            format!("V* does not map {l} to index {img}")
        })?;
    }
    Ok(())
}

fn vstar_circuit() -> Result<(), String> {
    let c = build_vstar_circuit();
    let want = build_target_unitary::<f64>(&VChoice::VStar, &PhaseChoice::zero())
        .map_err(|e| e.to_string())?;
    let d = unitary_of_circuit::<f64>(&c).phase_aligned_diff(&want);
    ensure(c.cnot_count() == 4 && d < 1e-12, || {
        format!("{} CNOTs, deviation {d:e}", c.cnot_count())
    })
}

fn compiler_round_trip() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let u = haar_unitary(8, &mut rng);
        let (c, _) = compile_generic(&u, &CouplingMap::line(3)).map_err(|e| e.to_string())?;
        let d = unitary_of_circuit::<f64>(&c).phase_aligned_diff(&u);
        ensure(d < 1e-8, || format!("round-trip deviation {d:e}"))?;
    }
    Ok(())
}

fn analytic_agreement() -> Result<(), String> {
    let d = DeviceSpec::casablanca();
    let u = build_target_unitary::<f64>(&VChoice::Identity, &PhaseChoice::zero())
        .map_err(|e| e.to_string())?;
    let p = TransitionMatrix::from_unitary(&u);
    for (th, tc) in [(50.0, 40.0), (300.0, 100.0), (900.0, 600.0)] {
        let prep = prepare(PrepScheme::FullThermal8, &d, th, tc).map_err(|e| e.to_string())?;
        let sim =
            energy_changes(&p, &prep, &d, HotEnergyMode::Detuned).map_err(|e| e.to_string())?;
        let ana = analytic_energy_changes(&d, th, tc).map_err(|e| e.to_string())?;
        let diff = sim.max_abs_diff(&ana);
        ensure(diff < 1e-12, || format!("({th}, {tc}) differs by {diff:e}"))?;
    }
    Ok(())
}

fn purification_cubic() -> Result<(), String> {
    let x = ground_population_map(0.8f64);
    ensure((x - 0.896).abs() < 1e-12, || format!("x' = {x}"))
}

fn final_temperature() -> Result<(), String> {
    let t = cold_temperature_from_population(0.2f64, 5.01)
        .finite()
        .unwrap_or(f64::NAN);
    ensure((t - 173.4).abs() < 0.1, || format!("T' = {t}"))
}

fn mitigation() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let nm = NoiseModel::uniform(0.0, 0.0, 0.05, 0.05, 3).map_err(|e| e.to_string())?;
    let m = exact_confusion(&nm, 3).map_err(|e| e.to_string())?;
    let p = random_probabilities(8, &mut rng);
    let raw = apply_readout_error(&p, &nm).map_err(|e| e.to_string())?;
    let q = mitigate(&raw, &m).map_err(|e| e.to_string())?;
    let err = q
        .iter()
        .zip(p.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    ensure(err < 1e-10, || format!("recovery error {err:e}"))
}

fn renyi() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let (full, proj) = renyi2_purity_check(&random_density(2, &mut rng));
        ensure(full - proj >= -1e-12, || format!("{full} < {proj}"))?;
    }
    Ok(())
}

const CHECKS: &[(&str, Check)] = &[
    ("gate map", gate_maps),
    ("4-CNOT circuit", vstar_circuit),
    ("compiler round trip", compiler_round_trip),
    ("closed-form energies", analytic_agreement),
    ("purification cubic", purification_cubic),
    ("final temperature", final_temperature),
    ("readout mitigation", mitigation),
    ("purity inequality", renyi),
];

/// Prints one line per check; true when all pass.
pub fn run_selftest(out: &mut dyn Write) -> bool {
    let mut all = true;
    for (name, check) in CHECKS {
        let result = check();
        let _ = match &result {
            Ok(()) => writeln!(out, "ok    {name}"),
            Err(msg) => writeln!(out, "FAIL  {name}: {msg}"),
        };
        all &= result.is_ok();
    }
    all
}
