// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qpurify::circuits::{
    build_target_unitary, build_vstar_circuit, compile_generic, unitary_of_circuit, CouplingMap,
    PhaseChoice, VChoice,
};
use qpurify::noise::{
    apply_readout_error, calibrate, exact_confusion, mitigate, ConfusionMatrix, NoiseModel,
};
use qpurify::qcore::{
    haar_unitary, random_density, random_probabilities, sample_counts, BasisLabel,
    ProbabilityVector,
};
use qpurify::sweep::{run_sweep, GridSpec, SweepConfig, SweepRow};
use qpurify::thermo::{
    analytic_energy_changes, analytic_regions, classify_mode, cold_temperature_from_population,
    energy_changes, final_cold_excited_population, final_cold_temperature, ground_populations,
    prepare, renyi2_purity_check, transition_matrix, DeviceSpec, HotEnergyMode, ModeTag,
    PrepScheme, TransitionMatrix, EXACT_BOUNDARY_EPS, H_OVER_KB_MK_PER_GHZ,
};
use qpurify::Ledger;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    if took > budget {
        return Err(format!("{out}; took {took:.2?}, budget {budget:?}"));
    }
    Ok(format!("{out}; {took:.2?}"))
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn image(u: &qpurify::Unitary, col: usize) -> Result<usize, String> {
    let hits: Vec<usize> = (0..8).filter(|&r| u[(r, col)].norm() != 0.0).collect();
    match hits.as_slice() {
        [r] if (u[(*r, col)].norm() - 1.0).abs() == 0.0 => Ok(*r),
        _ => Err(format!("column {col} is not a basis vector")),
    }
}

fn gate_map_oracle() -> Outcome {
    timed(Duration::from_secs(1), || {
        let id = build_target_unitary::<f64>(&VChoice::Identity, &PhaseChoice::zero())
            .map_err(|e| e.to_string())?;
        let vs = build_target_unitary::<f64>(&VChoice::VStar, &PhaseChoice::zero())
            .map_err(|e| e.to_string())?;
        let mut fixed = 0;
        for l in BasisLabel::all() {
            let want = match (l.i, l.j, l.k) {
                (0, 0, 1) => BasisLabel::new(1, 1, 0),
                (1, 1, 0) => BasisLabel::new(0, 0, 1),
                _ => l,
            };
            check(image(&id, l.index())? == want.index(), || {
                format!("identity: {l} maps wrong")
            })?;
            fixed += usize::from(want == l);
            let xor = BasisLabel::new(l.k, l.i ^ l.j ^ l.k, l.i);
            check(image(&vs, l.index())? == xor.index(), || {
                format!("vstar: {l} maps wrong")
            })?;
        }
        check(fixed == 6, || format!("{fixed} fixed states"))?;
        Ok("8/8 states for both choices, 6 fixed by V=I".into())
    })
}

fn four_cnot_circuit() -> Outcome {
    let c = build_vstar_circuit();
    let line = CouplingMap::line(3);
    let mut cnots = 0;
    for g in c.gates() {
        if let qpurify::circuits::Gate::Cnot { control, target } = *g {
            cnots += 1;
            check(line.contains(control, target), || {
                format!("CNOT({control},{target}) off the line")
            })?;
        }
    }
    let want = build_target_unitary::<f64>(&VChoice::VStar, &PhaseChoice::zero())
        .map_err(|e| e.to_string())?;
    let d = unitary_of_circuit::<f64>(&c).phase_aligned_diff(&want);
    check(cnots == 4 && c.gates().len() == 4, || {
        format!("{cnots} CNOTs in {} gates", c.gates().len())
    })?;
    check(d < 1e-12, || format!("deviation {d:e}"))?;
    Ok(format!("4 CNOTs on the line, deviation {d:.1e}"))
}

fn compiler_round_trip() -> Outcome {
    timed(Duration::from_secs(30), || {
        let line = CouplingMap::line(3);
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut worst = 0.0f64;
        for n in 0..50 {
            let u = haar_unitary(8, &mut rng);
            let (c, _) = compile_generic(&u, &line).map_err(|e| format!("unitary {n}: {e}"))?;
            worst = worst.max(unitary_of_circuit::<f64>(&c).phase_aligned_diff(&u));
        }
        let target = build_target_unitary::<f64>(&VChoice::Identity, &PhaseChoice::zero())
            .map_err(|e| e.to_string())?;
        let (c, report) = compile_generic(&target, &line).map_err(|e| e.to_string())?;
        worst = worst.max(unitary_of_circuit::<f64>(&c).phase_aligned_diff(&target));
        check(worst < 1e-8, || format!("worst deviation {worst:e}"))?;
        check(report.total_gates > 50, || {
            format!("V=I target compiled to only {} gates", report.total_gates)
        })?;
        Ok(format!(
            "51 unitaries, worst deviation {worst:.1e}; V=I target: {} gates, {} CNOTs",
            report.total_gates, report.cnot_count
        ))
    })
}

fn analytics_vs_simulation() -> Outcome {
    let d = DeviceSpec::casablanca();
    let u = build_target_unitary::<f64>(&VChoice::Identity, &PhaseChoice::zero())
        .map_err(|e| e.to_string())?;
    let p = TransitionMatrix::from_unitary(&u);
    let temps: Vec<f64> = (0..10).map(|i| 20.0 + 108.0 * i as f64).collect();
    let mut worst = 0.0f64;
    for &th in &temps {
        for &tc in &temps {
            let prep = prepare(PrepScheme::FullThermal8, &d, th, tc).map_err(|e| e.to_string())?;
            let sim =
                energy_changes(&p, &prep, &d, HotEnergyMode::Detuned).map_err(|e| e.to_string())?;
            let ana = analytic_energy_changes(&d, th, tc).map_err(|e| e.to_string())?;
            worst = worst.max(sim.max_abs_diff(&ana));
        }
    }
    check(worst < 1e-12, || format!("worst difference {worst:e}"))?;
    Ok(format!("100 points, worst difference {worst:.1e} h·GHz"))
}

/// Axis-aligned distance, in grid cells, from `(th, tc)` to `T_H = a T_C`.
fn cells_from_line(a: f64, th: f64, tc: f64, dh: f64, dc: f64) -> f64 {
    ((th - a * tc).abs() / dh).min((tc - th / a).abs() / dc)
}

fn exact_cfg(device: DeviceSpec, grid: GridSpec) -> SweepConfig {
    SweepConfig {
        device,
        shots: 0,
        grid,
        ..SweepConfig::default()
    }
}

fn region_boundaries() -> Outcome {
    timed(Duration::from_secs(10), || {
        let d = DeviceSpec::casablanca();
        let grid = GridSpec::default();
        let rows = run_sweep(&exact_cfg(d, grid)).map_err(|e| e.to_string())?;
        let dh = (grid.th_max - grid.th_min) / (grid.n_h - 1) as f64;
        let dc = (grid.tc_max - grid.tc_min) / (grid.n_c - 1) as f64;
        let curves = [1.0, d.omega_hot() / d.f1, d.f2 / d.f1];
        let (mut compared, mut mismatches, mut fixed_label) = (0, Vec::new(), 0);
        for r in &rows {
            if curves
                .iter()
                .any(|&a| cells_from_line(a, r.t_hot, r.t_cold, dh, dc) <= 2.0)
            {
                continue;
            }
            compared += 1;
            let want = analytic_regions(&d, r.t_hot, r.t_cold).map_err(|e| e.to_string())?;
            let unoriented = classify_mode(&Ledger::new(r.d_e_h, r.d_e_c), EXACT_BOUNDARY_EPS).tag;
            fixed_label += usize::from(unoriented != want.tag);
            if want.tag != r.mode || want.purifier != r.purifier {
                mismatches.push(format!(
                    "({}, {}): {:?} vs {:?}/{}",
                    r.t_hot, r.t_cold, want, r.mode, r.purifier
                ));
            }
        }
        check(mismatches.is_empty(), || {
            format!("{} mismatches, first {}", mismatches.len(), mismatches[0])
        })?;

        let same = DeviceSpec::identical(4.82);
        let rows = run_sweep(&exact_cfg(same, grid)).map_err(|e| e.to_string())?;
        let mut r_cells = 0;
        for r in &rows {
            let a = analytic_regions(&same, r.t_hot, r.t_cold).map_err(|e| e.to_string())?;
            check(a.purifier == (a.tag == ModeTag::R), || {
                format!("analytic [P] != [R] at ({}, {})", r.t_hot, r.t_cold)
            })?;
            check(r.purifier == (r.mode == ModeTag::R), || {
                format!("simulated [P] != [R] at ({}, {})", r.t_hot, r.t_cold)
            })?;
            r_cells += usize::from(r.mode == ModeTag::R);
        }
        Ok(format!(
            "{compared}/4096 points compared, 0 mismatches ({fixed_label} would differ without orientation by temperature); \
             identical frequencies: [P] = [R] on {r_cells} cells"
        ))
    })
}

fn purification_cubic() -> Outcome {
    let f = 5.0;
    let x: f64 = 0.8;
    // ground population x at T: e^{-u} = (1 - x)/x
    let t = H_OVER_KB_MK_PER_GHZ * f / (x / (1.0 - x)).ln();
    let d = DeviceSpec::identical(f);
    let prep = prepare(PrepScheme::FullThermal8, &d, t, t).map_err(|e| e.to_string())?;
    let (g0, g1, g2) = ground_populations(prep.probs.probs());
    check([g0, g1, g2].iter().all(|g| (g - x).abs() < 1e-14), || {
        "marginals differ from x".into()
    })?;
    let circuit = qpurify::circuits::engine_circuit(&VChoice::Identity, &PhaseChoice::zero())
        .map_err(|e| e.to_string())?;
    let exact = transition_matrix::<f64>(&circuit, &NoiseModel::ideal(), 0, 0)
        .map_err(|e| e.to_string())?;
    let x_exact = 1.0 - final_cold_excited_population(&exact, &prep).map_err(|e| e.to_string())?;
    check((x_exact - 0.896).abs() < 1e-12, || {
        format!("exact x' = {x_exact}")
    })?;

    let shots = 8192u64;
    let sampled = transition_matrix::<f64>(&circuit, &NoiseModel::ideal(), shots, 11)
        .map_err(|e| e.to_string())?;
    let x_cols = 1.0 - final_cold_excited_population(&sampled, &prep).map_err(|e| e.to_string())?;
    let out = ProbabilityVector::new(exact.apply(prep.probs.probs()).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let counts = sample_counts(&out, shots, 12);
    let x_mc: f64 = (0..8)
        .filter(|&i| BasisLabel::from_index(i).k == 0)
        .map(|i| counts.counts()[i] as f64)
        .sum::<f64>()
        / shots as f64;
    let tol = 3.0 * (0.896f64 * 0.104 / shots as f64).sqrt();
    check((x_cols - 0.896).abs() <= tol, || {
        format!("per-column sampled x' = {x_cols}")
    })?;
    check((x_mc - 0.896).abs() <= tol, || {
        format!("Monte Carlo x' = {x_mc}, tolerance {tol:.4}")
    })?;
    Ok(format!(
        "exact {x_exact:.15}, Monte Carlo {x_mc:.4} (|err| {:.4} <= {tol:.4})",
        (x_mc - 0.896).abs()
    ))
}

fn final_temperature() -> Outcome {
    let t = cold_temperature_from_population(0.2f64, 5.01)
        .finite()
        .ok_or("not finite")?;
    check((t - 173.4).abs() < 0.1, || format!("T' = {t}"))?;
    let d = DeviceSpec::jakarta();
    let mut worst = 0.0f64;
    for tc in [20.0f64, 50.0, 100.0, 173.4, 240.0, 500.0, 1000.0] {
        for scheme in [PrepScheme::SwapEngine4, PrepScheme::FullThermal8] {
            let prep = prepare(scheme, &d, 300.0, tc).map_err(|e| e.to_string())?;
            let back = final_cold_temperature(&TransitionMatrix::identity(8), &prep, &d)
                .map_err(|e| e.to_string())?
                .finite()
                .ok_or("not finite")?;
            worst = worst.max((back / tc - 1.0).abs());
        }
    }
    check(worst < 1e-9, || {
        format!("round trip relative error {worst:e}")
    })?;
    Ok(format!(
        "T'(Q=0.2) = {t:.2} mK; round trip relative error {worst:.1e}"
    ))
}

/// Multinomial covariance of frequencies `m` from `n` shots.
fn multinomial_cov(m: &[f64], n: f64) -> DMatrix<f64> {
    DMatrix::from_fn(m.len(), m.len(), |a, b| {
        (if a == b { m[a] } else { 0.0 } - m[a] * m[b]) / n
    })
}

fn mitigation_oracle() -> Outcome {
    let nm = NoiseModel::uniform(0.0, 0.0, 0.05, 0.05, 3).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let p = random_probabilities(8, &mut rng);
    let raw = apply_readout_error(&p, &nm).map_err(|e| e.to_string())?;
    let m_exact = exact_confusion(&nm, 3).map_err(|e| e.to_string())?;
    let q = mitigate(&raw, &m_exact).map_err(|e| e.to_string())?;
    let exact_err = q
        .iter()
        .zip(p.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    check(exact_err < 1e-10, || format!("exact-M error {exact_err:e}"))?;

    let shots = 8192u64;
    let m_sampled: ConfusionMatrix = calibrate(&nm, 3, shots, 1000).map_err(|e| e.to_string())?;
    let raw_sampled = sample_counts(&raw, shots, 2000).frequencies::<f64>();
    let q = mitigate(&raw_sampled, &m_sampled).map_err(|e| e.to_string())?;
    // δq ≈ M⁻¹ (δraw − δM q)
    let n = shots as f64;
    let mut cov = multinomial_cov(raw_sampled.probs(), n);
    for t in 0..8 {
        cov += multinomial_cov(&m_sampled.column(t), n) * (q[t] * q[t]);
    }
    let m = DMatrix::from_fn(8, 8, |a, b| m_sampled.entry(a, b));
    let minv = m
        .try_inverse()
        .ok_or("sampled confusion matrix is singular")?;
    let cov_q = &minv * cov * minv.transpose();
    let se = DVector::from_fn(8, |i, _| cov_q[(i, i)].sqrt());
    let mut worst = 0.0f64;
    for i in 0..8 {
        worst = worst.max((q[i] - p[i]).abs() / se[i]);
    }
    check(worst <= 3.0, || {
        format!("sampled-M error reaches {worst:.2} standard errors")
    })?;
    Ok(format!(
        "exact-M error {exact_err:.1e}; sampled-M worst error {worst:.2} standard errors"
    ))
}

fn second_law() -> Outcome {
    let grid = GridSpec {
        n_h: 50,
        n_c: 50,
        ..GridSpec::default()
    };
    let mut total = 0;
    let configs = [
        (
            DeviceSpec::casablanca(),
            VChoice::Identity,
            PrepScheme::FullThermal8,
        ),
        (
            DeviceSpec::jakarta(),
            VChoice::VStar,
            PrepScheme::SwapEngine4,
        ),
        (
            DeviceSpec::jakarta(),
            VChoice::VStar,
            PrepScheme::FullThermal8,
        ),
    ];
    for (device, v, scheme) in configs {
        let cfg = SweepConfig {
            v,
            scheme,
            ..exact_cfg(device, grid)
        };
        let rows: Vec<SweepRow> = run_sweep(&cfg).map_err(|e| e.to_string())?;
        check(rows.len() == 2500, || format!("{} rows", rows.len()))?;
        if let Some(r) = rows.iter().find(|r| r.d_e_c < 0.0 && r.w < 0.0) {
            return Err(format!(
                "({}, {}) cools while producing work: {:e}, {:e}",
                r.t_hot, r.t_cold, r.d_e_c, r.w
            ));
        }
        total += rows.len();
    }
    Ok(format!(
        "{total} exact grid points over 3 engines, no cooling with W < 0"
    ))
}

fn noise_trend() -> Outcome {
    timed(Duration::from_secs(60), || {
        let mut r_counts = Vec::new();
        let mut h_counts = Vec::new();
        for p2 in [0.0, 0.01, 0.03, 0.05] {
            let cfg = SweepConfig {
                device: DeviceSpec::jakarta(),
                scheme: PrepScheme::SwapEngine4,
                v: VChoice::VStar,
                noise: NoiseModel::new(0.0, p2, vec![]).map_err(|e| e.to_string())?,
                shots: 0,
                ..SweepConfig::default()
            };
            let rows = run_sweep(&cfg).map_err(|e| e.to_string())?;
            r_counts.push(rows.iter().filter(|r| r.mode == ModeTag::R).count());
            h_counts.push(rows.iter().filter(|r| r.mode == ModeTag::H).count());
        }
        check(r_counts.windows(2).all(|w| w[1] <= w[0]), || {
            format!("[R] counts {r_counts:?} increase")
        })?;
        let first_h = h_counts.iter().position(|&h| h > 0);
        let threshold_ok = first_h.is_some_and(|i| h_counts[i..].iter().all(|&h| h > 0));
        check(threshold_ok, || format!("[H] counts {h_counts:?}"))?;
        Ok(format!(
            "[R] cells {r_counts:?}, [H] cells {h_counts:?} for p2 = 0, 0.01, 0.03, 0.05"
        ))
    })
}

fn renyi_inequality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut margin = f64::INFINITY;
    for _ in 0..500 {
        let (full, proj) = renyi2_purity_check(&random_density(2, &mut rng));
        margin = margin.min(full - proj);
    }
    check(margin >= -1e-12, || format!("margin {margin:e}"))?;
    Ok(format!("500 states, smallest margin {margin:.3e}"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("gate-map oracle", gate_map_oracle),
        ("4-CNOT circuit", four_cnot_circuit),
        ("compiler round trip", compiler_round_trip),
        ("analytics vs simulation", analytics_vs_simulation),
        ("region boundaries", region_boundaries),
        ("purification cubic", purification_cubic),
        ("final-temperature inversion", final_temperature),
        ("mitigation oracle", mitigation_oracle),
        ("second law", second_law),
        ("noise trend", noise_trend),
        ("purity data processing", renyi_inequality),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
