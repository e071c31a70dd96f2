// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Textbook compilation of a dense unitary to `{Rz, X, √X, CNOT}`.
//!
//! 1. Factor `U` (normalized to unit determinant) into two-level rotations,
//!    eliminating column entries in Gray-code row order.
//! 2. Condition each two-level rotation along a Gray path, so it becomes a
//!    fully controlled single-qubit gate wrapped in multi-controlled flips.
//! 3. Expand multi-controls recursively into CNOTs and single-qubit gates.
//! 4. Fuse single-qubit runs and rewrite each as `Rz·√X·Rz·√X·Rz`.
//! 5. Insert SWAPs (three CNOTs) for CNOTs between uncoupled wires.
//!
//! Every step is exact up to a global phase.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use num_traits::{One, Zero};

use crate::circuits::circuit::{Circuit, CompileReport, CouplingMap};
use crate::circuits::gate::{
    mat2_adjoint, mat2_identity, mat2_mul, pauli_x, rz, sqrt_x, Gate, Mat2,
};
use crate::error::{Error, Result};
use crate::qcore::{CMatrix, UnitaryMatrix, WireLayout};
use crate::scalar::Real;

const NEGLIGIBLE: f64 = 1e-14;
const ANGLE_EPS: f64 = 1e-12;

/// Rotation acting on the pair of basis states `(zero, one)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoLevel {
    pub zero: usize,
    pub one: usize,
    pub matrix: Mat2<f64>,
}

/// Intermediate op on logical qubit positions.
#[derive(Clone, Debug)]
enum Op {
    Single(usize, Mat2<f64>),
    Cnot(usize, usize),
}

/// Compiles `u` with the identity layout.
pub fn compile_generic<T: Real>(
    u: &UnitaryMatrix<T>,
    coupling: &CouplingMap,
) -> Result<(Circuit, CompileReport)> {
    let n = qubit_count(u.dim())?;
    compile_with_layout(u, coupling, &WireLayout::identity(n))
}

/// Compiles `u`, given in logical order, onto physical wires through `layout`.
pub fn compile_with_layout<T: Real>(
    u: &UnitaryMatrix<T>,
    coupling: &CouplingMap,
    layout: &WireLayout,
) -> Result<(Circuit, CompileReport)> {
    let u = u.matrix().cast::<f64>();
    let deviation = u.unitarity_defect();
    if deviation > f64::UNITARY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    let n = qubit_count(u.dim())?;
    if layout.n_qubits() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: layout.n_qubits(),
        });
    }

    let mut ops = Vec::new();
    for level in two_level_factorization(&u) {
        emit_two_level(&mut ops, &level, n);
    }
    let ops = fuse_single_qubit_runs(ops, n);

    let mut circuit = Circuit::new(n, coupling.clone()).with_layout(layout.clone())?;
    for op in ops {
        match op {
            Op::Single(q, m) => {
                for g in lower_single(&m, layout.wire(q)) {
                    circuit.push(g)?;
                }
            }
            Op::Cnot(c, t) => route_cnot(&mut circuit, layout.wire(c), layout.wire(t))?,
        }
    }
    let report = circuit.report();
    Ok((circuit, report))
}

fn qubit_count(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    Ok(dim.trailing_zeros() as usize)
}

fn gray(r: usize) -> usize {
    r ^ (r >> 1)
}

fn determinant(m: &CMatrix<f64>) -> C64 {
    let n = m.dim();
    let mut a: Vec<C64> = m.as_slice().to_vec();
    let mut det = C64::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm()))
            .expect("nonempty");
        if a[pivot * n + col].norm() == 0.0 {
            return C64::zero();
        }
        if pivot != col {
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for r in (col + 1)..n {
            let f = a[r * n + col] / p;
            for j in col..n {
                let v = a[col * n + j];
                a[r * n + j] -= f * v;
            }
        }
    }
    det
}

/// Two-level factors of `u` in application order, so that applying them in
/// sequence reproduces `u` up to a global phase.
pub fn two_level_factorization(u: &CMatrix<f64>) -> Vec<TwoLevel> {
    let d = u.dim();
    let det = determinant(u);
    let phase = C64::from_polar(1.0, -det.arg() / d as f64);
    let mut m = u.scale(phase);

    let mut eliminators = Vec::new();
    for c in 0..d.saturating_sub(1) {
        let col = gray(c);
        for r in ((c + 1)..d).rev() {
            let (a, b) = (gray(r - 1), gray(r));
            let x = m[(a, col)];
            let y = m[(b, col)];
            if y.norm() < NEGLIGIBLE && (r > c + 1 || (x - C64::one()).norm() < NEGLIGIBLE) {
                continue;
            }
            let norm = (x.norm_sqr() + y.norm_sqr()).sqrt();
            let g: Mat2<f64> = [[x.conj() / norm, y.conj() / norm], [-y / norm, x / norm]];
            for j in 0..d {
                let (p, q) = (m[(a, j)], m[(b, j)]);
                m[(a, j)] = g[0][0] * p + g[0][1] * q;
                m[(b, j)] = g[1][0] * p + g[1][1] * q;
            }
            eliminators.push(TwoLevel {
                zero: a,
                one: b,
                matrix: g,
            });
        }
    }
    // G_k ... G_1 U' = I, hence U' = G_1† ... G_k†: apply G_k† first.
    eliminators
        .into_iter()
        .rev()
        .map(|t| TwoLevel {
            zero: t.zero,
            one: t.one,
            matrix: mat2_adjoint(&t.matrix),
        })
        .collect()
}

fn bit_of(index: usize, pos: usize, n: usize) -> usize {
    (index >> (n - 1 - pos)) & 1
}

/// Fully controlled gate on qubit `target`, conditioned on every other qubit
/// matching the bits of `pattern`.
fn emit_fully_controlled(
    ops: &mut Vec<Op>,
    pattern: usize,
    target: usize,
    m: &Mat2<f64>,
    n: usize,
) {
    let controls: Vec<usize> = (0..n).filter(|&q| q != target).collect();
    let flipped: Vec<usize> = controls
        .iter()
        .copied()
        .filter(|&q| bit_of(pattern, q, n) == 0)
        .collect();
    for &q in &flipped {
        ops.push(Op::Single(q, pauli_x()));
    }
    emit_controlled(ops, &controls, target, m);
    for &q in &flipped {
        ops.push(Op::Single(q, pauli_x()));
    }
}

fn emit_two_level(ops: &mut Vec<Op>, level: &TwoLevel, n: usize) {
    let (a, b) = (level.zero, level.one);
    let diff = a ^ b;
    // Gray path a -> b flipping one differing bit at a time
    let mut path = vec![a];
    let mut cur = a;
    for pos in (0..n).rev() {
        let bit = 1 << (n - 1 - pos);
        if diff & bit != 0 {
            cur ^= bit;
            path.push(cur);
        }
    }
    let steps = path.len() - 1;
    let flip_pos = |x: usize, y: usize| {
        (0..n)
            .find(|&p| bit_of(x ^ y, p, n) == 1)
            .expect("adjacent")
    };

    for l in 0..steps.saturating_sub(1) {
        let t = flip_pos(path[l], path[l + 1]);
        emit_fully_controlled(ops, path[l], t, &pauli_x(), n);
    }
    let last = path[steps - 1];
    let t = flip_pos(last, b);
    let m = if bit_of(last, t, n) == 0 {
        level.matrix
    } else {
        let x = pauli_x();
        mat2_mul(&x, &mat2_mul(&level.matrix, &x))
    };
    emit_fully_controlled(ops, last, t, &m, n);
    for l in (0..steps.saturating_sub(1)).rev() {
        let t = flip_pos(path[l], path[l + 1]);
        emit_fully_controlled(ops, path[l], t, &pauli_x(), n);
    }
}

/// `U = e^{iα} Rz(β) Ry(γ) Rz(δ)`, returned as `(α, β, γ, δ)`.
pub fn zyz_angles(m: &Mat2<f64>) -> (f64, f64, f64, f64) {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let alpha = det.arg() / 2.0;
    let s = C64::from_polar(1.0, -alpha);
    let (a, b) = (m[0][0] * s, m[1][0] * s);
    let gamma = 2.0 * b.norm().atan2(a.norm());
    let sum = if a.norm() > NEGLIGIBLE {
        -2.0 * a.arg()
    } else {
        0.0
    };
    let diff = if b.norm() > NEGLIGIBLE {
        2.0 * b.arg()
    } else {
        0.0
    };
    (alpha, (sum + diff) / 2.0, gamma, (sum - diff) / 2.0)
}

fn ry(theta: f64) -> Mat2<f64> {
    let (s, c) = (theta / 2.0).sin_cos();
    [
        [C64::new(c, 0.0), C64::new(-s, 0.0)],
        [C64::new(s, 0.0), C64::new(c, 0.0)],
    ]
}

/// A square root `V` with `V² = m`, chosen away from the branch cut.
pub fn unitary_sqrt(m: &Mat2<f64>) -> Mat2<f64> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let mut alpha = det.arg() / 2.0;
    let mut s = m.map(|row| row.map(|z| z * C64::from_polar(1.0, -alpha)));
    if (s[0][0] + s[1][1]).re < 0.0 {
        s = s.map(|row| row.map(|z| -z));
        alpha += PI;
    }
    let half_trace = (s[0][0] + s[1][1]).re / 2.0;
    let c = ((1.0 + half_trace) / 2.0).sqrt();
    let mut root = mat2_identity::<f64>();
    for i in 0..2 {
        for j in 0..2 {
            let k = s[i][j]
                - if i == j {
                    C64::new(half_trace, 0.0)
                } else {
                    C64::zero()
                };
            root[i][j] = if i == j {
                C64::new(c, 0.0)
            } else {
                C64::zero()
            } + k / (2.0 * c);
        }
    }
    let phase = C64::from_polar(1.0, alpha / 2.0);
    root.map(|row| row.map(|z| z * phase))
}

/// Controlled-`m` on `target`, active when every qubit in `controls` is 1.
fn emit_controlled(ops: &mut Vec<Op>, controls: &[usize], target: usize, m: &Mat2<f64>) {
    match controls {
        [] => ops.push(Op::Single(target, *m)),
        [c] => {
            let (alpha, beta, gamma, delta) = zyz_angles(m);
            let a = mat2_mul(&rz(beta), &ry(gamma / 2.0));
            let b = mat2_mul(&ry(-gamma / 2.0), &rz(-(delta + beta) / 2.0));
            let cc = rz((delta - beta) / 2.0);
            ops.push(Op::Single(target, cc));
            ops.push(Op::Cnot(*c, target));
            ops.push(Op::Single(target, b));
            ops.push(Op::Cnot(*c, target));
            ops.push(Op::Single(target, a));
            let phase = [
                [C64::one(), C64::zero()],
                [C64::zero(), C64::from_polar(1.0, alpha)],
            ];
            ops.push(Op::Single(*c, phase));
        }
        [rest @ .., last] => {
            let v = unitary_sqrt(m);
            let v_dag = mat2_adjoint(&v);
            emit_controlled(ops, &[*last], target, &v);
            emit_controlled(ops, rest, *last, &pauli_x());
            emit_controlled(ops, &[*last], target, &v_dag);
            emit_controlled(ops, rest, *last, &pauli_x());
            emit_controlled(ops, rest, target, &v);
        }
    }
}

/// Distance of `m` from `reference` after optimal global-phase alignment.
fn phase_distance(m: &Mat2<f64>, reference: &Mat2<f64>) -> f64 {
    let overlap: C64 = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| reference[i][j].conj() * m[i][j])
        .sum();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        C64::one()
    };
    (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| (m[i][j] - reference[i][j] * phase).norm())
        .fold(0.0, f64::max)
}

fn fuse_single_qubit_runs(ops: Vec<Op>, n: usize) -> Vec<Op> {
    let mut out = Vec::with_capacity(ops.len());
    let mut pending: Vec<Option<Mat2<f64>>> = vec![None; n];
    let flush = |out: &mut Vec<Op>, pending: &mut Vec<Option<Mat2<f64>>>, q: usize| {
        if let Some(m) = pending[q].take() {
            if phase_distance(&m, &mat2_identity()) > ANGLE_EPS {
                out.push(Op::Single(q, m));
            }
        }
    };
    for op in ops {
        match op {
            Op::Single(q, m) => {
                let acc = pending[q].unwrap_or_else(mat2_identity);
                pending[q] = Some(mat2_mul(&m, &acc));
            }
            Op::Cnot(c, t) => {
                flush(&mut out, &mut pending, c);
                flush(&mut out, &mut pending, t);
                out.push(Op::Cnot(c, t));
            }
        }
    }
    for q in 0..n {
        flush(&mut out, &mut pending, q);
    }
    out
}

fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t - 2.0 * PI
    } else {
        t
    }
}

fn push_rz(gates: &mut Vec<Gate>, wire: usize, theta: f64) {
    let theta = wrap_angle(theta);
    if theta.abs() > ANGLE_EPS {
        gates.push(Gate::Rz { wire, theta });
    }
}

/// Elementary gates realizing `m` on `wire` up to global phase, in
/// application order.
pub fn lower_single(m: &Mat2<f64>, wire: usize) -> Vec<Gate> {
    let mut gates = Vec::new();
    if phase_distance(m, &mat2_identity()) <= ANGLE_EPS {
        return gates;
    }
    if phase_distance(m, &pauli_x()) <= ANGLE_EPS {
        return vec![Gate::X(wire)];
    }
    if phase_distance(m, &sqrt_x()) <= ANGLE_EPS {
        return vec![Gate::Sx(wire)];
    }
    let (_, beta, gamma, delta) = zyz_angles(m);
    if gamma.abs() <= ANGLE_EPS {
        push_rz(&mut gates, wire, beta + delta);
    } else if (gamma - PI).abs() <= ANGLE_EPS {
        // Ry(π) = X·Rz(π) up to phase
        push_rz(&mut gates, wire, delta + PI);
        gates.push(Gate::X(wire));
        push_rz(&mut gates, wire, beta);
    } else {
        push_rz(&mut gates, wire, delta);
        gates.push(Gate::Sx(wire));
        push_rz(&mut gates, wire, gamma + PI);
        gates.push(Gate::Sx(wire));
        push_rz(&mut gates, wire, beta + PI);
    }
    gates
}

/// Appends CNOT(control → target), moving `control` next to `target` with
/// SWAPs along a shortest path and moving it back afterwards.
fn route_cnot(circuit: &mut Circuit, control: usize, target: usize) -> Result<()> {
    if circuit.coupling().contains(control, target) {
        return circuit.push(Gate::Cnot { control, target });
    }
    let path = circuit
        .coupling()
        .shortest_path(control, target)
        .ok_or(Error::Disconnected(control, target))?;
    let hops = path.len() - 2;
    for w in path.windows(2).take(hops) {
        push_swap(circuit, w[0], w[1])?;
    }
    circuit.push(Gate::Cnot {
        control: path[hops],
        target,
    })?;
    for w in path.windows(2).take(hops).rev() {
        push_swap(circuit, w[0], w[1])?;
    }
    Ok(())
}

fn push_swap(circuit: &mut Circuit, a: usize, b: usize) -> Result<()> {
    circuit.push(Gate::Cnot {
        control: a,
        target: b,
    })?;
    circuit.push(Gate::Cnot {
        control: b,
        target: a,
    })?;
    circuit.push(Gate::Cnot {
        control: a,
        target: b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::circuit::unitary_of_circuit;
    use crate::circuits::target::{build_target_unitary, PhaseChoice, VChoice};
    use crate::qcore::random::haar_unitary;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn to_cmatrix(g: &Mat2<f64>) -> CMatrix<f64> {
        CMatrix::from_rows(&[g[0].to_vec(), g[1].to_vec()]).unwrap()
    }

    fn gates_matrix(gates: &[Gate]) -> CMatrix<f64> {
        let mut c = Circuit::new(1, CouplingMap::line(1));
        for g in gates {
            c.push(*g).unwrap();
        }
        c.physical_unitary()
    }

    fn random_mat2(seed: u64) -> Mat2<f64> {
        let u = haar_unitary(2, &mut ChaCha8Rng::seed_from_u64(seed));
        [[u[(0, 0)], u[(0, 1)]], [u[(1, 0)], u[(1, 1)]]]
    }

    fn apply_levels(levels: &[TwoLevel], d: usize) -> CMatrix<f64> {
        let mut m = CMatrix::identity(d);
        for l in levels {
            for j in 0..d {
                let (p, q) = (m[(l.zero, j)], m[(l.one, j)]);
                m[(l.zero, j)] = l.matrix[0][0] * p + l.matrix[0][1] * q;
                m[(l.one, j)] = l.matrix[1][0] * p + l.matrix[1][1] * q;
            }
        }
        m
    }

    #[test]
    fn zyz_reconstructs_random_unitaries() {
        for seed in 0..20 {
            let m = random_mat2(seed);
            let (alpha, beta, gamma, delta) = zyz_angles(&m);
            let r = mat2_mul(&rz(beta), &mat2_mul(&ry(gamma), &rz(delta)));
            let r = r.map(|row| row.map(|z| z * C64::from_polar(1.0, alpha)));
            assert!(
                to_cmatrix(&r).max_abs_diff(&to_cmatrix(&m)) < 1e-12,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let mut cases: Vec<Mat2<f64>> = (0..20).map(random_mat2).collect();
        cases.push(pauli_x());
        cases.push(mat2_identity::<f64>().map(|r| r.map(|z| -z)));
        cases.push(rz(PI - 1e-9));
        for m in cases {
            let v = unitary_sqrt(&m);
            assert!(to_cmatrix(&mat2_mul(&v, &v)).max_abs_diff(&to_cmatrix(&m)) < 1e-12);
        }
    }

    #[test]
    fn single_qubit_lowering_matches_up_to_phase() {
        let mut cases: Vec<Mat2<f64>> = (100..130).map(random_mat2).collect();
        cases.extend([
            pauli_x(),
            sqrt_x(),
            rz(0.3),
            mat2_mul(&pauli_x(), &rz(1.1)),
            ry(PI),
        ]);
        for m in cases {
            let gates = lower_single(&m, 0);
            assert!(gates.len() <= 5);
            assert!(
                gates_matrix(&gates).phase_aligned_diff(&to_cmatrix(&m)) < 1e-12,
                "{gates:?}"
            );
        }
    }

    #[test]
    fn two_level_factors_multiply_back() {
        for seed in 0..5 {
            let u = haar_unitary(8, &mut ChaCha8Rng::seed_from_u64(seed));
            let levels = two_level_factorization(u.matrix());
            for l in &levels {
                assert_eq!((l.zero ^ l.one).count_ones(), 1, "Gray-adjacent pair");
            }
            assert!(apply_levels(&levels, 8).phase_aligned_diff(u.matrix()) < 1e-12);
        }
    }

    #[test]
    fn non_adjacent_two_level_is_conditioned_correctly() {
        let m = random_mat2(7);
        let level = TwoLevel {
            zero: 1,
            one: 6,
            matrix: m,
        };
        let mut ops = Vec::new();
        emit_two_level(&mut ops, &level, 3);
        let mut c = Circuit::new(3, CouplingMap::all_to_all(3));
        for op in fuse_single_qubit_runs(ops, 3) {
            match op {
                Op::Single(q, m) => lower_single(&m, q)
                    .into_iter()
                    .for_each(|g| c.push(g).unwrap()),
                Op::Cnot(a, b) => c
                    .push(Gate::Cnot {
                        control: a,
                        target: b,
                    })
                    .unwrap(),
            }
        }
        let want = apply_levels(&[level], 8);
        assert!(c.physical_unitary::<f64>().phase_aligned_diff(&want) < 1e-12);
    }

    #[test]
    fn identity_compiles_to_nothing() {
        let (c, report) =
            compile_generic(&UnitaryMatrix::<f64>::identity(8), &CouplingMap::line(3)).unwrap();
        assert!(report.total_gates <= c.n_wires());
        assert_eq!(report.cnot_count, 0);
    }

    #[test]
    fn routes_long_range_cnot_on_a_line() {
        let cnot02 = Gate::Cnot {
            control: 0,
            target: 2,
        }
        .full_matrix::<f64>(3);
        let u = UnitaryMatrix::new(cnot02).unwrap();
        let (c, _) = compile_generic(&u, &CouplingMap::line(3)).unwrap();
        c.validate().unwrap();
        assert!(unitary_of_circuit::<f64>(&c).phase_aligned_diff(u.matrix()) < 1e-10);
    }

    #[test]
    fn routing_helper_inserts_swaps() {
        let mut c = Circuit::new(3, CouplingMap::line(3));
        route_cnot(&mut c, 0, 2).unwrap();
        assert_eq!(c.cnot_count(), 7);
        let want = Gate::Cnot {
            control: 0,
            target: 2,
        }
        .full_matrix::<f64>(3);
        assert!(c.physical_unitary::<f64>().max_abs_diff(&want) < 1e-15);
        let mut split = Circuit::new(3, CouplingMap::new([(0, 1)]).unwrap());
        assert!(matches!(
            route_cnot(&mut split, 0, 2),
            Err(Error::Disconnected(0, 2))
        ));
    }

    #[test]
    fn engine_target_compiles_through_layout() {
        let u = build_target_unitary::<f64>(&VChoice::Identity, &PhaseChoice::zero()).unwrap();
        let (c, report) =
            compile_with_layout(&u, &CouplingMap::line(3), &WireLayout::engine()).unwrap();
        c.validate().unwrap();
        assert!(unitary_of_circuit::<f64>(&c).phase_aligned_diff(u.matrix()) < 1e-8);
        assert!(report.cnot_count > 0 && report.cnot_count <= report.total_gates);
    }

    #[test]
    fn two_qubit_and_four_qubit_unitaries() {
        for (n, seed) in [(1usize, 3u64), (2, 4), (4, 5)] {
            let u = haar_unitary(1 << n, &mut ChaCha8Rng::seed_from_u64(seed));
            let (c, _) = compile_generic(&u, &CouplingMap::line(n)).unwrap();
            assert!(
                unitary_of_circuit::<f64>(&c).phase_aligned_diff(u.matrix()) < 1e-8,
                "n = {n}"
            );
        }
    }

    #[test]
    fn rejects_non_unitary_input() {
        let mut m = CMatrix::<f64>::identity(4);
        m[(0, 0)] = C64::new(2.0, 0.0);
        let u = UnitaryMatrix::new_unchecked(m);
        assert!(matches!(
            compile_generic(&u, &CouplingMap::line(2)),
            Err(Error::NotUnitary { .. })
        ));
    }
}
