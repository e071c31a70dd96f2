// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Elementary gates `{Rz(θ), X, √X, CNOT}` and their action on dense
//! operators in physical wire order (wire 0 = most significant bit).

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::qcore::CMatrix;
use crate::scalar::Real;

/// 2×2 complex matrix, row-major.
pub type Mat2<T> = [[Complex<T>; 2]; 2];

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    Rz { wire: usize, theta: f64 },
    X(usize),
    Sx(usize),
    Cnot { control: usize, target: usize },
}

impl Gate {
    pub fn wires(&self) -> Vec<usize> {
        match *self {
            Gate::Rz { wire, .. } | Gate::X(wire) | Gate::Sx(wire) => vec![wire],
            Gate::Cnot { control, target } => vec![control, target],
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Cnot { .. })
    }

    /// Single-qubit matrix, or `None` for CNOT.
    pub fn single_qubit_matrix<T: Real>(&self) -> Option<Mat2<T>> {
        match *self {
            Gate::Rz { theta, .. } => Some(rz(T::lit(theta))),
            Gate::X(_) => Some(pauli_x()),
            Gate::Sx(_) => Some(sqrt_x()),
            Gate::Cnot { .. } => None,
        }
    }

    /// Dense matrix on `n` wires.
    pub fn full_matrix<T: Real>(&self, n: usize) -> CMatrix<T> {
        let mut m = CMatrix::identity(1 << n);
        apply_left(&mut m, self, n);
        m
    }
}

pub fn rz<T: Real>(theta: T) -> Mat2<T> {
    let half = theta / T::lit(2.0);
    [
        [Complex::from_polar(T::one(), -half), Complex::zero()],
        [Complex::zero(), Complex::from_polar(T::one(), half)],
    ]
}

pub fn pauli_x<T: Real>() -> Mat2<T> {
    [
        [Complex::zero(), Complex::one()],
        [Complex::one(), Complex::zero()],
    ]
}

/// `√X = ½[[1+i, 1−i], [1−i, 1+i]]`.
pub fn sqrt_x<T: Real>() -> Mat2<T> {
    let h = T::lit(0.5);
    let p = Complex::new(h, h);
    let m = Complex::new(h, -h);
    [[p, m], [m, p]]
}

pub fn mat2_mul<T: Real>(a: &Mat2<T>, b: &Mat2<T>) -> Mat2<T> {
    let mut out = [[Complex::zero(); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat2_adjoint<T: Real>(a: &Mat2<T>) -> Mat2<T> {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

pub fn mat2_identity<T: Real>() -> Mat2<T> {
    [
        [Complex::one(), Complex::zero()],
        [Complex::zero(), Complex::one()],
    ]
}

fn wire_bit(wire: usize, n: usize) -> usize {
    1 << (n - 1 - wire)
}

/// `m ← G m` for a single-qubit matrix on `wire`.
pub fn apply_single_left<T: Real>(m: &mut CMatrix<T>, g: &Mat2<T>, wire: usize, n: usize) {
    let bit = wire_bit(wire, n);
    let dim = m.dim();
    for r0 in (0..dim).filter(|r| r & bit == 0) {
        let r1 = r0 | bit;
        for c in 0..dim {
            let (a, b) = (m[(r0, c)], m[(r1, c)]);
            m[(r0, c)] = g[0][0] * a + g[0][1] * b;
            m[(r1, c)] = g[1][0] * a + g[1][1] * b;
        }
    }
}

/// `m ← m G†` for a single-qubit matrix on `wire`.
pub fn apply_single_right_adjoint<T: Real>(m: &mut CMatrix<T>, g: &Mat2<T>, wire: usize, n: usize) {
    let bit = wire_bit(wire, n);
    let dim = m.dim();
    for c0 in (0..dim).filter(|c| c & bit == 0) {
        let c1 = c0 | bit;
        for r in 0..dim {
            let (a, b) = (m[(r, c0)], m[(r, c1)]);
            m[(r, c0)] = a * g[0][0].conj() + b * g[0][1].conj();
            m[(r, c1)] = a * g[1][0].conj() + b * g[1][1].conj();
        }
    }
}

fn cnot_partner(index: usize, control: usize, target: usize, n: usize) -> Option<usize> {
    if index & wire_bit(control, n) != 0 && index & wire_bit(target, n) == 0 {
        Some(index | wire_bit(target, n))
    } else {
        None
    }
}

/// `m ← G m`.
pub fn apply_left<T: Real>(m: &mut CMatrix<T>, gate: &Gate, n: usize) {
    match *gate {
        Gate::Cnot { control, target } => {
            let dim = m.dim();
            for r0 in 0..dim {
                if let Some(r1) = cnot_partner(r0, control, target, n) {
                    for c in 0..dim {
                        let tmp = m[(r0, c)];
                        m[(r0, c)] = m[(r1, c)];
                        m[(r1, c)] = tmp;
                    }
                }
            }
        }
        _ => {
            let g = gate.single_qubit_matrix().expect("single-qubit gate");
            apply_single_left(m, &g, gate.wires()[0], n);
        }
    }
}

/// `m ← m G†`.
pub fn apply_right_adjoint<T: Real>(m: &mut CMatrix<T>, gate: &Gate, n: usize) {
    match *gate {
        Gate::Cnot { control, target } => {
            // CNOT is a real symmetric permutation, so G† permutes columns the same way
            let dim = m.dim();
            for c0 in 0..dim {
                if let Some(c1) = cnot_partner(c0, control, target, n) {
                    for r in 0..dim {
                        let tmp = m[(r, c0)];
                        m[(r, c0)] = m[(r, c1)];
                        m[(r, c1)] = tmp;
                    }
                }
            }
        }
        _ => {
            let g = gate.single_qubit_matrix().expect("single-qubit gate");
            apply_single_right_adjoint(m, &g, gate.wires()[0], n);
        }
    }
}

/// `m ← G m G†`.
pub fn conjugate<T: Real>(m: &mut CMatrix<T>, gate: &Gate, n: usize) {
    apply_left(m, gate, n);
    apply_right_adjoint(m, gate, n);
}
