// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Basis labels and the logical ↔ physical wire permutation.
//!
//! Engine states are written `|ij,k⟩`: `i` is hot qubit q0, `j` is hot qubit
//! q2 and `k` is the cold qubit q1. The logical index is `4i + 2j + k`.
//! Hardware wires are ordered (q0, q1, q2), so logical and physical indices
//! differ by a swap of the two low bits. [`WireLayout`] owns that mapping.

use std::fmt;

use crate::error::{Error, Result};
use crate::qcore::matrix::CMatrix;
use crate::scalar::Real;

/// Three-qubit engine basis label `|ij,k⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub i: u8,
    pub j: u8,
    pub k: u8,
}

impl BasisLabel {
    pub fn new(i: u8, j: u8, k: u8) -> Self {
        assert!(i < 2 && j < 2 && k < 2, "basis label bits must be 0 or 1");
        BasisLabel { i, j, k }
    }

    pub fn index(self) -> usize {
        4 * self.i as usize + 2 * self.j as usize + self.k as usize
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < 8, "three-qubit index out of range: {index}");
        BasisLabel {
            i: (index >> 2) as u8 & 1,
            j: (index >> 1) as u8 & 1,
            k: index as u8 & 1,
        }
    }

    pub fn all() -> impl Iterator<Item = BasisLabel> {
        (0..8).map(BasisLabel::from_index)
    }

    /// Whether the hot pair is in `|00⟩` or `|11⟩`.
    pub fn hot_pair_aligned(self) -> bool {
        self.i == self.j
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}{},{}>", self.i, self.j, self.k)
    }
}

/// Assignment of logical qubit positions to physical wires.
///
/// Position 0 is the most significant bit of a logical index; wire 0 is the
/// most significant bit of a physical index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WireLayout {
    wire_of: Vec<usize>,
}

impl WireLayout {
    pub fn identity(n: usize) -> Self {
        WireLayout {
            wire_of: (0..n).collect(),
        }
    }

    /// The engine layout: logical (q0, q2, q1) onto wires (0, 2, 1).
    pub fn engine() -> Self {
        WireLayout {
            wire_of: vec![0, 2, 1],
        }
    }

    pub fn new(wire_of: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; wire_of.len()];
        for &w in &wire_of {
            if w >= wire_of.len() || seen[w] {
                return Err(Error::InvalidGate(format!(
                    "layout {wire_of:?} is not a permutation"
                )));
            }
            seen[w] = true;
        }
        Ok(WireLayout { wire_of })
    }

    pub fn n_qubits(&self) -> usize {
        self.wire_of.len()
    }

    /// Physical wire carrying logical position `pos`.
    pub fn wire(&self, pos: usize) -> usize {
        self.wire_of[pos]
    }

    pub fn is_identity(&self) -> bool {
        self.wire_of.iter().enumerate().all(|(p, &w)| p == w)
    }

    /// Physical index of the basis state with logical index `logical`.
    pub fn physical_index(&self, logical: usize) -> usize {
        let n = self.wire_of.len();
        let mut out = 0;
        for (pos, &wire) in self.wire_of.iter().enumerate() {
            let bit = (logical >> (n - 1 - pos)) & 1;
            out |= bit << (n - 1 - wire);
        }
        out
    }

    pub fn logical_index(&self, physical: usize) -> usize {
        let n = self.wire_of.len();
        let mut out = 0;
        for (pos, &wire) in self.wire_of.iter().enumerate() {
            let bit = (physical >> (n - 1 - wire)) & 1;
            out |= bit << (n - 1 - pos);
        }
        out
    }

    /// `P` with `P|logical⟩ = |physical⟩`.
    pub fn permutation_matrix<T: Real>(&self) -> CMatrix<T> {
        let perm: Vec<usize> = (0..1usize << self.wire_of.len())
            .map(|l| self.physical_index(l))
            .collect();
        CMatrix::permutation(&perm)
    }

    /// Re-expresses a physical-order operator in logical order: `P† A P`.
    pub fn to_logical<T: Real>(&self, physical: &CMatrix<T>) -> CMatrix<T> {
        if self.is_identity() {
            return physical.clone();
        }
        let p = self.permutation_matrix::<T>();
        &(&p.adjoint() * physical) * &p
    }

    /// Re-expresses a logical-order operator in physical order: `P A P†`.
    pub fn to_physical<T: Real>(&self, logical: &CMatrix<T>) -> CMatrix<T> {
        if self.is_identity() {
            return logical.clone();
        }
        let p = self.permutation_matrix::<T>();
        &(&p * logical) * &p.adjoint()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    #[test]
    fn index_is_bijective_and_round_trips() {
        let mut seen = [false; 8];
        for label in BasisLabel::all() {
            let idx = label.index();
            assert!(!seen[idx]);
            seen[idx] = true;
            assert_eq!(BasisLabel::from_index(idx), label);
        }
        assert_eq!(BasisLabel::new(1, 1, 0).index(), 6);
        assert_eq!(BasisLabel::new(0, 0, 1).index(), 1);
    }

    #[test]
    fn engine_layout_swaps_low_bits() {
        let layout = WireLayout::engine();
        // |ij,k> -> physical (q0, q1, q2) = (i, k, j)
        for label in BasisLabel::all() {
            let phys = 4 * label.i as usize + 2 * label.k as usize + label.j as usize;
            assert_eq!(layout.physical_index(label.index()), phys);
            assert_eq!(layout.logical_index(phys), label.index());
        }
    }

    #[test]
    fn layout_conjugation_round_trips() {
        let layout = WireLayout::engine();
        let mut a = CMatrix::<f64>::zeros(8);
        for i in 0..8 {
            for j in 0..8 {
                a[(i, j)] = Complex::new((i * 8 + j) as f64, i as f64 - j as f64);
            }
        }
        let back = layout.to_logical(&layout.to_physical(&a));
        assert!(back.max_abs_diff(&a) < 1e-15);
        // entry bookkeeping: logical (r, c) sits at physical (P r, P c)
        let phys = layout.to_physical(&a);
        assert_eq!(
            phys[(layout.physical_index(1), layout.physical_index(6))],
            a[(1, 6)]
        );
    }

    #[test]
    fn rejects_non_permutation_layout() {
        assert!(WireLayout::new(vec![0, 0, 1]).is_err());
        assert!(WireLayout::new(vec![0, 3, 1]).is_err());
    }
}
