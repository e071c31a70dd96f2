// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! The engine unitary `U = W ⊕ V` and its hand-built 4-CNOT realization.
//!
//! `W` acts on `{|00,0⟩, |00,1⟩, |11,0⟩, |11,1⟩}` and swaps the middle two
//! states; `V` acts on `{|01,0⟩, |01,1⟩, |10,0⟩, |10,1⟩}`.

use num_complex::Complex;

use crate::circuits::circuit::{Circuit, CouplingMap};
use crate::circuits::gate::Gate;
use crate::error::{Error, Result};
use crate::qcore::{CMatrix, UnitaryMatrix, WireLayout};
use crate::scalar::Real;

/// Logical indices of the aligned (`i = j`) block.
pub const ALIGNED_BLOCK: [usize; 4] = [0, 1, 6, 7];
/// Logical indices of the anti-aligned (`i ≠ j`) block.
pub const ANTI_ALIGNED_BLOCK: [usize; 4] = [2, 3, 4, 5];

#[derive(Clone, Debug, PartialEq)]
pub enum VChoice {
    Identity,
    /// Swap `|01,1⟩ ↔ |10,0⟩`, i.e. the same shape as `W`.
    VStar,
    /// Arbitrary 4×4 unitary on the anti-aligned block.
    Custom(CMatrix<f64>),
}

/// Phases of the `W` block and, for `VStar`, of the `V` block.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PhaseChoice {
    pub w: [f64; 4],
    pub v: Option<[f64; 4]>,
}

impl PhaseChoice {
    pub fn zero() -> Self {
        Self::default()
    }
}

fn place_swap_block<T: Real>(u: &mut CMatrix<T>, block: &[usize; 4], phases: &[f64; 4]) {
    let phase = |p: f64| Complex::from_polar(T::one(), T::lit(p));
    u[(block[0], block[0])] = phase(phases[0]);
    u[(block[1], block[2])] = phase(phases[1]);
    u[(block[2], block[1])] = phase(phases[2]);
    u[(block[3], block[3])] = phase(phases[3]);
}

/// Engine unitary in logical `|ij,k⟩` order.
pub fn build_target_unitary<T: Real>(
    v: &VChoice,
    phases: &PhaseChoice,
) -> Result<UnitaryMatrix<T>> {
    let mut u = CMatrix::<T>::zeros(8);
    place_swap_block(&mut u, &ALIGNED_BLOCK, &phases.w);
    match v {
        VChoice::Identity => {
            for &i in &ANTI_ALIGNED_BLOCK {
                u[(i, i)] = Complex::new(T::one(), T::zero());
            }
        }
        VChoice::VStar => {
            place_swap_block(&mut u, &ANTI_ALIGNED_BLOCK, &phases.v.unwrap_or_default())
        }
        VChoice::Custom(block) => {
            if block.dim() != 4 {
                return Err(Error::DimensionMismatch {
                    expected: 4,
                    found: block.dim(),
                });
            }
            UnitaryMatrix::new(block.clone())?;
            let block = block.cast::<T>();
            for (r, &gr) in ANTI_ALIGNED_BLOCK.iter().enumerate() {
                for (c, &gc) in ANTI_ALIGNED_BLOCK.iter().enumerate() {
                    u[(gr, gc)] = block[(r, c)];
                }
            }
        }
    }
    UnitaryMatrix::new(u)
}

/// Four-CNOT realization of `U(V = V*)` with all phases zero.
///
/// Physical wires: q0 carries `i`, q1 carries `k`, q2 carries `j`. The
/// sequence maps `(i, j, k) → (k, i⊕j⊕k, i)`.
pub fn build_vstar_circuit() -> Circuit {
    let mut c = Circuit::new(3, CouplingMap::line(3))
        .with_layout(WireLayout::engine())
        .expect("three-wire layout");
    for (control, target) in [(0, 1), (1, 0), (1, 2), (0, 1)] {
        c.push(Gate::Cnot { control, target })
            .expect("line-coupled CNOT");
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::circuit::unitary_of_circuit;
    use crate::qcore::BasisLabel;

    fn image_of(u: &UnitaryMatrix<f64>, col: usize) -> usize {
        (0..8).find(|&r| u[(r, col)].norm() > 0.5).unwrap()
    }

    #[test]
    fn identity_choice_swaps_001_and_110_only() {
        let u = build_target_unitary::<f64>(&VChoice::Identity, &PhaseChoice::zero()).unwrap();
        for label in BasisLabel::all() {
            let expected = match label.index() {
                1 => 6,
                6 => 1,
                other => other,
            };
            assert_eq!(image_of(&u, label.index()), expected, "{label}");
        }
    }

    #[test]
    fn vstar_choice_is_the_xor_permutation() {
        // oracle: enumerate (i,j,k) -> (k, i^j^k, i)
        let u = build_target_unitary::<f64>(&VChoice::VStar, &PhaseChoice::zero()).unwrap();
        for l in BasisLabel::all() {
            let img = BasisLabel::new(l.k, l.i ^ l.j ^ l.k, l.i);
            assert_eq!(image_of(&u, l.index()), img.index(), "{l}");
        }
    }

    #[test]
    fn first_phase_lands_on_ground_state() {
        let phases = PhaseChoice {
            w: [std::f64::consts::PI, 0.0, 0.0, 0.0],
            v: None,
        };
        let u = build_target_unitary::<f64>(&VChoice::Identity, &phases).unwrap();
        assert!((u[(0, 0)] - Complex::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn block_diagonal_structure() {
        let phases = PhaseChoice {
            w: [0.1, 0.2, 0.3, 0.4],
            v: Some([0.5, 0.6, 0.7, 0.8]),
        };
        let u = build_target_unitary::<f64>(&VChoice::VStar, &phases).unwrap();
        for &r in &ALIGNED_BLOCK {
            for &c in &ANTI_ALIGNED_BLOCK {
                assert_eq!(u[(r, c)].norm(), 0.0);
                assert_eq!(u[(c, r)].norm(), 0.0);
            }
        }
        assert!((u[(1, 6)] - Complex::from_polar(1.0, 0.2)).norm() < 1e-15);
        assert!((u[(4, 3)] - Complex::from_polar(1.0, 0.7)).norm() < 1e-15);
    }

    #[test]
    fn custom_block_must_be_unitary() {
        let mut bad = CMatrix::<f64>::identity(4);
        bad[(0, 1)] = Complex::new(0.5, 0.0);
        assert!(build_target_unitary::<f64>(&VChoice::Custom(bad), &PhaseChoice::zero()).is_err());
        let swap = CMatrix::<f64>::permutation(&[3, 2, 1, 0]);
        let u = build_target_unitary::<f64>(&VChoice::Custom(swap), &PhaseChoice::zero()).unwrap();
        assert_eq!(image_of(&u, 2), 5);
    }

    #[test]
    fn vstar_circuit_matches_target_exactly() {
        let c = build_vstar_circuit();
        assert_eq!(c.cnot_count(), 4);
        let got = unitary_of_circuit::<f64>(&c);
        let want = build_target_unitary::<f64>(&VChoice::VStar, &PhaseChoice::zero()).unwrap();
        assert_eq!(got.matrix(), want.matrix());
        // |00,1> -> |11,0>
        assert_eq!(
            image_of(&got, BasisLabel::new(0, 0, 1).index()),
            BasisLabel::new(1, 1, 0).index()
        );
    }

    #[test]
    fn works_in_single_precision() {
        let u = build_target_unitary::<f32>(
            &VChoice::VStar,
            &PhaseChoice {
                w: [0.3; 4],
                v: Some([0.1; 4]),
            },
        )
        .unwrap();
        assert!(u.unitarity_defect() < 1e-6);
    }
}
