// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex;
use num_traits::Zero;

use crate::circuits::gate::conjugate;
use crate::circuits::Circuit;
use crate::error::{Error, Result};
use crate::noise::NoiseModel;
use crate::qcore::{CMatrix, DensityOperator};
use crate::scalar::Real;

/// `ρ → (1−p) ρ + p · (I/2^s ⊗ Tr_S ρ)` on physical `wires` of an `n`-wire
/// register.
pub fn depolarize<T: Real>(rho: &CMatrix<T>, wires: &[usize], p: T, n: usize) -> CMatrix<T> {
    let dim = rho.dim();
    let mask: usize = wires
        .iter()
        .map(|&w| 1usize << (n - 1 - w))
        .fold(0, |a, b| a | b);
    let s = wires.len();
    // all assignments of the masked bits
    let subsets: Vec<usize> = (0..dim).filter(|x| x & !mask == 0).collect();
    let weight = T::one() / T::lit((1usize << s) as f64);
    let keep = T::one() - p;
    let mut out = CMatrix::zeros(dim);
    for a in 0..dim {
        for b in 0..dim {
            let mut v = rho[(a, b)] * keep;
            if a & mask == b & mask {
                let (ra, rb) = (a & !mask, b & !mask);
                let traced = subsets
                    .iter()
                    .fold(Complex::zero(), |acc: Complex<T>, &sub| {
                        acc + rho[(ra | sub, rb | sub)]
                    });
                v = v + traced * (p * weight);
            }
            out[(a, b)] = v;
        }
    }
    out
}

/// Evolves logical-order `rho` through `c`, applying the depolarizing channel
/// on each gate's wires right after the gate.
pub fn evolve_noisy<T: Real>(
    c: &Circuit,
    rho: &DensityOperator<T>,
    nm: &NoiseModel,
) -> Result<DensityOperator<T>> {
    let n = c.n_wires();
    if rho.dim() != 1 << n {
        return Err(Error::DimensionMismatch {
            expected: 1 << n,
            found: rho.dim(),
        });
    }
    nm.validate()?;
    let layout = c.layout();
    let mut m = layout.to_physical(rho.matrix());
    for gate in c.gates() {
        conjugate(&mut m, gate, n);
        let p = if gate.is_two_qubit() { nm.p2 } else { nm.p1 };
        if p > 0.0 {
            m = depolarize(&m, &gate.wires(), T::lit(p), n);
        }
    }
    Ok(DensityOperator::new_unchecked(layout.to_logical(&m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{unitary_of_circuit, CouplingMap, Gate};
    use crate::qcore::apply_unitary;

    #[test]
    fn noiseless_evolution_equals_unitary_action() {
        let mut c = Circuit::new(2, CouplingMap::line(2));
        c.push(Gate::Sx(0)).unwrap();
        c.push(Gate::Cnot {
            control: 0,
            target: 1,
        })
        .unwrap();
        c.push(Gate::Rz {
            wire: 1,
            theta: 0.3,
        })
        .unwrap();
        let rho = DensityOperator::<f64>::basis(4, 0).unwrap();
        let noisy = evolve_noisy(&c, &rho, &NoiseModel::ideal()).unwrap();
        let ideal = apply_unitary(&unitary_of_circuit(&c), &rho).unwrap();
        assert!(noisy.max_abs_diff(&ideal) < 1e-15);
    }

    #[test]
    fn full_depolarization_leaves_maximally_mixed_wire() {
        let mut c = Circuit::new(1, CouplingMap::line(1));
        c.push(Gate::X(0)).unwrap();
        let nm = NoiseModel::new(1.0, 0.0, vec![]).unwrap();
        let out = evolve_noisy(&c, &DensityOperator::<f64>::basis(2, 0).unwrap(), &nm).unwrap();
        let half = DensityOperator::<f64>::maximally_mixed(2).unwrap();
        assert!(out.max_abs_diff(&half) < 1e-15);
    }

    #[test]
    fn depolarizing_one_wire_keeps_the_other_marginal() {
        // |10> on two wires, fully depolarize wire 0: result I/2 ⊗ |0><0|
        let rho = DensityOperator::<f64>::basis(4, 2).unwrap();
        let out = depolarize(rho.matrix(), &[0], 1.0, 2);
        let expected = CMatrix::from_real_diagonal(&[0.5, 0.0, 0.5, 0.0]);
        assert!(out.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn dimension_mismatch() {
        let c = Circuit::new(3, CouplingMap::line(3));
        let rho = DensityOperator::<f64>::basis(4, 0).unwrap();
        assert!(evolve_noisy(&c, &rho, &NoiseModel::ideal()).is_err());
    }
}
