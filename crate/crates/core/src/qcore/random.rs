// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Random test objects: Haar unitaries, mixed states, simplex points.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::qcore::matrix::CMatrix;
use crate::qcore::state::{DensityOperator, ProbabilityVector, UnitaryMatrix};

fn gaussian_matrix<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMatrix<f64> {
    let mut m = CMatrix::zeros(dim);
    for r in 0..dim {
        for c in 0..dim {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            m[(r, c)] = Complex::new(re, im);
        }
    }
    m
}

/// Haar-distributed unitary via Gram-Schmidt on a Ginibre matrix.
pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> UnitaryMatrix<f64> {
    let g = gaussian_matrix(dim, rng);
    let mut q = CMatrix::zeros(dim);
    for c in 0..dim {
        let mut v: Vec<Complex<f64>> = (0..dim).map(|r| g[(r, c)]).collect();
        // two passes keep the columns orthogonal to machine precision
        for _ in 0..2 {
            for prev in 0..c {
                let dot: Complex<f64> = (0..dim).map(|r| q[(r, prev)].conj() * v[r]).sum();
                for (r, x) in v.iter_mut().enumerate() {
                    *x -= dot * q[(r, prev)];
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for (r, x) in v.iter().enumerate() {
            q[(r, c)] = x / norm;
        }
    }
    UnitaryMatrix::new(q).expect("Gram-Schmidt output is unitary")
}

/// Full-rank mixed state `G G† / Tr(G G†)`.
pub fn random_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityOperator<f64> {
    let g = gaussian_matrix(dim, rng);
    let mut m = &g * &g.adjoint();
    let tr = m.trace().re;
    m = m.scale(Complex::new(1.0 / tr, 0.0));
    // symmetrize away rounding so the Hermiticity check is exact
    let m = m.add(&m.adjoint()).unwrap().scale(Complex::new(0.5, 0.0));
    DensityOperator::new(m).expect("Wishart sample is a state")
}

/// Uniform point on the probability simplex.
pub fn random_probabilities<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ProbabilityVector<f64> {
    let w: Vec<f64> = (0..dim).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = w.iter().sum();
    ProbabilityVector::from_unnormalized(w.into_iter().map(|x| x / total).collect())
        .expect("positive weights")
}
