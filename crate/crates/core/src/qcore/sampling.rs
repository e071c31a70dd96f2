// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded multinomial shot sampling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

use crate::qcore::state::ProbabilityVector;
use crate::scalar::Real;

/// Outcome counts from repeated measurement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsVector {
    counts: Vec<u64>,
}

impl CountsVector {
    pub fn new(counts: Vec<u64>) -> Self {
        CountsVector { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn shots(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Empirical frequencies; exact column sums by construction.
    pub fn frequencies<T: Real>(&self) -> ProbabilityVector<T> {
        let total = T::lit(self.shots() as f64);
        let probs = self
            .counts
            .iter()
            .map(|&c| T::lit(c as f64) / total)
            .collect();
        ProbabilityVector::from_unnormalized(probs).expect("counts are nonnegative")
    }
}

/// Draws `shots` outcomes from `p`, deterministic in `seed`.
///
/// Uses the conditional-binomial construction: outcome `m` receives
/// `Binomial(remaining, p[m] / remaining_mass)` shots.
pub fn sample_counts<T: Real>(p: &ProbabilityVector<T>, shots: u64, seed: u64) -> CountsVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; p.dim()];
    let mut remaining = shots;
    let mut mass = 1.0f64;
    for (m, prob) in p.iter().enumerate() {
        if remaining == 0 {
            break;
        }
        let prob = prob.as_f64();
        if m + 1 == p.dim() || prob >= mass {
            counts[m] = remaining;
            break;
        }
        let q = (prob / mass).clamp(0.0, 1.0);
        let drawn = Binomial::new(remaining, q)
            .expect("valid binomial")
            .sample(&mut rng);
        counts[m] = drawn;
        remaining -= drawn;
        mass -= prob;
    }
    CountsVector { counts }
}
