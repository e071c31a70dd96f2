// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Real;
use crate::thermo::energy::EnergyLedger;

/// Default boundary tolerance in `h·GHz` for exact ledgers.
pub const EXACT_BOUNDARY_EPS: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModeTag {
    /// Heat engine: net work extracted.
    E,
    /// Refrigerator: the cold qubit loses energy.
    R,
    /// Thermal accelerator.
    A,
    /// Heater: both subsystems gain energy.
    H,
    Boundary,
}

impl ModeTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ModeTag::E => "E",
            ModeTag::R => "R",
            ModeTag::A => "A",
            ModeTag::H => "H",
            ModeTag::Boundary => "Boundary",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            ModeTag::E,
            ModeTag::R,
            ModeTag::A,
            ModeTag::H,
            ModeTag::Boundary,
        ]
        .into_iter()
        .find(|t| t.as_str() == s)
    }
}

impl fmt::Display for ModeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperationMode {
    pub tag: ModeTag,
    /// Only set inside `R`.
    pub purifier: bool,
}

impl OperationMode {
    pub fn new(tag: ModeTag) -> Self {
        OperationMode {
            tag,
            purifier: false,
        }
    }
}

/// Sign rules on the ledger. Any component within `eps` of zero yields
/// `Boundary`; otherwise `R` takes precedence over `E`.
pub fn classify_mode<T: Real>(ledger: &EnergyLedger<T>, eps: T) -> OperationMode {
    let z = T::zero();
    let tag = if ledger.d_e_c.abs() < eps || ledger.d_e_h.abs() < eps || ledger.w.abs() < eps {
        ModeTag::Boundary
    } else if ledger.d_e_c < z {
        ModeTag::R
    } else if ledger.w < z {
        ModeTag::E
    } else if ledger.d_e_h > z {
        ModeTag::H
    } else {
        ModeTag::A
    };
    OperationMode::new(tag)
}

/// Sign rules with "hot" and "cold" meaning the hotter and the colder
/// body. For `t_hot < t_cold` the roles of the two ledger entries swap, so
/// q1 losing energy to a colder hot pair reads as `A`, not `R`.
pub fn classify_oriented<T: Real>(
    ledger: &EnergyLedger<T>,
    t_hot: T,
    t_cold: T,
    eps: T,
) -> OperationMode {
    if t_hot < t_cold {
        classify_mode(&EnergyLedger::new(ledger.d_e_c, ledger.d_e_h), eps)
    } else {
        classify_mode(ledger, eps)
    }
}
