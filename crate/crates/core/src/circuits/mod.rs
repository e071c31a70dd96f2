// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Gate IR, engine unitaries, the generic compiler, and QASM output.

pub mod circuit;
pub mod compile;
pub mod gate;
pub mod qasm;
pub mod target;

pub use circuit::{unitary_of_circuit, Circuit, CompileReport, CouplingMap};
pub use compile::{compile_generic, compile_with_layout};
pub use gate::Gate;
pub use qasm::emit_qasm;
pub use target::{build_target_unitary, build_vstar_circuit, PhaseChoice, VChoice};

use crate::error::Result;
use crate::qcore::WireLayout;

/// Engine circuit for `v`: the 4-CNOT construction for `VStar`, otherwise the
/// compiled target on the three-wire line.
pub fn engine_circuit(v: &VChoice, phases: &PhaseChoice) -> Result<Circuit> {
    match v {
        VChoice::VStar if *phases == PhaseChoice::zero() => Ok(build_vstar_circuit()),
        _ => {
            let u = build_target_unitary::<f64>(v, phases)?;
            let (c, _) = compile_with_layout(&u, &CouplingMap::line(3), &WireLayout::engine())?;
            Ok(c)
        }
    }
}
