// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! OpenQASM 2.0 text output.

use std::fmt::Write;

use crate::circuits::circuit::Circuit;
use crate::circuits::gate::Gate;

/// Renders `c` with a single register `q[n]`; angles use 17 significant
/// digits so they round-trip through `f64`.
pub fn emit_qasm(c: &Circuit) -> String {
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    writeln!(out, "qreg q[{}];", c.n_wires()).unwrap();
    for g in c.gates() {
        match *g {
            Gate::Rz { wire, theta } => writeln!(out, "rz({theta:.16e}) q[{wire}];"),
            Gate::X(w) => writeln!(out, "x q[{w}];"),
            Gate::Sx(w) => writeln!(out, "sx q[{w}];"),
            Gate::Cnot { control, target } => writeln!(out, "cx q[{control}],q[{target}];"),
        }
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::circuit::CouplingMap;

    #[test]
    fn empty_circuit_is_header_only() {
        let text = emit_qasm(&Circuit::new(3, CouplingMap::line(3)));
        assert_eq!(text, "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n");
    }

    #[test]
    fn gate_lines() {
        let mut c = Circuit::new(2, CouplingMap::line(2));
        c.push(Gate::Cnot {
            control: 0,
            target: 1,
        })
        .unwrap();
        c.push(Gate::Rz {
            wire: 1,
            theta: -0.5,
        })
        .unwrap();
        c.push(Gate::Sx(0)).unwrap();
        c.push(Gate::X(1)).unwrap();
        let text = emit_qasm(&c);
        let body: Vec<&str> = text.lines().skip(3).collect();
        assert_eq!(
            body,
            [
                "cx q[0],q[1];",
                "rz(-5.0000000000000000e-1) q[1];",
                "sx q[0];",
                "x q[1];"
            ]
        );
    }

    #[test]
    fn angles_round_trip_exactly() {
        let theta = std::f64::consts::PI / 3.0;
        let mut c = Circuit::new(1, CouplingMap::line(1));
        c.push(Gate::Rz { wire: 0, theta }).unwrap();
        let text = emit_qasm(&c);
        let line = text.lines().nth(3).unwrap();
        let inner = &line[3..line.find(')').unwrap()];
        assert_eq!(inner.parse::<f64>().unwrap(), theta);
    }
}
