// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::circuits::gate::{apply_left, Gate};
use crate::error::{Error, Result};
use crate::qcore::{CMatrix, UnitaryMatrix, WireLayout};
use crate::scalar::Real;

/// Undirected wire pairs on which CNOT may act.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingMap {
    edges: BTreeSet<(usize, usize)>,
}

impl CouplingMap {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::InvalidGate(format!(
                    "self-pair ({a}, {a}) in coupling map"
                )));
            }
            edges.insert((a.min(b), a.max(b)));
        }
        Ok(CouplingMap { edges })
    }

    /// `0 - 1 - ... - (n-1)`.
    pub fn line(n: usize) -> Self {
        CouplingMap {
            edges: (1..n).map(|w| (w - 1, w)).collect(),
        }
    }

    pub fn all_to_all(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        CouplingMap { edges }
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    fn neighbors(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == w {
                Some(b)
            } else if b == w {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Breadth-first shortest wire path `from, ..., to`.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut prev = std::collections::BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        prev.insert(from, from);
        while let Some(w) = queue.pop_front() {
            if w == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for nb in self.neighbors(w) {
                if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(nb) {
                    e.insert(w);
                    queue.push_back(nb);
                }
            }
        }
        None
    }
}

/// Gate counts of a compiled circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompileReport {
    pub total_gates: usize,
    pub cnot_count: usize,
    pub depth: usize,
}

/// Ordered elementary gates on physical wires.
///
/// `layout` records which wire carries each logical qubit, so that
/// [`unitary_of_circuit`] returns matrices in the logical `|ij,k⟩` order.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    n_wires: usize,
    gates: Vec<Gate>,
    coupling: CouplingMap,
    layout: WireLayout,
}

impl Circuit {
    pub fn new(n_wires: usize, coupling: CouplingMap) -> Self {
        Circuit {
            n_wires,
            gates: Vec::new(),
            coupling,
            layout: WireLayout::identity(n_wires),
        }
    }

    pub fn with_layout(mut self, layout: WireLayout) -> Result<Self> {
        if layout.n_qubits() != self.n_wires {
            return Err(Error::DimensionMismatch {
                expected: self.n_wires,
                found: layout.n_qubits(),
            });
        }
        self.layout = layout;
        Ok(self)
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        self.check(&gate)?;
        self.gates.push(gate);
        Ok(())
    }

    fn check(&self, gate: &Gate) -> Result<()> {
        for w in gate.wires() {
            if w >= self.n_wires {
                return Err(Error::InvalidGate(format!(
                    "wire {w} out of range for {} wires",
                    self.n_wires
                )));
            }
        }
        match *gate {
            Gate::Cnot { control, target } if control == target => Err(Error::InvalidGate(
                format!("CNOT with control = target = {control}"),
            )),
            Gate::Cnot { control, target } if !self.coupling.contains(control, target) => {
                Err(Error::CouplingViolation(control, target))
            }
            Gate::Rz { theta, .. } if !theta.is_finite() => Err(Error::InvalidGate(format!(
                "non-finite rotation angle {theta}"
            ))),
            _ => Ok(()),
        }
    }

    /// Re-checks every gate against the wire count and coupling map.
    pub fn validate(&self) -> Result<()> {
        self.gates.iter().try_for_each(|g| self.check(g))
    }

    pub fn n_wires(&self) -> usize {
        self.n_wires
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn coupling(&self) -> &CouplingMap {
        &self.coupling
    }

    pub fn layout(&self) -> &WireLayout {
        &self.layout
    }

    pub fn cnot_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_two_qubit()).count()
    }

    /// ASAP layering depth.
    pub fn depth(&self) -> usize {
        let mut level = vec![0usize; self.n_wires];
        for g in &self.gates {
            let wires = g.wires();
            let next = wires.iter().map(|&w| level[w]).max().unwrap_or(0) + 1;
            for w in wires {
                level[w] = next;
            }
        }
        level.into_iter().max().unwrap_or(0)
    }

    pub fn report(&self) -> CompileReport {
        CompileReport {
            total_gates: self.gates.len(),
            cnot_count: self.cnot_count(),
            depth: self.depth(),
        }
    }

    /// Gate product in physical wire order.
    pub fn physical_unitary<T: Real>(&self) -> CMatrix<T> {
        let mut m = CMatrix::identity(1 << self.n_wires);
        for g in &self.gates {
            apply_left(&mut m, g, self.n_wires);
        }
        m
    }
}

/// Circuit unitary in logical order, directly comparable with the target
/// unitaries of [`crate::circuits::target`].
pub fn unitary_of_circuit<T: Real>(c: &Circuit) -> UnitaryMatrix<T> {
    UnitaryMatrix::new_unchecked(c.layout.to_logical(&c.physical_unitary()))
}
