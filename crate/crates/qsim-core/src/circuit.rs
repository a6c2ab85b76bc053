use crate::gate::{GateKind, GateOp};

/// An ordered list of gates on a fixed number of qubits.
///
/// Circuits are immutable once built and freely shareable; all builder
/// methods are used during construction only.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<GateOp>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[GateOp] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: GateOp) -> &mut Self {
        gate.validate();
        if let Some(q) = gate.max_qubit() {
            assert!(
                q < self.num_qubits,
                "gate touches qubit {q} but circuit has {} qubits",
                self.num_qubits
            );
        }
        self.gates.push(gate);
        self
    }

    pub fn x(&mut self, target: usize) -> &mut Self {
        self.push(GateOp::new(GateKind::X, vec![target], vec![]))
    }

    pub fn h(&mut self, target: usize) -> &mut Self {
        self.push(GateOp::new(GateKind::H, vec![target], vec![]))
    }

    pub fn z(&mut self, target: usize) -> &mut Self {
        self.push(GateOp::new(GateKind::Z, vec![target], vec![]))
    }

    pub fn phase(&mut self, target: usize, angle: f64) -> &mut Self {
        self.push(GateOp::new(GateKind::Phase(angle), vec![target], vec![]))
    }

    pub fn swap(&mut self, a: usize, b: usize) -> &mut Self {
        self.push(GateOp::new(GateKind::Swap, vec![a, b], vec![]))
    }

    pub fn global_phase(&mut self, angle: f64) -> &mut Self {
        self.push(GateOp::new(GateKind::GlobalPhase(angle), vec![], vec![]))
    }

    pub fn cx(&mut self, control: usize, target: usize) -> &mut Self {
        self.push(GateOp::new(
            GateKind::X,
            vec![target],
            vec![(control, true)],
        ))
    }

    /// X on `target` conditioned on an arbitrary control pattern.
    pub fn mcx(&mut self, controls: &[(usize, bool)], target: usize) -> &mut Self {
        self.push(GateOp::new(GateKind::X, vec![target], controls.to_vec()))
    }

    pub fn controlled_phase(
        &mut self,
        controls: &[(usize, bool)],
        target: usize,
        angle: f64,
    ) -> &mut Self {
        self.push(GateOp::new(
            GateKind::Phase(angle),
            vec![target],
            controls.to_vec(),
        ))
    }

    /// Phase e^{i angle} on every basis state matching `controls`.
    pub fn controlled_global_phase(
        &mut self,
        controls: &[(usize, bool)],
        angle: f64,
    ) -> &mut Self {
        self.push(GateOp::new(
            GateKind::GlobalPhase(angle),
            vec![],
            controls.to_vec(),
        ))
    }

    /// Appends all gates of `other` (same qubit count required).
    pub fn append(&mut self, other: &Circuit) -> &mut Self {
        assert_eq!(
            self.num_qubits, other.num_qubits,
            "appending circuits of different widths"
        );
        self.gates.extend(other.gates.iter().cloned());
        self
    }

    /// The exact adjoint: gates reversed, each replaced by its adjoint.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(GateOp::adjoint).collect(),
        }
    }

    /// The same circuit with `extra` controls attached to every gate.
    ///
    /// Valid whenever the extra control qubits are disjoint from every qubit
    /// the circuit touches.
    pub fn controlled_on(&self, extra: &[(usize, bool)]) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self
                .gates
                .iter()
                .map(|g| g.with_extra_controls(extra))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn inverse_negates_phases_and_reverses_order() {
        let mut c = Circuit::new(2);
        c.x(0).h(1).phase(0, FRAC_PI_4);
        let inv = c.inverse();
        assert_eq!(inv.gates()[0].kind, GateKind::Phase(-FRAC_PI_4));
        assert_eq!(inv.gates()[1].kind, GateKind::H);
        assert_eq!(inv.gates()[2].kind, GateKind::X);
    }

    #[test]
    fn inverse_is_an_involution() {
        let mut c = Circuit::new(3);
        c.h(0)
            .cx(0, 1)
            .phase(2, 0.3)
            .swap(1, 2)
            .global_phase(1.1)
            .mcx(&[(0, true), (1, false)], 2);
        assert_eq!(c.inverse().inverse(), c);
    }

    #[test]
    #[should_panic(expected = "collides")]
    fn control_on_target_rejected() {
        let mut c = Circuit::new(2);
        c.push(GateOp::new(GateKind::X, vec![0], vec![(0, true)]));
    }

    #[test]
    #[should_panic(expected = "touches qubit")]
    fn out_of_range_gate_rejected() {
        let mut c = Circuit::new(1);
        c.x(1);
    }
}
