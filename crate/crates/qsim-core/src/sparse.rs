use num_complex::Complex64;
use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::gate::{GateKind, GateOp};
use crate::state::QuantumState;
use crate::{SimError, MAX_QUBITS};

/// Amplitudes below this magnitude are dropped after amplitude-combining
/// gates. Dust-level only; total discarded weight stays far below 1e-20.
const PRUNE_TOL: f64 = 1e-13;

/// Map-based statevector with the same gate semantics as [`crate::StateVector`].
///
/// Efficient when few basis states carry weight: basis-input verification of
/// arithmetic circuits, and oracle circuits whose superposition lives on a
/// small coordinate register. The map is ordered, so iteration (and
/// everything derived from it, including sampling) is deterministic.
#[derive(Debug, Clone)]
pub struct SparseState {
    num_qubits: usize,
    amps: BTreeMap<u64, Complex64>,
}

impl SparseState {
    pub fn new(num_qubits: usize) -> Result<Self, SimError> {
        Self::basis_state(num_qubits, 0)
    }

    pub fn basis_state(num_qubits: usize, basis: u64) -> Result<Self, SimError> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(SimError::Capacity {
                requested: num_qubits,
                max: MAX_QUBITS,
            });
        }
        assert!(basis < (1u64 << num_qubits));
        let mut amps = BTreeMap::new();
        amps.insert(basis, Complex64::new(1.0, 0.0));
        Ok(SparseState { num_qubits, amps })
    }

    pub fn num_nonzero(&self) -> usize {
        self.amps.len()
    }
}

impl QuantumState for SparseState {
    fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    fn amplitude(&self, basis: u64) -> Complex64 {
        self.amps
            .get(&basis)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    fn for_each_amplitude(&self, f: &mut dyn FnMut(u64, Complex64)) {
        for (&k, &v) in &self.amps {
            f(k, v);
        }
    }

    fn apply_gate(&mut self, gate: &GateOp) {
        let (cmask, cval) = gate.control_mask();
        match gate.kind {
            GateKind::Z => {
                for (&k, v) in self.amps.iter_mut() {
                    if k & cmask == cval && k & (1u64 << gate.targets[0]) != 0 {
                        *v = -*v;
                    }
                }
            }
            GateKind::Phase(angle) => {
                let ph = Complex64::from_polar(1.0, angle);
                let t = 1u64 << gate.targets[0];
                for (&k, v) in self.amps.iter_mut() {
                    if k & cmask == cval && k & t != 0 {
                        *v *= ph;
                    }
                }
            }
            GateKind::GlobalPhase(angle) => {
                let ph = Complex64::from_polar(1.0, angle);
                for (&k, v) in self.amps.iter_mut() {
                    if k & cmask == cval {
                        *v *= ph;
                    }
                }
            }
            GateKind::X => {
                let t = 1u64 << gate.targets[0];
                // Controls are disjoint from the target, so an entry and its
                // flip partner either both move or both stay: no collisions.
                let old = std::mem::take(&mut self.amps);
                for (k, v) in old {
                    let key = if k & cmask == cval { k ^ t } else { k };
                    self.amps.insert(key, v);
                }
            }
            GateKind::Swap => {
                let a = 1u64 << gate.targets[0];
                let b = 1u64 << gate.targets[1];
                let old = std::mem::take(&mut self.amps);
                for (k, v) in old {
                    let bits = (k & a != 0, k & b != 0);
                    let key = if k & cmask == cval && bits.0 != bits.1 {
                        k ^ a ^ b
                    } else {
                        k
                    };
                    self.amps.insert(key, v);
                }
            }
            GateKind::H => {
                let t = 1u64 << gate.targets[0];
                let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
                let old = std::mem::take(&mut self.amps);
                for (k, v) in old {
                    if k & cmask == cval {
                        let k0 = k & !t;
                        let contrib = s * v;
                        *self.amps.entry(k0).or_insert(Complex64::new(0.0, 0.0)) += contrib;
                        let signed = if k & t != 0 { -contrib } else { contrib };
                        *self
                            .amps
                            .entry(k0 | t)
                            .or_insert(Complex64::new(0.0, 0.0)) += signed;
                    } else {
                        *self.amps.entry(k).or_insert(Complex64::new(0.0, 0.0)) += v;
                    }
                }
                self.amps.retain(|_, v| v.norm() > PRUNE_TOL);
            }
        }
    }
}
