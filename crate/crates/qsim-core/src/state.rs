use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::circuit::Circuit;
use crate::gate::{GateKind, GateOp};
use crate::register::Register;
use crate::{SimError, MAX_QUBITS};

/// Norm / fidelity assertion tolerance.
pub const NORM_TOL: f64 = 1e-10;
/// Amplitudes below this magnitude are treated as zero when extracting the
/// dominant basis state.
pub const AMP_ZERO_TOL: f64 = 1e-12;

/// Common surface of the dense and sparse state representations.
pub trait QuantumState {
    fn num_qubits(&self) -> usize;

    fn apply_gate(&mut self, gate: &GateOp);

    fn amplitude(&self, basis: u64) -> Complex64;

    /// Visits every stored (basis, amplitude) pair.
    fn for_each_amplitude(&self, f: &mut dyn FnMut(u64, Complex64));

    /// Applies gates in order after a shape check.
    fn apply_circuit(&mut self, circuit: &Circuit) -> Result<(), SimError> {
        if circuit.num_qubits() != self.num_qubits() {
            return Err(SimError::ShapeMismatch {
                circuit: circuit.num_qubits(),
                state: self.num_qubits(),
            });
        }
        for gate in circuit.gates() {
            self.apply_gate(gate);
        }
        Ok(())
    }

    fn norm_sqr(&self) -> f64 {
        let mut total = 0.0;
        self.for_each_amplitude(&mut |_, a| total += a.norm_sqr());
        total
    }
}

/// Dense statevector over `num_qubits` qubits: 2^n complex amplitudes,
/// basis index i holds the amplitude of |i>.
#[derive(Debug, Clone)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The ground state |0...0>.
    pub fn new(num_qubits: usize) -> Result<Self, SimError> {
        Self::basis_state(num_qubits, 0)
    }

    /// A computational basis state.
    pub fn basis_state(num_qubits: usize, basis: u64) -> Result<Self, SimError> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(SimError::Capacity {
                requested: num_qubits,
                max: MAX_QUBITS,
            });
        }
        assert!(basis < (1u64 << num_qubits));
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[basis as usize] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Builds a state from raw amplitudes (length must be a power of two).
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, SimError> {
        let n = amps.len().trailing_zeros() as usize;
        if amps.len() != 1 << n || n == 0 || n > MAX_QUBITS {
            return Err(SimError::Capacity {
                requested: n,
                max: MAX_QUBITS,
            });
        }
        Ok(StateVector {
            num_qubits: n,
            amps,
        })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }
}

impl QuantumState for StateVector {
    fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    fn amplitude(&self, basis: u64) -> Complex64 {
        self.amps[basis as usize]
    }

    fn for_each_amplitude(&self, f: &mut dyn FnMut(u64, Complex64)) {
        for (i, a) in self.amps.iter().enumerate() {
            f(i as u64, *a);
        }
    }

    fn apply_gate(&mut self, gate: &GateOp) {
        let (cmask, cval) = gate.control_mask();
        let len = self.amps.len() as u64;
        match gate.kind {
            GateKind::X => {
                let t = 1u64 << gate.targets[0];
                for i in 0..len {
                    if i & t == 0 && i & cmask == cval {
                        self.amps.swap(i as usize, (i | t) as usize);
                    }
                }
            }
            GateKind::H => {
                let t = 1u64 << gate.targets[0];
                let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
                for i in 0..len {
                    if i & t == 0 && i & cmask == cval {
                        let a = self.amps[i as usize];
                        let b = self.amps[(i | t) as usize];
                        self.amps[i as usize] = s * (a + b);
                        self.amps[(i | t) as usize] = s * (a - b);
                    }
                }
            }
            GateKind::Z => {
                let t = 1u64 << gate.targets[0];
                for i in 0..len {
                    if i & t != 0 && i & cmask == cval {
                        self.amps[i as usize] = -self.amps[i as usize];
                    }
                }
            }
            GateKind::Phase(angle) => {
                let t = 1u64 << gate.targets[0];
                let ph = Complex64::from_polar(1.0, angle);
                for i in 0..len {
                    if i & t != 0 && i & cmask == cval {
                        self.amps[i as usize] *= ph;
                    }
                }
            }
            GateKind::GlobalPhase(angle) => {
                let ph = Complex64::from_polar(1.0, angle);
                for i in 0..len {
                    if i & cmask == cval {
                        self.amps[i as usize] *= ph;
                    }
                }
            }
            GateKind::Swap => {
                let a = 1u64 << gate.targets[0];
                let b = 1u64 << gate.targets[1];
                for i in 0..len {
                    if i & a != 0 && i & b == 0 && i & cmask == cval {
                        self.amps.swap(i as usize, (i ^ a ^ b) as usize);
                    }
                }
            }
        }
    }
}

/// Marginal probability distribution of a register: entry v is the total
/// probability of measuring the register value v.
pub fn register_distribution<S: QuantumState + ?Sized>(state: &S, register: &Register) -> Vec<f64> {
    register.fits(state.num_qubits()).expect("register in range");
    assert!(register.width() <= 30, "distribution register too wide");
    let mut dist = vec![0.0; 1 << register.width()];
    state.for_each_amplitude(&mut |basis, amp| {
        dist[register.extract(basis) as usize] += amp.norm_sqr();
    });
    dist
}

/// Probability weight on the register decoding to exactly 0.
pub fn register_zero_weight<S: QuantumState + ?Sized>(state: &S, register: &Register) -> f64 {
    let mut w = 0.0;
    state.for_each_amplitude(&mut |basis, amp| {
        if register.extract(basis) == 0 {
            w += amp.norm_sqr();
        }
    });
    w
}

/// The basis state carrying the most probability, with that probability.
/// Amplitudes below [`AMP_ZERO_TOL`] are ignored.
pub fn dominant_basis<S: QuantumState + ?Sized>(state: &S) -> Option<(u64, f64)> {
    let mut best: Option<(u64, f64)> = None;
    state.for_each_amplitude(&mut |basis, amp| {
        if amp.norm() < AMP_ZERO_TOL {
            return;
        }
        let p = amp.norm_sqr();
        if best.is_none_or(|(_, bp)| p > bp) {
            best = Some((basis, p));
        }
    });
    best
}

/// |<a|b>|^2.
pub fn fidelity<A: QuantumState + ?Sized, B: QuantumState + ?Sized>(a: &A, b: &B) -> f64 {
    assert_eq!(a.num_qubits(), b.num_qubits());
    let mut inner = Complex64::new(0.0, 0.0);
    a.for_each_amplitude(&mut |basis, amp| {
        inner += amp.conj() * b.amplitude(basis);
    });
    inner.norm_sqr()
}
