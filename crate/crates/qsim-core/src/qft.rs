use std::f64::consts::PI;

use crate::circuit::Circuit;
use crate::register::Register;

/// Quantum Fourier transform over an explicit qubit list, `qubits[0]` being
/// the least significant bit of the transformed value.
///
/// Maps |x> to 2^{-w/2} sum_y e^{2 pi i x y / 2^w} |y> with the standard
/// H + controlled-phase ladder and final bit-reversal swaps; O(w^2) gates.
pub fn qft_on(num_qubits: usize, qubits: &[usize]) -> Circuit {
    let w = qubits.len();
    let mut c = Circuit::new(num_qubits);
    for i in (0..w).rev() {
        c.h(qubits[i]);
        for k in (0..i).rev() {
            let angle = PI / (1u64 << (i - k)) as f64;
            c.controlled_phase(&[(qubits[k], true)], qubits[i], angle);
        }
    }
    for i in 0..w / 2 {
        c.swap(qubits[i], qubits[w - 1 - i]);
    }
    c
}

/// QFT over a register's computational basis.
pub fn qft(num_qubits: usize, register: &Register) -> Circuit {
    qft_on(num_qubits, &register.qubits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::register::RegisterRole;
    use crate::state::{QuantumState, StateVector};
    use num_complex::Complex64;

    /// Direct DFT reference: amplitude of |y> after qft|x> must be
    /// e^{2 pi i x y / N} / sqrt(N).
    #[test]
    fn qft_matches_fourier_formula() {
        for w in 1..=4usize {
            let n = 1u64 << w;
            let reg = Register::new("r", 0, w, RegisterRole::Coordinate);
            let circuit = qft(w, &reg);
            for x in 0..n {
                let mut s = StateVector::basis_state(w, x).unwrap();
                s.apply_circuit(&circuit).unwrap();
                for y in 0..n {
                    let expected = Complex64::from_polar(
                        1.0 / (n as f64).sqrt(),
                        2.0 * PI * (x as f64) * (y as f64) / n as f64,
                    );
                    let got = s.amplitude(y);
                    assert!(
                        (got - expected).norm() < 1e-10,
                        "w={w} x={x} y={y}: got {got}, expected {expected}"
                    );
                }
            }
        }
    }

    #[test]
    fn width_one_qft_is_hadamard() {
        let reg = Register::new("r", 0, 1, RegisterRole::Coordinate);
        let c = qft(1, &reg);
        assert_eq!(c.len(), 1);
        let mut s = StateVector::new(1).unwrap();
        s.apply_circuit(&c).unwrap();
        assert!((s.amplitude(0).re - 1.0 / 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((s.amplitude(1).re - 1.0 / 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn qft_of_zero_is_uniform() {
        let reg = Register::new("r", 0, 3, RegisterRole::Coordinate);
        let mut s = StateVector::new(3).unwrap();
        s.apply_circuit(&qft(3, &reg)).unwrap();
        let expected = 1.0 / 8.0_f64.sqrt();
        for y in 0..8 {
            assert!((s.amplitude(y).re - expected).abs() < 1e-12);
            assert!(s.amplitude(y).im.abs() < 1e-12);
        }
    }

    #[test]
    fn qft_inverse_roundtrips_basis_states() {
        let reg = Register::new("r", 1, 3, RegisterRole::Coordinate);
        let c = qft(5, &reg);
        let inv = c.inverse();
        for x in 0..8u64 {
            let basis = reg.inject(0b10000, x);
            let mut s = StateVector::basis_state(5, basis).unwrap();
            s.apply_circuit(&c).unwrap();
            s.apply_circuit(&inv).unwrap();
            assert!(
                (s.amplitude(basis).re - 1.0).abs() < 1e-10,
                "roundtrip failed for x={x}"
            );
        }
    }
}
