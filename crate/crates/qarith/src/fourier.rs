//! Fourier-basis constant addition: the shared mechanism behind every
//! arithmetic builder in this crate.

use std::f64::consts::PI;

use qsim_core::{qft_on, Circuit, GateKind, GateOp};

/// Appends the diagonal |y> -> e^{2 pi i k y / 2^w} |y> as one phase gate
/// per qubit. Applied between a QFT/inverse-QFT pair this adds k mod 2^w.
pub(crate) fn phase_ladder(
    circuit: &mut Circuit,
    qubits: &[usize],
    k: u64,
    controls: &[(usize, bool)],
) {
    let w = qubits.len() as u32;
    let modulus = 1u128 << w;
    for (j, &q) in qubits.iter().enumerate() {
        let kj = ((k as u128) << j) % modulus;
        if kj == 0 {
            continue;
        }
        let angle = 2.0 * PI * kj as f64 / modulus as f64;
        circuit.push(GateOp::new(
            GateKind::Phase(angle),
            vec![q],
            controls.to_vec(),
        ));
    }
}

/// |v> -> |v + k mod 2^w> over an explicit qubit list (LSB first).
///
/// Controls gate only the phase ladder; the QFT conjugation cancels on its
/// own when the controls fail, so the whole circuit acts as a controlled
/// adder. A zero constant produces an empty circuit.
pub(crate) fn add_const_on(
    num_qubits: usize,
    qubits: &[usize],
    k: u64,
    controls: &[(usize, bool)],
) -> Circuit {
    let w = qubits.len() as u32;
    let k = ((k as u128) % (1u128 << w)) as u64;
    if k == 0 {
        return Circuit::new(num_qubits);
    }
    let fwd = qft_on(num_qubits, qubits);
    let mut c = fwd.clone();
    phase_ladder(&mut c, qubits, k, controls);
    c.append(&fwd.inverse());
    c
}

/// Subtraction as addition of the modular complement.
pub(crate) fn sub_const_on(
    num_qubits: usize,
    qubits: &[usize],
    k: u64,
    controls: &[(usize, bool)],
) -> Circuit {
    let w = qubits.len() as u32;
    let modulus = 1u128 << w;
    let k = ((k as u128) % modulus) as u64;
    let neg = ((modulus - k as u128) % modulus) as u64;
    add_const_on(num_qubits, qubits, neg, controls)
}

/// |a>|b> -> |a>|a + b mod 2^wb>: every source bit contributes its power of
/// two through controlled phases on the Fourier-transformed destination.
pub(crate) fn add_register_on(
    num_qubits: usize,
    src_qubits: &[usize],
    dst_qubits: &[usize],
    controls: &[(usize, bool)],
) -> Circuit {
    let w = dst_qubits.len();
    let fwd = qft_on(num_qubits, dst_qubits);
    let mut c = fwd.clone();
    for (i, &sq) in src_qubits.iter().enumerate() {
        for (j, &dq) in dst_qubits.iter().enumerate() {
            if i + j >= w {
                continue;
            }
            let angle = 2.0 * PI / (1u64 << (w - i - j)) as f64;
            let mut ctrls = controls.to_vec();
            ctrls.push((sq, true));
            c.push(GateOp::new(GateKind::Phase(angle), vec![dq], ctrls));
        }
    }
    c.append(&fwd.inverse());
    c
}
