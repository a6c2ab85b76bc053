use qsim_core::{qft_on, Circuit, Layout, Register};

use crate::fourier::{add_const_on, phase_ladder};
use crate::{ArithError, ConstantOperand};

/// |x>|0> -> |x>|k x>, built as a bit-controlled constant adder per source
/// bit: bit j of x gates an addition of k 2^j into `out`.
pub fn mult_const_outplace(
    layout: &Layout,
    source: &Register,
    out: &Register,
    k: &ConstantOperand,
) -> Result<Circuit, ArithError> {
    if source.overlaps(out) {
        return Err(ArithError::RegisterConflict {
            a: source.name().to_string(),
            b: out.name().to_string(),
        });
    }
    let needed = source.width() + k.width() as usize;
    if out.width() < needed {
        return Err(ArithError::WidthShortfall {
            op: "mult_const_outplace",
            register: out.name().to_string(),
            needed,
            got: out.width(),
        });
    }
    let mut c = Circuit::new(layout.num_qubits());
    for j in 0..source.width() {
        let shifted = k.value() << j;
        c.append(&add_const_on(
            layout.num_qubits(),
            &out.qubits(),
            shifted,
            &[(source.qubit(j), true)],
        ));
    }
    Ok(c)
}

/// |x>|y> -> |x>|y + x^2 mod 2^y.width>: every ordered bit pair (i, j) of x
/// contributes a doubly-controlled addition of 2^(i+j).
pub fn add_square_inplace(
    layout: &Layout,
    x_reg: &Register,
    y_reg: &Register,
) -> Result<Circuit, ArithError> {
    if x_reg.overlaps(y_reg) {
        return Err(ArithError::RegisterConflict {
            a: x_reg.name().to_string(),
            b: y_reg.name().to_string(),
        });
    }
    if y_reg.width() < 2 * x_reg.width() {
        return Err(ArithError::WidthShortfall {
            op: "add_square_inplace",
            register: y_reg.name().to_string(),
            needed: 2 * x_reg.width(),
            got: y_reg.width(),
        });
    }
    let y_qubits = y_reg.qubits();
    let fwd = qft_on(layout.num_qubits(), &y_qubits);
    let mut c = fwd.clone();
    for i in 0..x_reg.width() {
        for j in 0..x_reg.width() {
            let power = (i + j) as u32;
            let controls: Vec<(usize, bool)> = if i == j {
                vec![(x_reg.qubit(i), true)]
            } else {
                vec![(x_reg.qubit(i), true), (x_reg.qubit(j), true)]
            };
            phase_ladder(&mut c, &y_qubits, 1u64 << power, &controls);
        }
    }
    c.append(&fwd.inverse());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qsim_core::{dominant_basis, QuantumState, RegisterRole, SparseState};

    fn run(layout: &Layout, circuit: &Circuit, basis: u64) -> u64 {
        let mut s = SparseState::basis_state(layout.num_qubits(), basis).unwrap();
        s.apply_circuit(circuit).unwrap();
        let (out, p) = dominant_basis(&s).unwrap();
        assert!(p >= 1.0 - 1e-9);
        out
    }

    #[test]
    fn mult_examples() {
        let mut layout = Layout::new();
        let x = layout.alloc("x", 3, RegisterRole::Coordinate);
        let out = layout.alloc("out", 6, RegisterRole::Accumulator);
        for (xv, k, expected) in [(5u64, 3u64, 15u64), (6, 0, 0), (1, 1, 1)] {
            let c = mult_const_outplace(&layout, &x, &out, &ConstantOperand::fitting(k)).unwrap();
            let got = run(&layout, &c, layout.basis_index(&[(&x, xv)]));
            assert_eq!(out.extract(got), expected, "x={xv} k={k}");
            assert_eq!(x.extract(got), xv, "source preserved");
        }
    }

    #[test]
    fn square_adder_examples() {
        let mut layout = Layout::new();
        let x = layout.alloc("x", 3, RegisterRole::Coordinate);
        let y = layout.alloc("y", 6, RegisterRole::Accumulator);
        let c = add_square_inplace(&layout, &x, &y).unwrap();
        for (xv, yv, expected) in [(3u64, 1u64, 10u64), (0, 37, 37), (7, 0, 49)] {
            let got = run(&layout, &c, layout.basis_index(&[(&x, xv), (&y, yv)]));
            assert_eq!(y.extract(got), expected, "x={xv} y={yv}");
            assert_eq!(x.extract(got), xv);
        }
    }

    #[test]
    fn square_adder_width_requirement() {
        let mut layout = Layout::new();
        let x = layout.alloc("x", 3, RegisterRole::Coordinate);
        let y = layout.alloc("y", 5, RegisterRole::Accumulator);
        assert!(matches!(
            add_square_inplace(&layout, &x, &y),
            Err(ArithError::WidthShortfall { .. })
        ));
    }
}
