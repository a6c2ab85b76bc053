use qsim_core::{qft_on, Circuit, Layout};

use crate::fourier::phase_ladder;
use crate::signed::SignedMagnitude;
use crate::ArithError;

/// Cross product of a quantum point with a classical vector (v1, v2):
///
/// |Sx>|x>|Sy>|y>|0> -> |Sx>|x>|Sy>|y>| x v2 - y v1 >
///
/// Inputs are sign-magnitude; the output accumulates in two's complement
/// modulo 2^out.width. Each magnitude bit contributes a constant phase-adder
/// ladder whose sign is conditioned on the operand's sign qubit, which is
/// the mixed-notation multiply-then-add scheme collapsed into the Fourier
/// basis (no product register needed).
pub fn vector_cross_product(
    layout: &Layout,
    x: &SignedMagnitude,
    y: &SignedMagnitude,
    out: &qsim_core::Register,
    v1: i64,
    v2: i64,
) -> Result<Circuit, ArithError> {
    let regs = [&x.sign, &x.magnitude, &y.sign, &y.magnitude, out];
    for i in 0..regs.len() {
        for j in i + 1..regs.len() {
            if regs[i].overlaps(regs[j]) {
                return Err(ArithError::RegisterConflict {
                    a: regs[i].name().to_string(),
                    b: regs[j].name().to_string(),
                });
            }
        }
    }
    // worst-case |x v2 - y v1| given the magnitude widths
    let max_x = (1u128 << x.magnitude.width()) - 1;
    let max_y = (1u128 << y.magnitude.width()) - 1;
    let bound = max_x * v2.unsigned_abs() as u128 + max_y * v1.unsigned_abs() as u128;
    let needed = (128 - bound.leading_zeros()) as usize + 1;
    if out.width() < needed {
        return Err(ArithError::WidthShortfall {
            op: "vector_cross_product",
            register: out.name().to_string(),
            needed,
            got: out.width(),
        });
    }

    let w = out.width() as u32;
    let modulus = 1u128 << w;
    let reduce = |v: i128| -> u64 { (((v % modulus as i128) + modulus as i128) % modulus as i128) as u64 };
    let out_qubits = out.qubits();
    let fwd = qft_on(layout.num_qubits(), &out_qubits);
    let mut c = fwd.clone();
    // + x * v2, sign-conditioned on Sx
    for j in 0..x.magnitude.width() {
        let term = (v2 as i128) << j;
        for (sign_set, signed) in [(false, term), (true, -term)] {
            phase_ladder(
                &mut c,
                &out_qubits,
                reduce(signed),
                &[(x.magnitude.qubit(j), true), (x.sign.qubit(0), sign_set)],
            );
        }
    }
    // - y * v1, sign-conditioned on Sy
    for j in 0..y.magnitude.width() {
        let term = (v1 as i128) << j;
        for (sign_set, signed) in [(false, -term), (true, term)] {
            phase_ladder(
                &mut c,
                &out_qubits,
                reduce(signed),
                &[(y.magnitude.qubit(j), true), (y.sign.qubit(0), sign_set)],
            );
        }
    }
    c.append(&fwd.inverse());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::decode_twos_complement;
    use qsim_core::{dominant_basis, Layout, QuantumState, RegisterRole, SparseState};

    #[test]
    fn cross_product_examples() {
        let mut layout = Layout::new();
        let sx = layout.alloc("sx", 1, RegisterRole::Sign);
        let xm = layout.alloc("x", 3, RegisterRole::Coordinate);
        let sy = layout.alloc("sy", 1, RegisterRole::Sign);
        let ym = layout.alloc("y", 3, RegisterRole::Coordinate);
        let out = layout.alloc("out", 8, RegisterRole::Accumulator);
        let x = SignedMagnitude::new(sx.clone(), xm.clone());
        let y = SignedMagnitude::new(sy.clone(), ym.clone());

        // (x, y, v1, v2, expected x*v2 - y*v1)
        let cases: [(i64, i64, i64, i64, i64); 4] = [
            (2, 1, 1, 3, 5),
            (1, 2, 3, 1, -5),
            (0, 0, 4, -2, 0),
            (-3, 2, -1, 2, -4),
        ];
        for (xv, yv, v1, v2, expected) in cases {
            let c = vector_cross_product(&layout, &x, &y, &out, v1, v2).unwrap();
            let basis = layout.basis_index(&[
                (&sx, (xv < 0) as u64),
                (&xm, xv.unsigned_abs()),
                (&sy, (yv < 0) as u64),
                (&ym, yv.unsigned_abs()),
            ]);
            let mut s = SparseState::basis_state(layout.num_qubits(), basis).unwrap();
            s.apply_circuit(&c).unwrap();
            let (got, p) = dominant_basis(&s).unwrap();
            assert!(p >= 1.0 - 1e-9);
            assert_eq!(
                decode_twos_complement(out.extract(got), 8),
                expected,
                "x={xv} y={yv} v=({v1},{v2})"
            );
            assert_eq!(got & !out.mask(), basis, "inputs preserved");
        }
    }
}
