use qsim_core::{Circuit, Layout, Register};

use crate::absdiff::abs_diff_const;
use crate::mult::add_square_inplace;
use crate::{ArithError, ConstantOperand};

/// Squared Euclidean distance to a fixed center (c1, c2):
///
/// |x>|y>|0...> -> |x>|y>| |x-c1| >| |y-c2| >| (x-c1)^2 + (y-c2)^2 >
///
/// with `alpha` and `extension` restored after each absolute-difference
/// stage. Two abs-diff computations feed two square-accumulations into
/// `dist`. Centers must lie in the grid range [0, 2^n).
#[allow(clippy::too_many_arguments)] // mirrors the operation's register list
pub fn euclid_sq_dist(
    layout: &Layout,
    x_reg: &Register,
    y_reg: &Register,
    dx_reg: &Register,
    dy_reg: &Register,
    dist_reg: &Register,
    alpha: &Register,
    extension: &Register,
    c1: &ConstantOperand,
    c2: &ConstantOperand,
) -> Result<Circuit, ArithError> {
    let n = x_reg.width();
    if y_reg.width() != n || dx_reg.width() != n || dy_reg.width() != n {
        return Err(ArithError::WidthShortfall {
            op: "euclid_sq_dist",
            register: dx_reg.name().to_string(),
            needed: n,
            got: dx_reg.width().min(dy_reg.width()).min(y_reg.width()),
        });
    }
    if dist_reg.width() < 2 * n + 1 {
        return Err(ArithError::WidthShortfall {
            op: "euclid_sq_dist",
            register: dist_reg.name().to_string(),
            needed: 2 * n + 1,
            got: dist_reg.width(),
        });
    }
    let limit = 1u64 << n;
    for c in [c1, c2] {
        if c.value() >= limit {
            return Err(ArithError::ConstantOutOfRange {
                op: "euclid_sq_dist",
                value: c.value(),
                limit: limit - 1,
            });
        }
    }
    let mut circuit = abs_diff_const(layout, x_reg, alpha, extension, dx_reg, c1)?;
    circuit.append(&abs_diff_const(layout, y_reg, alpha, extension, dy_reg, c2)?);
    circuit.append(&add_square_inplace(layout, dx_reg, dist_reg)?);
    circuit.append(&add_square_inplace(layout, dy_reg, dist_reg)?);
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qsim_core::{dominant_basis, QuantumState, RegisterRole, SparseState};

    #[test]
    fn distance_examples() {
        let mut layout = Layout::new();
        let x = layout.alloc("x", 3, RegisterRole::Coordinate);
        let y = layout.alloc("y", 3, RegisterRole::Coordinate);
        let dx = layout.alloc("dx", 3, RegisterRole::Accumulator);
        let dy = layout.alloc("dy", 3, RegisterRole::Accumulator);
        let dist = layout.alloc("dist", 7, RegisterRole::Accumulator);
        let alpha = layout.alloc("alpha", 1, RegisterRole::Flag);
        let ext = layout.alloc("ext", 1, RegisterRole::Ancilla);

        for (xv, c1v, yv, c2v, expected) in [
            (3u64, 1u64, 0u64, 2u64, 8u64),
            (4, 4, 6, 6, 0),
            (7, 0, 7, 0, 98),
        ] {
            let circuit = euclid_sq_dist(
                &layout,
                &x,
                &y,
                &dx,
                &dy,
                &dist,
                &alpha,
                &ext,
                &ConstantOperand::fitting(c1v),
                &ConstantOperand::fitting(c2v),
            )
            .unwrap();
            let basis = layout.basis_index(&[(&x, xv), (&y, yv)]);
            let mut s = SparseState::basis_state(layout.num_qubits(), basis).unwrap();
            s.apply_circuit(&circuit).unwrap();
            let (got, p) = dominant_basis(&s).unwrap();
            assert!(p >= 1.0 - 1e-9);
            assert_eq!(dist.extract(got), expected, "({xv},{yv}) vs ({c1v},{c2v})");
            assert_eq!(dx.extract(got), xv.abs_diff(c1v));
            assert_eq!(dy.extract(got), yv.abs_diff(c2v));
            assert_eq!(alpha.extract(got) | ext.extract(got), 0, "scratch restored");
        }
    }
}
