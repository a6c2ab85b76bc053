use qarith::{add_const_inplace, vector_cross_product, ConstantOperand, SignedMagnitude};
use qsim_core::{Circuit, Layout, Register, RegisterRole};

use crate::scene::ConvexPolygon;
use crate::OracleError;

/// Polygon-oracle scratch: two signed coordinate differences (n+1 bits each,
/// sign in the top bit after conversion) and the cross-product accumulator.
/// All restored per edge.
#[derive(Debug, Clone)]
pub struct PolygonWork {
    pub dx: Register,
    pub dy: Register,
    pub cross: Register,
}

impl PolygonWork {
    pub fn width(n: usize, cross_width: usize) -> usize {
        2 * (n + 1) + cross_width
    }

    pub fn alloc(layout: &mut Layout, n: usize, cross_width: usize, prefix: &str) -> Self {
        PolygonWork {
            dx: layout.alloc(format!("{prefix}_dx"), n + 1, RegisterRole::Ancilla),
            dy: layout.alloc(format!("{prefix}_dy"), n + 1, RegisterRole::Ancilla),
            cross: layout.alloc(format!("{prefix}_cross"), cross_width, RegisterRole::Accumulator),
        }
    }

    pub fn carve(pool: &Register, base: usize, n: usize, cross_width: usize) -> Self {
        PolygonWork {
            dx: pool.slice("poly_dx", base, n + 1, RegisterRole::Ancilla),
            dy: pool.slice("poly_dy", base + n + 1, n + 1, RegisterRole::Ancilla),
            cross: pool.slice(
                "poly_cross",
                base + 2 * (n + 1),
                cross_width,
                RegisterRole::Accumulator,
            ),
        }
    }
}

/// Two's-complement cross-product register width covering every edge of the
/// polygon with n-bit difference magnitudes; at most 2n + 2.
pub fn cross_register_width(n: u32, poly: &ConvexPolygon) -> usize {
    let max_mag = (1u128 << n) - 1;
    let bound = poly
        .edges()
        .into_iter()
        .map(|(_, v)| max_mag * (v.0.unsigned_abs() as u128 + v.1.unsigned_abs() as u128))
        .max()
        .unwrap_or(0)
        .max(1);
    (128 - bound.leading_zeros()) as usize + 1
}

/// Accumulator width holding "wrong side of all M edges".
pub fn polygon_accumulator_width(num_edges: usize) -> usize {
    (usize::BITS - num_edges.leading_zeros()) as usize
}

/// Computes (p - z) as sign-magnitude into the (n+1)-bit register `d`:
/// copy z, complement, add p + 1 (two's complement of p - z), then fold the
/// sign out of the value by conditionally negating the low n bits.
fn signed_diff_from_const(
    layout: &Layout,
    z_reg: &Register,
    d: &Register,
    p: u64,
) -> Result<Circuit, OracleError> {
    let n = z_reg.width();
    let mut c = Circuit::new(layout.num_qubits());
    for i in 0..n {
        c.cx(z_reg.qubit(i), d.qubit(i));
    }
    for i in 0..=n {
        c.x(d.qubit(i));
    }
    c.append(&add_const_inplace(layout, d, &ConstantOperand::new(p + 1, (n + 1) as u32)?)?);
    // two's complement -> sign|magnitude: negate low n bits when negative
    let sign = (d.qubit(n), true);
    for i in 0..n {
        c.mcx(&[sign], d.qubit(i));
    }
    let low = d.slice("d_mag", 0, n, RegisterRole::Ancilla);
    c.append(&add_const_inplace(layout, &low, &ConstantOperand::fitting(1))?.controlled_on(&[sign]));
    Ok(c)
}

/// Polygon inclusion: g_acc += number of edges z is strictly on the wrong
/// side of; g_acc stays 0 exactly when z is inside the polygon or on its
/// boundary.
///
/// Per edge: form p_i - z in sign-magnitude, take the cross product with the
/// edge vector, bump the accumulator under the result's sign bit, and
/// uncompute everything but the accumulator.
pub fn polygon_inclusion(
    layout: &Layout,
    x_reg: &Register,
    y_reg: &Register,
    work: &PolygonWork,
    g_acc: &Register,
    poly: &ConvexPolygon,
) -> Result<Circuit, OracleError> {
    let n = x_reg.width();
    if work.dx.width() != n + 1 || work.dy.width() != n + 1 {
        return Err(OracleError::WidthShortfall {
            what: "polygon_inclusion difference registers",
            needed: n + 1,
            got: work.dx.width().min(work.dy.width()),
        });
    }
    let needed_cross = cross_register_width(n as u32, poly);
    if work.cross.width() < needed_cross {
        return Err(OracleError::WidthShortfall {
            what: "polygon_inclusion cross register",
            needed: needed_cross,
            got: work.cross.width(),
        });
    }
    let needed_acc = polygon_accumulator_width(poly.num_edges());
    if g_acc.width() < needed_acc {
        return Err(OracleError::WidthShortfall {
            what: "polygon_inclusion accumulator",
            needed: needed_acc,
            got: g_acc.width(),
        });
    }

    let dx_sm = SignedMagnitude::new(
        work.dx.slice("dx_sign", n, 1, RegisterRole::Sign),
        work.dx.slice("dx_mag", 0, n, RegisterRole::Ancilla),
    );
    let dy_sm = SignedMagnitude::new(
        work.dy.slice("dy_sign", n, 1, RegisterRole::Sign),
        work.dy.slice("dy_mag", 0, n, RegisterRole::Ancilla),
    );
    let wrong_side = (work.cross.qubit(work.cross.width() - 1), true);
    let bump = add_const_inplace(layout, g_acc, &ConstantOperand::fitting(1))?
        .controlled_on(&[wrong_side]);

    let mut c = Circuit::new(layout.num_qubits());
    for (p, v) in poly.edges() {
        let diff_x = signed_diff_from_const(layout, x_reg, &work.dx, p.x as u64)?;
        let diff_y = signed_diff_from_const(layout, y_reg, &work.dy, p.y as u64)?;
        let cross = vector_cross_product(layout, &dx_sm, &dy_sm, &work.cross, v.0, v.1)?;
        c.append(&diff_x);
        c.append(&diff_y);
        c.append(&cross);
        c.append(&bump);
        c.append(&cross.inverse());
        c.append(&diff_y.inverse());
        c.append(&diff_x.inverse());
    }
    Ok(c)
}
