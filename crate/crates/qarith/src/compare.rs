use qsim_core::{Circuit, Layout, Register};

use crate::fourier::{add_const_on, sub_const_on};
use crate::{ArithError, ConstantOperand};

fn joint_qubits(x_reg: &Register, extension: &Register) -> Vec<usize> {
    let mut qs = x_reg.qubits();
    qs.push(extension.qubit(0));
    qs
}

/// Treats `extension` (a |0> qubit) and `x_reg` jointly as one (n+1)-bit
/// register and maps the joint value x < 2^n to 2^n - x: bitwise complement
/// of the magnitude bits followed by an increment. For x = 0 the result is
/// 2^n, i.e. the extension bit set and magnitude zero.
pub fn negate_mod(
    layout: &Layout,
    extension: &Register,
    x_reg: &Register,
) -> Result<Circuit, ArithError> {
    check_flag_register("negate_mod", extension)?;
    if extension.overlaps(x_reg) {
        return Err(ArithError::RegisterConflict {
            a: extension.name().to_string(),
            b: x_reg.name().to_string(),
        });
    }
    let mut c = Circuit::new(layout.num_qubits());
    for q in x_reg.qubits() {
        c.x(q);
    }
    c.append(&add_const_on(
        layout.num_qubits(),
        &joint_qubits(x_reg, extension),
        1,
        &[],
    ));
    Ok(c)
}

/// |x>|0> -> |x>|alpha> with alpha = 1 iff x < c (so alpha = 0 iff x >= c).
///
/// Computes x - c on the (n+1)-bit extension of x via modular subtraction;
/// the borrow surfaces in the extension qubit, is copied to `flag`, and the
/// subtraction is undone. Requires c <= 2^n.
pub fn threshold_compare(
    layout: &Layout,
    x_reg: &Register,
    flag: &Register,
    extension: &Register,
    c: &ConstantOperand,
) -> Result<Circuit, ArithError> {
    check_flag_register("threshold_compare", flag)?;
    check_flag_register("threshold_compare", extension)?;
    for (a, b) in [(x_reg, flag), (x_reg, extension), (flag, extension)] {
        if a.overlaps(b) {
            return Err(ArithError::RegisterConflict {
                a: a.name().to_string(),
                b: b.name().to_string(),
            });
        }
    }
    let limit = 1u64 << x_reg.width();
    if c.value() > limit {
        return Err(ArithError::ConstantOutOfRange {
            op: "threshold_compare",
            value: c.value(),
            limit,
        });
    }
    let joint = joint_qubits(x_reg, extension);
    let mut circuit = Circuit::new(layout.num_qubits());
    circuit.append(&sub_const_on(layout.num_qubits(), &joint, c.value(), &[]));
    circuit.cx(extension.qubit(0), flag.qubit(0));
    circuit.append(&add_const_on(layout.num_qubits(), &joint, c.value(), &[]));
    Ok(circuit)
}

fn check_flag_register(op: &'static str, reg: &Register) -> Result<(), ArithError> {
    if reg.width() != 1 {
        return Err(ArithError::WidthShortfall {
            op,
            register: reg.name().to_string(),
            needed: 1,
            got: reg.width(),
        });
    }
    Ok(())
}
