use qsim_core::{Circuit, Layout, Register};

use crate::fourier::{add_const_on, add_register_on};
use crate::{ArithError, ConstantOperand};

fn require_disjoint(a: &Register, b: &Register) -> Result<(), ArithError> {
    if a.overlaps(b) {
        return Err(ArithError::RegisterConflict {
            a: a.name().to_string(),
            b: b.name().to_string(),
        });
    }
    Ok(())
}

/// |x> -> |x + k mod 2^width>: QFT, one phase per qubit with angles
/// 2 pi k 2^j / 2^width, inverse QFT. Wraparound is the defined semantics.
pub fn add_const_inplace(
    layout: &Layout,
    target: &Register,
    k: &ConstantOperand,
) -> Result<Circuit, ArithError> {
    target.fits(layout.num_qubits()).expect("register in range");
    if k.width() as usize > target.width() {
        return Err(ArithError::WidthShortfall {
            op: "add_const_inplace",
            register: target.name().to_string(),
            needed: k.width() as usize,
            got: target.width(),
        });
    }
    Ok(add_const_on(
        layout.num_qubits(),
        &target.qubits(),
        k.value(),
        &[],
    ))
}

/// |a>|b> -> |a>|a + b mod 2^target.width>; the source register is unchanged.
pub fn add_register_inplace(
    layout: &Layout,
    source: &Register,
    target: &Register,
) -> Result<Circuit, ArithError> {
    require_disjoint(source, target)?;
    if target.width() < source.width() {
        return Err(ArithError::WidthShortfall {
            op: "add_register_inplace",
            register: target.name().to_string(),
            needed: source.width(),
            got: target.width(),
        });
    }
    Ok(add_register_on(
        layout.num_qubits(),
        &source.qubits(),
        &target.qubits(),
        &[],
    ))
}

/// |a>|0> -> |a>|a + k> exactly; `out` must be wide enough that no wrap can
/// occur (max(source.width, k.width) + 1).
pub fn add_const_outplace(
    layout: &Layout,
    source: &Register,
    out: &Register,
    k: &ConstantOperand,
) -> Result<Circuit, ArithError> {
    require_disjoint(source, out)?;
    let needed = source.width().max(k.width() as usize) + 1;
    if out.width() < needed {
        return Err(ArithError::WidthShortfall {
            op: "add_const_outplace",
            register: out.name().to_string(),
            needed,
            got: out.width(),
        });
    }
    let mut c = add_const_on(layout.num_qubits(), &out.qubits(), k.value(), &[]);
    c.append(&add_register_on(
        layout.num_qubits(),
        &source.qubits(),
        &out.qubits(),
        &[],
    ));
    Ok(c)
}
