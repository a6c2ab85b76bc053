use qsim_core::{Circuit, Layout, Register};

use crate::compare::threshold_compare;
use crate::fourier::{add_const_on, sub_const_on};
use crate::{ArithError, ConstantOperand};

/// |x>|0>|0>|0> -> |x>|0>|0>| |x - k| >, with `alpha` and `extension`
/// restored to |0> exactly.
///
/// Six-stage evolution: compare x against k into `alpha`; copy x into the
/// output; conditionally negate, add k and drop the 2^n correction when
/// alpha = 1; subtract k when alpha = 0; finally undo the comparison so the
/// auxiliary qubits are reusable. The extension qubit doubles as the
/// comparator borrow bit and as the top bit of the output's working span.
pub fn abs_diff_const(
    layout: &Layout,
    x_reg: &Register,
    alpha: &Register,
    extension: &Register,
    out: &Register,
    k: &ConstantOperand,
) -> Result<Circuit, ArithError> {
    let n = x_reg.width();
    let regs = [x_reg, alpha, extension, out];
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
    if alpha.width() != 1 || extension.width() != 1 {
        return Err(ArithError::WidthShortfall {
            op: "abs_diff_const",
            register: if alpha.width() != 1 {
                alpha.name().to_string()
            } else {
                extension.name().to_string()
            },
            needed: 1,
            got: alpha.width().max(extension.width()),
        });
    }
    let limit = 1u64 << n;
    if k.value() > limit {
        return Err(ArithError::ConstantOutOfRange {
            op: "abs_diff_const",
            value: k.value(),
            limit,
        });
    }
    // |x - k| can reach 2^n only when k = 2^n; then the result needs n+1 bits.
    let needed = if k.value() == limit { n + 1 } else { n };
    if out.width() < needed {
        return Err(ArithError::WidthShortfall {
            op: "abs_diff_const",
            register: out.name().to_string(),
            needed,
            got: out.width(),
        });
    }

    let nq = layout.num_qubits();
    // Joint working span: out bits plus the extension qubit on top.
    let mut joint = out.qubits();
    joint.push(extension.qubit(0));
    let on_alpha = [(alpha.qubit(0), true)];
    let off_alpha = [(alpha.qubit(0), false)];

    let compare = threshold_compare(layout, x_reg, alpha, extension, k)?;
    let mut c = compare.clone();
    // copy x into the low bits of out
    for i in 0..n {
        c.cx(x_reg.qubit(i), out.qubit(i));
    }
    // alpha = 1: negate the copy to 2^n - x (complement low n bits, +1)
    for i in 0..n {
        c.mcx(&on_alpha, out.qubit(i));
    }
    c.append(&add_const_on(nq, &joint, 1, &on_alpha));
    // alpha = 1: add k, then subtract the 2^n negation offset
    c.append(&add_const_on(nq, &joint, k.value(), &on_alpha));
    c.append(&sub_const_on(nq, &joint, limit, &on_alpha));
    // alpha = 0: plain subtraction x - k
    c.append(&sub_const_on(nq, &joint, k.value(), &off_alpha));
    // undo the comparison, resetting alpha
    c.append(&compare.inverse());
    Ok(c)
}
