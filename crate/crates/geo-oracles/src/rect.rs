use qarith::{add_const_inplace, ConstantOperand};
use qsim_core::{Circuit, Layout, Register, RegisterRole};

use crate::interval::{interval_check, IntervalWork};
use crate::scene::Rectangle;
use crate::OracleError;

/// Rectangle-inclusion scratch: the shared interval-checker qubits plus one
/// result flag per axis. Five auxiliary qubits, all restored.
#[derive(Debug, Clone)]
pub struct RectWork {
    pub interval: IntervalWork,
    pub sx: Register,
    pub sy: Register,
}

impl RectWork {
    pub const WIDTH: usize = IntervalWork::WIDTH + 2;

    pub fn alloc(layout: &mut Layout, prefix: &str) -> Self {
        RectWork {
            interval: IntervalWork::alloc(layout, prefix),
            sx: layout.alloc(format!("{prefix}_sx"), 1, RegisterRole::Flag),
            sy: layout.alloc(format!("{prefix}_sy"), 1, RegisterRole::Flag),
        }
    }

    pub fn carve(pool: &Register, base: usize) -> Self {
        RectWork {
            interval: IntervalWork::carve(pool, base),
            sx: pool.slice("rect_sx", base + 3, 1, RegisterRole::Flag),
            sy: pool.slice("rect_sy", base + 4, 1, RegisterRole::Flag),
        }
    }
}

/// Multi-rectangle scratch: rectangle scratch plus the per-rectangle result
/// flag that feeds the counter. Six auxiliary qubits.
#[derive(Debug, Clone)]
pub struct MultiRectWork {
    pub rect: RectWork,
    pub s: Register,
}

impl MultiRectWork {
    pub const WIDTH: usize = RectWork::WIDTH + 1;

    pub fn alloc(layout: &mut Layout, prefix: &str) -> Self {
        MultiRectWork {
            rect: RectWork::alloc(layout, prefix),
            s: layout.alloc(format!("{prefix}_s"), 1, RegisterRole::Flag),
        }
    }

    pub fn carve(pool: &Register, base: usize) -> Self {
        MultiRectWork {
            rect: RectWork::carve(pool, base),
            s: pool.slice("mrio_s", base + RectWork::WIDTH, 1, RegisterRole::Flag),
        }
    }
}

/// Counter width that can hold "z is inside all m rectangles".
pub fn rect_accumulator_width(m: usize) -> usize {
    (usize::BITS - m.leading_zeros()) as usize
}

/// Rectangle inclusion: s ^= [z inside rect], bounds inclusive.
///
/// Checks each coordinate with the interval circuit into its axis flag,
/// ANDs the flags into `s`, and uncomputes the axis flags.
pub fn rect_inclusion(
    layout: &Layout,
    x_reg: &Register,
    y_reg: &Register,
    work: &RectWork,
    s: &Register,
    rect: &Rectangle,
) -> Result<Circuit, OracleError> {
    let in_x = interval_check(
        layout,
        x_reg,
        &work.interval,
        &work.sx,
        rect.a1 as u64,
        rect.a2 as u64,
    )?;
    let in_y = interval_check(
        layout,
        y_reg,
        &work.interval,
        &work.sy,
        rect.b1 as u64,
        rect.b2 as u64,
    )?;
    let mut c = in_x.clone();
    c.append(&in_y);
    c.mcx(
        &[(work.sx.qubit(0), true), (work.sy.qubit(0), true)],
        s.qubit(0),
    );
    c.append(&in_y.inverse());
    c.append(&in_x.inverse());
    Ok(c)
}

/// Multi-rectangle inclusion: count += number of rectangles containing z.
///
/// Loops rectangle inclusion into the shared flag, bumps the counter under
/// that flag, and uncomputes the flag before the next rectangle. An empty
/// rectangle list yields the identity circuit.
pub fn multi_rect_inclusion(
    layout: &Layout,
    x_reg: &Register,
    y_reg: &Register,
    work: &MultiRectWork,
    count: &Register,
    rects: &[Rectangle],
) -> Result<Circuit, OracleError> {
    let mut c = Circuit::new(layout.num_qubits());
    if rects.is_empty() {
        return Ok(c);
    }
    let needed = rect_accumulator_width(rects.len());
    if count.width() < needed {
        return Err(OracleError::WidthShortfall {
            what: "multi_rect_inclusion count register",
            needed,
            got: count.width(),
        });
    }
    let bump = add_const_inplace(layout, count, &ConstantOperand::fitting(1))?
        .controlled_on(&[(work.s.qubit(0), true)]);
    for rect in rects {
        let rio = rect_inclusion(layout, x_reg, y_reg, &work.rect, &work.s, rect)?;
        c.append(&rio);
        c.append(&bump);
        c.append(&rio.inverse());
    }
    Ok(c)
}
