use qarith::{abs_diff_const, add_square_inplace, threshold_compare, ConstantOperand};
use qsim_core::{Circuit, Layout, Register, RegisterRole};

use crate::scene::Circle;
use crate::OracleError;

/// Circle-oracle scratch: one shared |coordinate - center| register, the
/// squared-distance accumulator, and the comparator pair. 3n + 3 qubits,
/// all restored by the time the oracle completes.
#[derive(Debug, Clone)]
pub struct CircleWork {
    pub diff: Register,
    pub dist: Register,
    pub alpha: Register,
    pub ext: Register,
}

impl CircleWork {
    pub fn width(n: usize) -> usize {
        3 * n + 3
    }

    pub fn alloc(layout: &mut Layout, n: usize, prefix: &str) -> Self {
        CircleWork {
            diff: layout.alloc(format!("{prefix}_diff"), n, RegisterRole::Ancilla),
            dist: layout.alloc(format!("{prefix}_dist"), 2 * n + 1, RegisterRole::Accumulator),
            alpha: layout.alloc(format!("{prefix}_alpha"), 1, RegisterRole::Flag),
            ext: layout.alloc(format!("{prefix}_ext"), 1, RegisterRole::Ancilla),
        }
    }

    pub fn carve(pool: &Register, base: usize, n: usize) -> Self {
        CircleWork {
            diff: pool.slice("circ_diff", base, n, RegisterRole::Ancilla),
            dist: pool.slice("circ_dist", base + n, 2 * n + 1, RegisterRole::Accumulator),
            alpha: pool.slice("circ_alpha", base + 3 * n + 1, 1, RegisterRole::Flag),
            ext: pool.slice("circ_ext", base + 3 * n + 2, 1, RegisterRole::Ancilla),
        }
    }
}

/// Circle exclusion: s ^= [r^2 <= (x-c1)^2 + (y-c2)^2].
///
/// Builds the squared distance into the work accumulator — each coordinate's
/// absolute difference is computed in the shared diff register, squared into
/// the accumulator, and uncomputed — compares it against r^2, then reverses
/// the whole distance pipeline. The flag polarity is inverted after the
/// comparison because the comparator reports "below threshold" (inside).
pub fn circle_exclusion(
    layout: &Layout,
    x_reg: &Register,
    y_reg: &Register,
    work: &CircleWork,
    s: &Register,
    circle: &Circle,
) -> Result<Circuit, OracleError> {
    let n = x_reg.width();
    if work.diff.width() != n || work.dist.width() != 2 * n + 1 {
        return Err(OracleError::WidthShortfall {
            what: "circle_exclusion work registers",
            needed: CircleWork::width(n),
            got: work.diff.width() + work.dist.width() + 2,
        });
    }
    let mut pipeline = Circuit::new(layout.num_qubits());
    for (coord, center) in [(x_reg, circle.c1), (y_reg, circle.c2)] {
        let diff = abs_diff_const(
            layout,
            coord,
            &work.alpha,
            &work.ext,
            &work.diff,
            &ConstantOperand::fitting(center as u64),
        )?;
        pipeline.append(&diff);
        pipeline.append(&add_square_inplace(layout, &work.diff, &work.dist)?);
        pipeline.append(&diff.inverse());
    }

    let mut c = pipeline.clone();
    c.append(&threshold_compare(
        layout,
        &work.dist,
        s,
        &work.ext,
        &ConstantOperand::fitting(circle.r_squared()),
    )?);
    c.x(s.qubit(0)); // s = NOT [dist < r^2] = [dist >= r^2]
    c.append(&pipeline.inverse());
    Ok(c)
}
