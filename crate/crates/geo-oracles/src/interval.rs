use qarith::{threshold_compare, ConstantOperand};
use qsim_core::{Circuit, Layout, Register, RegisterRole};

use crate::OracleError;

/// The interval checker's three auxiliary qubits: the comparator borrow
/// extension plus the two threshold flags (below-low, below-high). All three
/// are restored to |0> by the time the circuit completes.
#[derive(Debug, Clone)]
pub struct IntervalWork {
    pub ext: Register,
    pub low: Register,
    pub high: Register,
}

impl IntervalWork {
    /// Auxiliary qubit count of the interval checker.
    pub const WIDTH: usize = 3;

    pub fn alloc(layout: &mut Layout, prefix: &str) -> Self {
        IntervalWork {
            ext: layout.alloc(format!("{prefix}_ext"), 1, RegisterRole::Ancilla),
            low: layout.alloc(format!("{prefix}_low"), 1, RegisterRole::Flag),
            high: layout.alloc(format!("{prefix}_high"), 1, RegisterRole::Flag),
        }
    }

    /// Carves the three qubits out of a scratch span.
    pub fn carve(pool: &Register, base: usize) -> Self {
        IntervalWork {
            ext: pool.slice("ival_ext", base, 1, RegisterRole::Ancilla),
            low: pool.slice("ival_low", base + 1, 1, RegisterRole::Flag),
            high: pool.slice("ival_high", base + 2, 1, RegisterRole::Flag),
        }
    }
}

/// Interval check: s ^= [a1 <= x <= a2].
///
/// Two threshold comparisons (against a1 and a2 + 1) set the work flags and
/// a doubly-controlled flip transfers "not below low, below high" into `s`;
/// the comparisons are then undone. The upper bound is clamped to the grid
/// maximum, which leaves the predicate unchanged for in-grid values.
pub fn interval_check(
    layout: &Layout,
    x_reg: &Register,
    work: &IntervalWork,
    s: &Register,
    a1: u64,
    a2: u64,
) -> Result<Circuit, OracleError> {
    if a1 > a2 {
        return Err(OracleError::InvertedInterval { a1, a2 });
    }
    let grid_max = (1u64 << x_reg.width()) - 1;
    let a2 = a2.min(grid_max);
    let a1 = a1.min(grid_max + 1); // a1 = 2^n: nothing passes, still well-formed

    let below_low = threshold_compare(
        layout,
        x_reg,
        &work.low,
        &work.ext,
        &ConstantOperand::fitting(a1),
    )?;
    let below_high = threshold_compare(
        layout,
        x_reg,
        &work.high,
        &work.ext,
        &ConstantOperand::fitting(a2 + 1),
    )?;

    let mut c = below_low.clone();
    c.append(&below_high);
    c.mcx(
        &[(work.low.qubit(0), false), (work.high.qubit(0), true)],
        s.qubit(0),
    );
    c.append(&below_high.inverse());
    c.append(&below_low.inverse());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qsim_core::{dominant_basis, QuantumState, SparseState};

    fn check(a1: u64, a2: u64, x: u64) -> u64 {
        let mut layout = Layout::new();
        let xr = layout.alloc("x", 3, RegisterRole::Coordinate);
        let work = IntervalWork::alloc(&mut layout, "w");
        let s = layout.alloc("s", 1, RegisterRole::Flag);
        let c = interval_check(&layout, &xr, &work, &s, a1, a2).unwrap();
        let mut state =
            SparseState::basis_state(layout.num_qubits(), layout.basis_index(&[(&xr, x)])).unwrap();
        state.apply_circuit(&c).unwrap();
        let (out, p) = dominant_basis(&state).unwrap();
        assert!(p >= 1.0 - 1e-9);
        assert_eq!(xr.extract(out), x, "x preserved");
        assert_eq!(
            work.ext.extract(out) | work.low.extract(out) | work.high.extract(out),
            0,
            "work restored"
        );
        s.extract(out)
    }

    #[test]
    fn interval_examples() {
        assert_eq!(check(2, 5, 3), 1);
        assert_eq!(check(2, 5, 6), 0);
        assert_eq!(check(0, 7, 4), 1, "full-range interval passes everything");
        assert_eq!(check(2, 5, 2), 1, "low boundary inclusive");
        assert_eq!(check(2, 5, 5), 1, "high boundary inclusive");
        assert_eq!(check(2, 5, 1), 0);
    }

    #[test]
    fn clamped_upper_bound() {
        // a2 = 8 = 2^n behaves like a2 = 7 on grid values
        assert_eq!(check(0, 8, 7), 1);
        assert_eq!(check(8, 8, 7), 0, "a1 = 2^n admits nothing");
    }

    #[test]
    fn inverted_interval_rejected() {
        let mut layout = Layout::new();
        let xr = layout.alloc("x", 3, RegisterRole::Coordinate);
        let work = IntervalWork::alloc(&mut layout, "w");
        let s = layout.alloc("s", 1, RegisterRole::Flag);
        assert!(matches!(
            interval_check(&layout, &xr, &work, &s, 5, 2),
            Err(OracleError::InvertedInterval { .. })
        ));
    }
}
