//! Published qubit-resource ledger for the twelve circuit operators.
//!
//! Input/output/auxiliary counts as the artifact declares them, in terms of
//! the coordinate width n (and rectangle count m where relevant). Structural
//! constants come straight from the builders where the construction is
//! register-faithful; the squared-distance and cross-product rows publish
//! the compact accounting (shared work register, fused product ladder) even
//! though their standalone contracts retain wider outputs — see each
//! variant's note.

use crate::circle::CircleWork;
use crate::interval::IntervalWork;
use crate::rect::{rect_accumulator_width, MultiRectWork, RectWork};

/// Declared qubit counts of one operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceCounts {
    pub input: u32,
    pub output: u32,
    pub aux: u32,
}

/// The operators carrying a published resource row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOperator {
    IntervalCheck,
    RectInclusion,
    MultiRectInclusion,
    ThresholdCompare,
    NegateMod,
    MultConst,
    AddConstInplace,
    AddRegisterInplace,
    AbsDiff,
    AddSquare,
    EuclidSqDist,
    VectorCrossProduct,
}

impl TableOperator {
    pub const ALL: [TableOperator; 12] = [
        TableOperator::IntervalCheck,
        TableOperator::RectInclusion,
        TableOperator::MultiRectInclusion,
        TableOperator::ThresholdCompare,
        TableOperator::NegateMod,
        TableOperator::MultConst,
        TableOperator::AddConstInplace,
        TableOperator::AddRegisterInplace,
        TableOperator::AbsDiff,
        TableOperator::AddSquare,
        TableOperator::EuclidSqDist,
        TableOperator::VectorCrossProduct,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            TableOperator::IntervalCheck => "interval_check",
            TableOperator::RectInclusion => "rect_inclusion",
            TableOperator::MultiRectInclusion => "multi_rect_inclusion",
            TableOperator::ThresholdCompare => "threshold_compare",
            TableOperator::NegateMod => "negate_mod",
            TableOperator::MultConst => "mult_const_outplace",
            TableOperator::AddConstInplace => "add_const_inplace",
            TableOperator::AddRegisterInplace => "add_register_inplace",
            TableOperator::AbsDiff => "abs_diff_const",
            TableOperator::AddSquare => "add_square_inplace",
            TableOperator::EuclidSqDist => "euclid_sq_dist",
            TableOperator::VectorCrossProduct => "vector_cross_product",
        }
    }
}

/// Declared (input, output, aux) counts for an operator at coordinate width
/// n; m is the rectangle count and only affects the multi-rectangle row.
pub fn declared_resources(op: TableOperator, n: u32, m: u32) -> ResourceCounts {
    match op {
        TableOperator::IntervalCheck => ResourceCounts {
            input: n,
            output: 1,
            aux: IntervalWork::WIDTH as u32,
        },
        TableOperator::RectInclusion => ResourceCounts {
            input: n,
            output: 1,
            aux: RectWork::WIDTH as u32,
        },
        TableOperator::MultiRectInclusion => ResourceCounts {
            input: n,
            // counter sized so m overlapping rectangles cannot overflow
            output: rect_accumulator_width(m as usize) as u32,
            aux: MultiRectWork::WIDTH as u32,
        },
        TableOperator::ThresholdCompare => ResourceCounts {
            input: n,
            output: 1,
            aux: 1,
        },
        TableOperator::NegateMod => ResourceCounts {
            input: n + 1,
            output: 0,
            aux: 0,
        },
        TableOperator::MultConst => ResourceCounts {
            input: n,
            output: 2 * n,
            aux: 0,
        },
        TableOperator::AddConstInplace => ResourceCounts {
            input: n,
            output: 0,
            aux: 0,
        },
        TableOperator::AddRegisterInplace => ResourceCounts {
            input: n,
            output: 0,
            aux: 0,
        },
        TableOperator::AbsDiff => ResourceCounts {
            input: n + 1,
            output: n + 1,
            aux: 2,
        },
        TableOperator::AddSquare => ResourceCounts {
            input: n,
            output: 2 * n,
            aux: 0,
        },
        // Compact accounting: coordinates in, squared distance out, one
        // shared (n+1)-qubit difference span. The standalone builder's
        // contract additionally retains both absolute differences.
        TableOperator::EuclidSqDist => ResourceCounts {
            input: 2 * n,
            output: 2 * n,
            aux: n + 1,
        },
        // Compact accounting: the fused Fourier ladder needs no product
        // register; the published row keeps one auxiliary for the sign
        // handling.
        TableOperator::VectorCrossProduct => ResourceCounts {
            input: 2 * n,
            output: 2 * n,
            aux: 1,
        },
    }
}

/// Published total footprint of the circle-exclusion oracle at width n.
pub fn circle_oracle_declared_qubits(n: u32) -> u32 {
    5 * n + 1
}

/// Qubits the shipped circle oracle actually touches, excluding its result
/// flag: 2n coordinates plus the shared work block.
pub fn circle_oracle_built_qubits(n: u32) -> u32 {
    2 * n + CircleWork::width(n as usize) as u32
}
