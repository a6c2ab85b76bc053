use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArithError {
    #[error("registers `{a}` and `{b}` conflict (overlap)")]
    RegisterConflict { a: String, b: String },

    #[error("{op}: register `{register}` needs width >= {needed}, got {got}")]
    WidthShortfall {
        op: &'static str,
        register: String,
        needed: usize,
        got: usize,
    },

    #[error("{op}: constant {value} exceeds limit {limit}")]
    ConstantOutOfRange {
        op: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("ancilla register `{register}` is dirty: zero-weight {weight} below 1-1e-10")]
    DirtyAncilla { register: String, weight: f64 },
}
