use thiserror::Error;

/// Errors raised by state construction and circuit application.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("qubit count {requested} outside supported range 1..={max}")]
    Capacity { requested: usize, max: usize },

    #[error("circuit acts on {circuit} qubits but state has {state}")]
    ShapeMismatch { circuit: usize, state: usize },

    #[error("registers `{a}` and `{b}` overlap")]
    RegisterOverlap { a: String, b: String },

    #[error("register `{name}` (offset {offset}, width {width}) exceeds {num_qubits} qubits")]
    RegisterOutOfRange {
        name: String,
        offset: usize,
        width: usize,
        num_qubits: usize,
    },
}
