//! Dense statevector simulation engine.
//!
//! Provides the building blocks the rest of the workspace is assembled from:
//! qubit registers carved out of a host state ([`Register`], [`Layout`]),
//! gate-level circuits with exact inversion ([`Circuit`], [`GateOp`]), the
//! quantum Fourier transform ([`qft`]), and seeded measurement sampling
//! ([`measure`]).
//!
//! Two state representations share one gate semantics:
//!
//! * [`StateVector`] — a dense array of 2^n complex amplitudes, the primary
//!   substrate. Capped at 26 qubits (1 GiB of amplitudes).
//! * [`SparseState`] — a map from basis index to amplitude, used where only
//!   a small fraction of amplitudes is ever nonzero (basis-input
//!   verification sweeps and register-local oracle circuits). Iteration
//!   order is deterministic, so sampling from either representation is
//!   reproducible.
//!
//! Integer encoding is little-endian within a register: the qubit at
//! `offset` holds bit 0. All measurements are terminal — sampling reads the
//! final distribution without collapsing the state.

mod circuit;
mod error;
mod gate;
mod measure;
mod qft;
mod register;
mod sparse;
mod state;

pub use circuit::Circuit;
pub use error::SimError;
pub use gate::{GateKind, GateOp};
pub use measure::measure;
pub use qft::{qft, qft_on};
pub use register::{Layout, Register, RegisterRole};
pub use sparse::SparseState;
pub use state::{
    dominant_basis, fidelity, register_distribution, register_zero_weight, QuantumState,
    StateVector, AMP_ZERO_TOL, NORM_TOL,
};

pub use num_complex::Complex64;

/// Largest dense-simulable qubit count: 2^26 amplitudes is about 1 GiB.
pub const MAX_QUBITS: usize = 26;
