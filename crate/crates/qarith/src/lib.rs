//! Reversible integer-arithmetic circuit builders.
//!
//! Every operation returns a [`Circuit`](qsim_core::Circuit) acting on
//! registers of a host state. Constant operands compile into phase-rotation
//! angles (Fourier-basis adders), never into quantum registers, so constant
//! arithmetic costs no extra qubits.
//!
//! Conventions shared by all builders:
//!
//! * Inplace adders wrap modulo 2^width; outplace operations require output
//!   registers wide enough that the exact result always fits.
//! * Ancilla registers must start in |0> and are restored to |0> by the time
//!   the circuit completes. Builders trust the caller; use
//!   [`expect_clean`] to verify a state in debug or test paths.
//! * Signed values mix two encodings: sign-magnitude for multiplication
//!   operands, two's complement for additive accumulators.

mod absdiff;
mod adders;
mod check;
mod compare;
mod constant;
mod cross;
mod distance;
mod error;
pub(crate) mod fourier;
mod mult;
mod signed;

pub use absdiff::abs_diff_const;
pub use adders::{add_const_inplace, add_const_outplace, add_register_inplace};
pub use check::expect_clean;
pub use compare::{negate_mod, threshold_compare};
pub use constant::ConstantOperand;
pub use cross::vector_cross_product;
pub use distance::euclid_sq_dist;
pub use error::ArithError;
pub use mult::{add_square_inplace, mult_const_outplace};
pub use signed::{decode_twos_complement, encode_twos_complement, SignedMagnitude};
