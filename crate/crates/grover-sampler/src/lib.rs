//! Amplitude-amplification sampling of feasible grid points, with a
//! classical rejection-sampling baseline and query accounting.
//!
//! The quantum path plans an iteration count from the feasible fraction p
//! (R Grover iterations rotate the uniform state by 2 arcsin(sqrt(p)) each),
//! simulates the circuit once, and draws all shots from the terminal
//! coordinate distribution. Every sampling attempt is charged R oracle calls
//! plus one verification query, so a run's ledger reads
//! oracle_calls = (R + 1) * (accepted + retries). The classical baseline
//! charges one query per uniform draw, for an expected M / p total.

mod circuit;
mod error;
mod estimate;
mod plan;
mod sample;
mod simulate;
mod stats;
mod sweep;

pub use circuit::{build_grover_circuit, diffusion_circuit};
pub use error::SampleError;
pub use estimate::{estimate_feasible_fraction, EstimateMethod, FractionEstimate};
pub use plan::{expected_queries, plan_iterations, rotation_angle_variant, GroverPlan};
pub use sample::{
    classical_rejection_sample, sample_points, Backend, PointRecord, PreparedQuantumSampler,
    QueryStats, SampleRun, DEFAULT_MAX_RETRIES,
};
pub use stats::{uniformity_test, UniformityReport};
pub use sweep::{sweep_complexity, SweepRow};
