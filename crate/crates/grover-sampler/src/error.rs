use geo_oracles::OracleError;
use qsim_core::SimError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SampleError {
    #[error(transparent)]
    Sim(#[from] SimError),

    #[error(transparent)]
    Oracle(#[from] OracleError),

    #[error("feasible fraction must lie in (0, 1], got {p}")]
    Domain { p: f64 },

    #[error("scene has no feasible grid point to sample")]
    EmptyFeasibleRegion,

    #[error(
        "amplification failure: a point exceeded {max_retries} retries \
         (measured success rate {success_rate:.4})"
    )]
    AmplificationFailure { max_retries: u64, success_rate: f64 },

    #[error("uniformity test needs >= {needed} samples per feasible cell on average, got {got:.2}")]
    InsufficientData { needed: u64, got: f64 },

    #[error("classical rejection sampling exceeded the safety cap of {cap} draws")]
    RunawayRejection { cap: u64 },
}
