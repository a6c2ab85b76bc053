use std::path::PathBuf;

use geo_oracles::{OracleError, SceneError};
use grover_sampler::SampleError;
use qsim_core::SimError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}:{column}: scene parse error: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: unsupported schema_version {found} (expected {expected})")]
    Schema {
        path: PathBuf,
        found: u32,
        expected: u32,
    },

    #[error("{path}: invalid scene: {source}")]
    Scene {
        path: PathBuf,
        #[source]
        source: SceneError,
    },

    #[error("{path}: scene has no feasible grid point")]
    EmptyFeasibleRegion { path: PathBuf },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("capacity: {0}")]
    Capacity(String),

    #[error("sampling failed: {0}")]
    Sample(SampleError),
}

impl CliError {
    /// Exit codes: 0 success, 1 verification/run failure, 2 usage error,
    /// 3 I/O error, 4 capacity error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Parse { .. }
            | CliError::Schema { .. }
            | CliError::Scene { .. }
            | CliError::EmptyFeasibleRegion { .. } => 2,
            CliError::Io { .. } => 3,
            CliError::Capacity(_) => 4,
            CliError::Verification(_) | CliError::Sample(_) => 1,
        }
    }
}

impl From<SampleError> for CliError {
    fn from(err: SampleError) -> Self {
        match err {
            SampleError::Sim(SimError::Capacity { requested, max }) => {
                CliError::Capacity(format!("state of {requested} qubits exceeds cap {max}"))
            }
            SampleError::Oracle(OracleError::Capacity { required, available }) => {
                CliError::Capacity(format!(
                    "oracle needs {required} qubits, simulator caps at {available}"
                ))
            }
            SampleError::Domain { p } => {
                CliError::Usage(format!("feasible fraction {p} outside (0, 1]"))
            }
            other => CliError::Sample(other),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(err: OracleError) -> Self {
        match err {
            OracleError::Capacity { required, available } => CliError::Capacity(format!(
                "oracle needs {required} qubits, simulator caps at {available}"
            )),
            other => CliError::Verification(other.to_string()),
        }
    }
}
