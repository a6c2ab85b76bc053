//! Command-line front end: scene ingestion, operator verification, sampling
//! and benchmarking, and CSV/SVG artifact emission.
//!
//! The compatibility surface lives here: the JSON scene document, the
//! points/stats/bench CSV schemas, the SVG conventions, and the exit codes
//! (0 success, 1 verification/run failure, 2 usage, 3 I/O, 4 capacity).

pub mod artifacts;
pub mod commands;
pub mod csv_out;
pub mod error;
pub mod scene_doc;
pub mod svg;
pub mod verify;

pub use commands::{cmd_bench, cmd_estimate_p, cmd_sample, BenchConfig, SampleConfig};
pub use error::CliError;
pub use scene_doc::{load_scene, LoadedScene, SceneDocument};
pub use verify::{cmd_verify, VerifyReport};
