use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::CliError;

/// Output bundle of one sampling or benchmarking run.
#[derive(Debug, Clone)]
pub struct RunArtifact {
    pub points_csv: Option<PathBuf>,
    pub stats_csv: Option<PathBuf>,
    pub svg: PathBuf,
    pub manifest: PathBuf,
}

/// Everything needed to reproduce the run's files byte-identically:
/// inputs are identified by content hash, all randomness by the seed, and
/// the producing code by the tool version.
#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub tool_version: String,
    pub command: String,
    pub scene_hashes: Vec<SceneRef>,
    pub seed: u64,
    pub backend: Option<String>,
    pub points: u64,
    pub seed_count: Option<u64>,
    pub outputs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SceneRef {
    pub path: String,
    pub sha256: String,
}

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Atomic write: temp file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(io_err)?;
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents).map_err(io_err)?;
    std::fs::rename(&tmp, path).map_err(io_err)?;
    Ok(())
}

pub fn write_manifest(path: &Path, manifest: &Manifest) -> Result<(), CliError> {
    let mut body = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    body.push('\n');
    write_atomic(path, body.as_bytes())
}
