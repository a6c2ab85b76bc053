use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use geo_oracles::{Circle, ConvexPolygon, GridPoint, Rectangle, Scene};

use crate::CliError;

const SCHEMA_VERSION: u32 = 1;

/// On-disk scene description. Field names are the format; unknown fields
/// are rejected so documents stay canonical and hashable.
///
/// Rectangles are `[a1, a2, b1, b2]`, circles `[c1, c2, r]`, polygons lists
/// of `[x, y]` vertices.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SceneDocument {
    pub schema_version: u32,
    pub n: u32,
    #[serde(default)]
    pub rectangles: Vec<[u32; 4]>,
    #[serde(default)]
    pub circles: Vec<[u32; 3]>,
    #[serde(default)]
    pub polygons: Vec<Vec<[u32; 2]>>,
}

impl SceneDocument {
    pub fn to_scene(&self) -> Result<Scene, geo_oracles::SceneError> {
        let rectangles = self
            .rectangles
            .iter()
            .map(|&[a1, a2, b1, b2]| Rectangle::new(a1, a2, b1, b2))
            .collect();
        let circles = self
            .circles
            .iter()
            .map(|&[c1, c2, r]| Circle::new(c1, c2, r))
            .collect();
        let polygons = self
            .polygons
            .iter()
            .map(|vertices| {
                ConvexPolygon::new(
                    vertices
                        .iter()
                        .map(|&[x, y]| GridPoint::new(x, y))
                        .collect(),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Scene::new(self.n, rectangles, circles, polygons)
    }
}

/// A validated scene together with its source document and content hash.
#[derive(Debug, Clone)]
pub struct LoadedScene {
    pub scene: Scene,
    pub document: SceneDocument,
    /// SHA-256 of the raw file bytes, hex-encoded.
    pub sha256: String,
    pub path: PathBuf,
}

/// Reads, parses, and validates a scene file. Polygons come out
/// counter-clockwise regardless of input order, and a scene without a
/// single feasible grid point is rejected.
pub fn load_scene(path: &Path) -> Result<LoadedScene, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let document: SceneDocument =
        serde_json::from_slice(&bytes).map_err(|e| CliError::Parse {
            path: path.to_path_buf(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    if document.schema_version != SCHEMA_VERSION {
        return Err(CliError::Schema {
            path: path.to_path_buf(),
            found: document.schema_version,
            expected: SCHEMA_VERSION,
        });
    }
    let scene = document.to_scene().map_err(|source| CliError::Scene {
        path: path.to_path_buf(),
        source,
    })?;
    if scene.grid_points().all(|p| !scene.is_feasible(p)) {
        return Err(CliError::EmptyFeasibleRegion {
            path: path.to_path_buf(),
        });
    }
    let sha256 = hex_digest(&bytes);
    Ok(LoadedScene {
        scene,
        document,
        sha256,
        path: path.to_path_buf(),
    })
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
