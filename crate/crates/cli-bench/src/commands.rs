use std::path::{Path, PathBuf};

use geo_oracles::Scene;
use grover_sampler::{
    classical_rejection_sample, estimate_feasible_fraction, plan_iterations, sample_points,
    sweep_complexity, Backend, EstimateMethod, FractionEstimate, SampleRun,
};

use crate::artifacts::{tool_version, write_atomic, write_manifest, Manifest, RunArtifact, SceneRef};
use crate::csv_out::{bench_csv, points_csv, stats_csv};
use crate::scene_doc::load_scene;
use crate::svg::{bench_svg, scene_svg};
use crate::CliError;

#[derive(Debug, Clone)]
pub struct SampleConfig {
    pub scene: PathBuf,
    pub points: u64,
    pub seed: u64,
    pub backend: Backend,
    pub out_dir: PathBuf,
    pub max_retries: u64,
}

/// Samples a scene and writes points CSV, stats CSV, scene SVG, and the
/// reproduction manifest into the output directory.
pub fn cmd_sample(config: &SampleConfig) -> Result<(RunArtifact, SampleRun), CliError> {
    if config.points == 0 {
        return Err(CliError::Usage("--points must be at least 1".into()));
    }
    let loaded = load_scene(&config.scene)?;
    let scene = &loaded.scene;
    let p_exact = scene.exact_feasible_fraction();
    let (run, iterations) = match config.backend {
        Backend::Quantum => {
            let plan = plan_iterations(p_exact).map_err(CliError::from)?;
            let run = sample_points(scene, config.points, config.seed, config.max_retries)
                .map_err(CliError::from)?;
            (run, plan.iterations)
        }
        Backend::Classical => {
            let run = classical_rejection_sample(scene, config.points, config.seed)
                .map_err(CliError::from)?;
            (run, 0)
        }
    };

    let points_path = config.out_dir.join("points.csv");
    let stats_path = config.out_dir.join("stats.csv");
    let svg_path = config.out_dir.join("scene.svg");
    let manifest_path = config.out_dir.join("manifest.json");

    write_atomic(&points_path, points_csv(&run).as_bytes())?;
    write_atomic(
        &stats_path,
        stats_csv(&run, p_exact, p_exact, iterations).as_bytes(),
    )?;
    let points: Vec<_> = run.points().collect();
    write_atomic(&svg_path, scene_svg(scene, &points).as_bytes())?;
    write_manifest(
        &manifest_path,
        &Manifest {
            tool_version: tool_version(),
            command: "sample".into(),
            scene_hashes: vec![SceneRef {
                path: loaded.path.display().to_string(),
                sha256: loaded.sha256.clone(),
            }],
            seed: config.seed,
            backend: Some(run.backend.to_string()),
            points: config.points,
            seed_count: None,
            outputs: vec![
                "points.csv".into(),
                "stats.csv".into(),
                "scene.svg".into(),
            ],
        },
    )?;
    Ok((
        RunArtifact {
            points_csv: Some(points_path),
            stats_csv: Some(stats_path),
            svg: svg_path,
            manifest: manifest_path,
        },
        run,
    ))
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub scene_list: PathBuf,
    pub points: u64,
    pub seed_count: u64,
    pub base_seed: u64,
    pub out_dir: PathBuf,
}

/// Reads a scene-list file (one path per line, relative to the list file,
/// `#` comments allowed) and benchmarks both backends over every scene.
pub fn cmd_bench(config: &BenchConfig) -> Result<RunArtifact, CliError> {
    if config.points == 0 {
        return Err(CliError::Usage("--points must be at least 1".into()));
    }
    if config.seed_count == 0 {
        return Err(CliError::Usage("--seeds must be at least 1".into()));
    }
    let list_text = std::fs::read_to_string(&config.scene_list).map_err(|source| CliError::Io {
        path: config.scene_list.clone(),
        source,
    })?;
    let base_dir = config
        .scene_list
        .parent()
        .unwrap_or_else(|| Path::new("."))
        .to_path_buf();
    let mut scenes: Vec<Scene> = Vec::new();
    let mut refs: Vec<SceneRef> = Vec::new();
    for line in list_text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let loaded = load_scene(&base_dir.join(line))?;
        refs.push(SceneRef {
            path: line.to_string(),
            sha256: loaded.sha256.clone(),
        });
        scenes.push(loaded.scene);
    }
    if scenes.len() < 2 {
        return Err(CliError::Usage(
            "bench needs at least 2 scenes spanning distinct feasible fractions".into(),
        ));
    }
    {
        let mut ps: Vec<f64> = scenes.iter().map(|s| s.exact_feasible_fraction()).collect();
        ps.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        ps.dedup();
        if ps.len() < 2 {
            return Err(CliError::Usage(
                "bench scenes must span at least 2 distinct feasible fractions".into(),
            ));
        }
    }
    let seeds: Vec<u64> = (0..config.seed_count)
        .map(|i| config.base_seed.wrapping_add(i))
        .collect();
    let rows = sweep_complexity(&scenes, config.points, &seeds).map_err(CliError::from)?;

    let csv_path = config.out_dir.join("bench.csv");
    let svg_path = config.out_dir.join("bench.svg");
    let manifest_path = config.out_dir.join("manifest.json");
    write_atomic(&csv_path, bench_csv(&rows).as_bytes())?;
    write_atomic(&svg_path, bench_svg(&rows).as_bytes())?;
    write_manifest(
        &manifest_path,
        &Manifest {
            tool_version: tool_version(),
            command: "bench".into(),
            scene_hashes: refs,
            seed: config.base_seed,
            backend: None,
            points: config.points,
            seed_count: Some(config.seed_count),
            outputs: vec!["bench.csv".into(), "bench.svg".into()],
        },
    )?;
    Ok(RunArtifact {
        points_csv: Some(csv_path),
        stats_csv: None,
        svg: svg_path,
        manifest: manifest_path,
    })
}

/// Feasible-fraction estimate for a scene file.
pub fn cmd_estimate_p(
    scene_path: &Path,
    method: EstimateMethod,
) -> Result<FractionEstimate, CliError> {
    let loaded = load_scene(scene_path)?;
    estimate_feasible_fraction(&loaded.scene, method).map_err(CliError::from)
}
