use geo_oracles::{GridPoint, Scene};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::build_grover_circuit;
use crate::estimate::{estimate_feasible_fraction, EstimateMethod};
use crate::plan::{plan_iterations, GroverPlan};
use crate::simulate::coordinate_distribution;
use crate::SampleError;

pub const DEFAULT_MAX_RETRIES: u64 = 20;
const CLASSICAL_DRAW_CAP: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Quantum,
    Classical,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Backend::Quantum => "quantum",
            Backend::Classical => "classical",
        })
    }
}

/// Oracle-invocation ledger for one sampling run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueryStats {
    pub oracle_calls: u64,
    pub accepted_points: u64,
    pub retries: u64,
    /// Total measurement attempts (accepted + retries).
    pub shots: u64,
    pub mean_calls_per_point: f64,
}

impl QueryStats {
    fn new(oracle_calls: u64, accepted_points: u64, retries: u64) -> Self {
        QueryStats {
            oracle_calls,
            accepted_points,
            retries,
            shots: accepted_points + retries,
            mean_calls_per_point: if accepted_points > 0 {
                oracle_calls as f64 / accepted_points as f64
            } else {
                0.0
            },
        }
    }
}

/// One accepted point with its retry count and the cumulative oracle-call
/// total at the moment of acceptance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointRecord {
    pub point: GridPoint,
    pub retries: u64,
    pub cumulative_oracle_calls: u64,
}

/// A complete sampling run; every recorded point is classically feasible.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRun {
    pub scene: Scene,
    pub records: Vec<PointRecord>,
    pub stats: QueryStats,
    pub seed: u64,
    pub backend: Backend,
}

impl SampleRun {
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.records.iter().map(|r| r.point)
    }
}

fn derive_sub_seed(master: u64, index: u64) -> u64 {
    // splitmix64 of (master, index); gives every sampling unit its own
    // stream so results are schedule-independent
    let mut z = master ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A scene simulated once, ready to draw any number of seeded runs from its
/// terminal distribution.
#[derive(Debug, Clone)]
pub struct PreparedQuantumSampler {
    scene: Scene,
    plan: GroverPlan,
    distribution: Vec<f64>,
    cdf: Vec<f64>,
    feasible: Vec<bool>,
}

impl PreparedQuantumSampler {
    pub fn prepare(scene: &Scene) -> Result<Self, SampleError> {
        let estimate = estimate_feasible_fraction(scene, EstimateMethod::Exact)?;
        let plan = plan_iterations(estimate.p)?;
        Self::prepare_with_plan(scene, plan)
    }

    /// Preparation with an externally supplied plan (e.g. from a Monte
    /// Carlo estimate of p).
    pub fn prepare_with_plan(scene: &Scene, plan: GroverPlan) -> Result<Self, SampleError> {
        let (circuit, oracle_plan) = build_grover_circuit(scene, &plan)?;
        let distribution = coordinate_distribution(&oracle_plan, &circuit)?;
        let mut cdf = Vec::with_capacity(distribution.len());
        let mut acc = 0.0;
        for p in &distribution {
            acc += p;
            cdf.push(acc);
        }
        let feasible = scene.grid_points().map(|p| scene.is_feasible(p)).collect();
        Ok(PreparedQuantumSampler {
            scene: scene.clone(),
            plan,
            distribution,
            cdf,
            feasible,
        })
    }

    pub fn plan(&self) -> &GroverPlan {
        &self.plan
    }

    /// Probability mass the simulation puts on feasible cells; the quantity
    /// the closed form sin^2((2R+1) theta) predicts.
    pub fn feasible_mass(&self) -> f64 {
        self.distribution
            .iter()
            .zip(&self.feasible)
            .filter_map(|(p, &f)| f.then_some(*p))
            .sum()
    }

    pub fn distribution(&self) -> &[f64] {
        &self.distribution
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> usize {
        let total = *self.cdf.last().expect("distribution non-empty");
        let u: f64 = rng.gen::<f64>() * total;
        self.cdf.partition_point(|&c| c <= u).min(self.cdf.len() - 1)
    }

    /// Draws `count` feasible points. Each attempt costs R oracle calls in
    /// the amplification circuit plus one verification query; infeasible
    /// measurements retry on the point's derived rng stream and are added
    /// to the retry ledger.
    pub fn run(
        &self,
        count: u64,
        seed: u64,
        max_retries_per_point: u64,
    ) -> Result<SampleRun, SampleError> {
        assert!(count >= 1, "at least one point requested");
        let side = self.scene.side() as usize;
        let calls_per_attempt = self.plan.iterations as u64 + 1;
        let mut records = Vec::with_capacity(count as usize);
        let mut oracle_calls = 0u64;
        let mut retries_total = 0u64;
        let mut attempts_total = 0u64;

        for index in 0..count {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_sub_seed(seed, index));
            let mut retries_here = 0u64;
            loop {
                attempts_total += 1;
                oracle_calls += calls_per_attempt;
                let cell = self.draw(&mut rng);
                if self.feasible[cell] {
                    records.push(PointRecord {
                        point: GridPoint::new((cell % side) as u32, (cell / side) as u32),
                        retries: retries_here,
                        cumulative_oracle_calls: oracle_calls,
                    });
                    break;
                }
                retries_here += 1;
                retries_total += 1;
                if retries_here > max_retries_per_point {
                    return Err(SampleError::AmplificationFailure {
                        max_retries: max_retries_per_point,
                        success_rate: records.len() as f64 / attempts_total as f64,
                    });
                }
            }
        }
        Ok(SampleRun {
            scene: self.scene.clone(),
            records,
            stats: QueryStats::new(oracle_calls, count, retries_total),
            seed,
            backend: Backend::Quantum,
        })
    }
}

/// Grover-backed sampling: plan from the exact feasible fraction, simulate
/// once, draw N feasible points.
pub fn sample_points(
    scene: &Scene,
    count: u64,
    seed: u64,
    max_retries_per_point: u64,
) -> Result<SampleRun, SampleError> {
    PreparedQuantumSampler::prepare(scene)?.run(count, seed, max_retries_per_point)
}

/// Classical baseline: uniform draws at one oracle call each until `count`
/// feasible points are accepted.
pub fn classical_rejection_sample(
    scene: &Scene,
    count: u64,
    seed: u64,
) -> Result<SampleRun, SampleError> {
    assert!(count >= 1, "at least one point requested");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = scene.side();
    let mut records = Vec::with_capacity(count as usize);
    let mut draws = 0u64;
    let mut retries_total = 0u64;
    for _ in 0..count {
        let mut retries_here = 0u64;
        loop {
            if draws >= CLASSICAL_DRAW_CAP {
                return Err(SampleError::RunawayRejection {
                    cap: CLASSICAL_DRAW_CAP,
                });
            }
            draws += 1;
            let p = GridPoint::new(rng.gen_range(0..side), rng.gen_range(0..side));
            if scene.is_feasible(p) {
                records.push(PointRecord {
                    point: p,
                    retries: retries_here,
                    cumulative_oracle_calls: draws,
                });
                break;
            }
            retries_here += 1;
            retries_total += 1;
        }
    }
    Ok(SampleRun {
        scene: scene.clone(),
        records,
        stats: QueryStats::new(draws, count, retries_total),
        seed,
        backend: Backend::Classical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use geo_oracles::Rectangle;

    fn quarter_scene() -> Scene {
        // feasible fraction exactly 0.25: rows 6 and 7 are free
        Scene::new(3, vec![Rectangle::new(0, 7, 0, 5)], vec![], vec![]).unwrap()
    }

    #[test]
    fn quantum_run_accounts_r_plus_one_per_attempt() {
        let run = sample_points(&quarter_scene(), 100, 5, DEFAULT_MAX_RETRIES).unwrap();
        // p = 0.25: R = 1, predicted success 1 => no retries
        assert_eq!(run.stats.retries, 0);
        assert_eq!(run.stats.oracle_calls, 2 * 100);
        assert_eq!(run.stats.shots, 100);
        assert!((run.stats.mean_calls_per_point - 2.0).abs() < 1e-12);
        assert!(run.points().all(|p| run.scene.is_feasible(p)));
    }

    #[test]
    fn identical_seeds_reproduce_runs() {
        let scene = quarter_scene();
        let a = sample_points(&scene, 50, 99, DEFAULT_MAX_RETRIES).unwrap();
        let b = sample_points(&scene, 50, 99, DEFAULT_MAX_RETRIES).unwrap();
        assert_eq!(a, b);
        let c = classical_rejection_sample(&scene, 50, 99).unwrap();
        let d = classical_rejection_sample(&scene, 50, 99).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn classical_counts_every_draw() {
        let scene = quarter_scene();
        let run = classical_rejection_sample(&scene, 200, 3).unwrap();
        assert_eq!(run.stats.oracle_calls, run.stats.shots);
        assert_eq!(
            run.stats.oracle_calls,
            run.stats.accepted_points + run.stats.retries
        );
        assert!(run.points().all(|p| scene.is_feasible(p)));
        // E[draws] = 200 / 0.25 = 800; enormous slack on a single seed
        assert!(run.stats.oracle_calls > 400 && run.stats.oracle_calls < 1600);
    }

    #[test]
    fn obstacle_free_scene_never_rejects() {
        let scene = Scene::new(2, vec![], vec![], vec![]).unwrap();
        let run = classical_rejection_sample(&scene, 64, 0).unwrap();
        assert_eq!(run.stats.oracle_calls, 64);
        let qrun = sample_points(&scene, 64, 0, DEFAULT_MAX_RETRIES).unwrap();
        assert_eq!(qrun.stats.retries, 0);
        assert_eq!(qrun.stats.oracle_calls, 64, "R = 0 costs one call per point");
    }

    #[test]
    fn geometric_mean_calls_for_single_point() {
        // p = 0.5 scene, single accepted point: mean draws over many seeds
        // approaches 1/p = 2 within 5%
        let scene = Scene::new(3, vec![Rectangle::new(0, 7, 0, 3)], vec![], vec![]).unwrap();
        let total: u64 = (0..10_000u64)
            .map(|seed| {
                classical_rejection_sample(&scene, 1, seed)
                    .unwrap()
                    .stats
                    .oracle_calls
            })
            .sum();
        let mean = total as f64 / 10_000.0;
        assert!((mean - 2.0).abs() / 2.0 < 0.05, "mean {mean}");
    }
}
