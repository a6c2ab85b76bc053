use geo_oracles::Scene;

use crate::estimate::{estimate_feasible_fraction, EstimateMethod};
use crate::plan::plan_iterations;
use crate::sample::{classical_rejection_sample, PreparedQuantumSampler, DEFAULT_MAX_RETRIES};
use crate::SampleError;

/// One scene's row of the query-complexity comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub iterations: u32,
    /// Mean empirical oracle calls over the seed list.
    pub classical_mean: f64,
    pub quantum_mean: f64,
    /// Closed forms M / p and (R + 1) M.
    pub classical_analytic: f64,
    pub quantum_analytic: f64,
}

impl SweepRow {
    /// Quantum calls relative to the ideal M / sqrt(p) scaling.
    pub fn quantum_sqrt_ratio(&self, m: u64) -> f64 {
        self.quantum_mean / (m as f64 / self.p.sqrt())
    }
}

/// Runs both samplers over every scene and seed, producing empirical means
/// next to the analytic curves. Each scene is simulated once and reused
/// across seeds.
pub fn sweep_complexity(
    scenes: &[Scene],
    m: u64,
    seeds: &[u64],
) -> Result<Vec<SweepRow>, SampleError> {
    assert!(!seeds.is_empty(), "at least one seed required");
    let mut rows = Vec::with_capacity(scenes.len());
    for scene in scenes {
        let p = estimate_feasible_fraction(scene, EstimateMethod::Exact)?.p;
        let plan = plan_iterations(p)?;
        let prepared = PreparedQuantumSampler::prepare_with_plan(scene, plan)?;
        let mut classical_total = 0u64;
        let mut quantum_total = 0u64;
        for &seed in seeds {
            classical_total += classical_rejection_sample(scene, m, seed)?.stats.oracle_calls;
            quantum_total += prepared.run(m, seed, DEFAULT_MAX_RETRIES)?.stats.oracle_calls;
        }
        rows.push(SweepRow {
            p,
            iterations: plan.iterations,
            classical_mean: classical_total as f64 / seeds.len() as f64,
            quantum_mean: quantum_total as f64 / seeds.len() as f64,
            classical_analytic: m as f64 / p,
            quantum_analytic: (plan.iterations as f64 + 1.0) * m as f64,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use geo_oracles::Rectangle;

    #[test]
    fn ratio_decreases_with_p_and_control_scene_matches() {
        // p = 1, 0.5, 0.25 control scenes at n = 3
        let scenes = vec![
            Scene::new(3, vec![], vec![], vec![]).unwrap(),
            Scene::new(3, vec![Rectangle::new(0, 7, 0, 3)], vec![], vec![]).unwrap(),
            Scene::new(3, vec![Rectangle::new(0, 7, 0, 5)], vec![], vec![]).unwrap(),
        ];
        let rows = sweep_complexity(&scenes, 64, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(rows[0].p, 1.0);
        assert_eq!(rows[0].quantum_mean, rows[0].quantum_analytic);
        assert_eq!(rows[0].quantum_analytic, 64.0);
        assert!((rows[0].classical_mean - 64.0).abs() < 1e-9, "p=1 never rejects");

        // the analytic quantum/classical ratio (R + 1) p never increases as
        // p shrinks: 1.0, 0.5, 0.5 here
        let ratio: Vec<f64> = rows
            .iter()
            .map(|r| r.quantum_analytic / r.classical_analytic)
            .collect();
        assert!(ratio[0] >= ratio[1] && ratio[1] >= ratio[2], "{ratio:?}");

        // p = 0.25 row: R = 1 and no retries => exactly 2M quantum calls,
        // strictly below the classical mean
        assert_eq!(rows[2].iterations, 1);
        assert_eq!(rows[2].quantum_mean, 128.0);
        assert!(rows[2].quantum_mean < rows[2].classical_mean);
    }
}
