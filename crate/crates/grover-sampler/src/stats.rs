use std::collections::HashMap;

use geo_oracles::GridPoint;
use statrs::function::gamma::gamma_ur;

use crate::sample::SampleRun;
use crate::SampleError;

const MIN_SAMPLES_PER_CELL: u64 = 20;

/// Pearson chi-square goodness-of-fit result against the uniform
/// expectation over feasible cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformityReport {
    pub statistic: f64,
    pub p_value: f64,
    pub degrees_of_freedom: u64,
}

/// Chi-square uniformity test of a run's accepted points over the scene's
/// feasible cells. Requires at least 20 samples per cell on average.
pub fn uniformity_test(run: &SampleRun) -> Result<UniformityReport, SampleError> {
    let feasible = run.scene.feasible_points();
    let k = feasible.len() as u64;
    assert!(k > 0, "run scenes always have feasible cells");
    let total = run.records.len() as u64;
    let avg = total as f64 / k as f64;
    if avg < MIN_SAMPLES_PER_CELL as f64 {
        return Err(SampleError::InsufficientData {
            needed: MIN_SAMPLES_PER_CELL,
            got: avg,
        });
    }
    let mut counts: HashMap<GridPoint, u64> = feasible.iter().map(|&p| (p, 0)).collect();
    for p in run.points() {
        *counts.get_mut(&p).expect("sampled points are feasible") += 1;
    }
    let expected = total as f64 / k as f64;
    let statistic: f64 = feasible
        .iter()
        .map(|p| {
            let observed = counts[p] as f64;
            let d = observed - expected;
            d * d / expected
        })
        .sum();
    let degrees_of_freedom = k - 1;
    let p_value = if degrees_of_freedom == 0 || statistic <= 0.0 {
        1.0
    } else {
        gamma_ur(degrees_of_freedom as f64 / 2.0, statistic / 2.0)
    };
    Ok(UniformityReport {
        statistic,
        p_value,
        degrees_of_freedom,
    })
}
