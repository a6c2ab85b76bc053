use geo_oracles::{GridPoint, Scene};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::SampleError;

/// How to estimate the feasible fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateMethod {
    /// Exhaustive enumeration of all 4^n cells.
    Exact,
    /// Uniform classical draws; unbiased with standard error
    /// sqrt(p(1-p)/samples).
    MonteCarlo { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionEstimate {
    pub p: f64,
    pub std_error: f64,
    /// Exact feasible-cell count when enumerated.
    pub feasible_count: Option<u64>,
}

/// Feasible fraction of a scene, exact or sampled. An estimate of zero is
/// an error: an empty feasible region cannot be sampled from.
pub fn estimate_feasible_fraction(
    scene: &Scene,
    method: EstimateMethod,
) -> Result<FractionEstimate, SampleError> {
    match method {
        EstimateMethod::Exact => {
            let feasible = scene
                .grid_points()
                .filter(|&p| scene.is_feasible(p))
                .count() as u64;
            if feasible == 0 {
                return Err(SampleError::EmptyFeasibleRegion);
            }
            Ok(FractionEstimate {
                p: feasible as f64 / scene.num_cells() as f64,
                std_error: 0.0,
                feasible_count: Some(feasible),
            })
        }
        EstimateMethod::MonteCarlo { samples, seed } => {
            assert!(samples > 0, "monte carlo needs at least one sample");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let side = scene.side();
            let mut hits = 0u64;
            for _ in 0..samples {
                let p = GridPoint::new(rng.gen_range(0..side), rng.gen_range(0..side));
                if scene.is_feasible(p) {
                    hits += 1;
                }
            }
            if hits == 0 {
                return Err(SampleError::EmptyFeasibleRegion);
            }
            let p = hits as f64 / samples as f64;
            Ok(FractionEstimate {
                p,
                std_error: (p * (1.0 - p) / samples as f64).sqrt(),
                feasible_count: None,
            })
        }
    }
}
