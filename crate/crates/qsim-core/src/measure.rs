use rand::Rng;

use crate::register::Register;
use crate::state::{register_distribution, QuantumState};

/// Draws `shots` outcomes from the marginal distribution of `register`.
///
/// Terminal-measurement semantics: outcomes are sampled independently from
/// the register's distribution and the state is not collapsed. Deterministic
/// for a given rng stream.
pub fn measure<S: QuantumState + ?Sized, R: Rng>(
    state: &S,
    register: &Register,
    rng: &mut R,
    shots: usize,
) -> Vec<u64> {
    assert!(shots >= 1, "at least one shot required");
    let dist = register_distribution(state, register);
    let mut cdf = Vec::with_capacity(dist.len());
    let mut acc = 0.0;
    for p in &dist {
        acc += p;
        cdf.push(acc);
    }
    (0..shots)
        .map(|_| {
            let u: f64 = rng.gen::<f64>() * acc;
            // first index with cdf > u
            let idx = cdf.partition_point(|&c| c <= u);
            idx.min(cdf.len() - 1) as u64
        })
        .collect()
}
