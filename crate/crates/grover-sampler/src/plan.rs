use crate::SampleError;

/// Iteration plan for one scene: the feasible fraction, the rotation
/// geometry, the chosen iteration count, and the success probability the
/// closed form predicts for it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverPlan {
    /// Feasible fraction in (0, 1].
    pub p: f64,
    /// Half-rotation angle arcsin(sqrt(p)).
    pub theta: f64,
    /// Rotation per iteration, 2 theta.
    pub phi: f64,
    /// Number of amplification iterations R.
    pub iterations: u32,
    /// sin^2((2R + 1) theta).
    pub predicted_success: f64,
}

/// Nearest integer with exact halves rounded down (under-rotation has the
/// higher success probability at the boundary).
fn closest_integer_half_down(x: f64) -> u32 {
    let floor = x.floor();
    let frac = x - floor;
    floor as u32 + u32::from(frac > 0.5 + 1e-9)
}

/// Plans the iteration count R = CI(arccos(sqrt(p)) / phi) with
/// phi = 2 arcsin(sqrt(p)), and the success probability it implies.
pub fn plan_iterations(p: f64) -> Result<GroverPlan, SampleError> {
    if !(p > 0.0 && p <= 1.0) || !p.is_finite() {
        return Err(SampleError::Domain { p });
    }
    let root = p.sqrt();
    let theta = root.asin();
    let phi = 2.0 * theta;
    let iterations = closest_integer_half_down(root.acos() / phi);
    let predicted_success = ((2 * iterations + 1) as f64 * theta).sin().powi(2);
    let plan = GroverPlan {
        p,
        theta,
        phi,
        iterations,
        predicted_success,
    };
    debug_assert!(plan.iterations as f64 <= (1.0 / p).sqrt().ceil());
    debug_assert!((0.0..=1.0 + 1e-12).contains(&plan.predicted_success));
    Ok(plan)
}

/// The alternative per-iteration rotation estimate arcsin(sqrt(2p(1-p))).
/// Kept alongside the 2 arcsin(sqrt(p)) rotation the planner uses so the
/// two can be compared directly; they agree only in the small-angle limit
/// up to the missing factor sqrt(2) vs 2 on the half-angle product.
pub fn rotation_angle_variant(p: f64) -> f64 {
    (2.0 * p * (1.0 - p)).sqrt().asin()
}

/// Expected oracle queries to collect `m` feasible points.
pub fn expected_queries(m: u64, p: f64, backend: crate::Backend) -> Result<f64, SampleError> {
    if !(p > 0.0 && p <= 1.0) || !p.is_finite() {
        return Err(SampleError::Domain { p });
    }
    Ok(match backend {
        crate::Backend::Classical => m as f64 / p,
        crate::Backend::Quantum => {
            let plan = plan_iterations(p)?;
            (plan.iterations as f64 + 1.0) * m as f64
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

    #[test]
    fn quarter_fraction_rotates_to_certainty() {
        let plan = plan_iterations(0.25).unwrap();
        assert!((plan.theta - FRAC_PI_6).abs() < 1e-12);
        assert!((plan.phi - FRAC_PI_3).abs() < 1e-12);
        assert_eq!(plan.iterations, 1);
        assert!((plan.predicted_success - 1.0).abs() < 1e-12);
    }

    #[test]
    fn full_fraction_needs_no_iterations() {
        let plan = plan_iterations(1.0).unwrap();
        assert_eq!(plan.iterations, 0);
        assert!((plan.predicted_success - 1.0).abs() < 1e-12);
    }

    #[test]
    fn half_fraction_rounds_down_to_zero() {
        let plan = plan_iterations(0.5).unwrap();
        assert_eq!(plan.iterations, 0, "exact half rounds down");
        assert!((plan.predicted_success - 0.5).abs() < 1e-12);
    }

    #[test]
    fn small_fractions_obey_the_sqrt_bound() {
        for p in [0.0625, 0.125, 0.01, 0.003] {
            let plan = plan_iterations(p).unwrap();
            assert!(
                (plan.iterations as f64) <= (1.0 / p).sqrt().ceil(),
                "p={p}: R={}",
                plan.iterations
            );
            assert!(plan.predicted_success > 0.9, "p={p}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(plan_iterations(0.0), Err(SampleError::Domain { .. })));
        assert!(matches!(plan_iterations(1.5), Err(SampleError::Domain { .. })));
    }

    #[test]
    fn expected_query_closed_forms() {
        assert_eq!(
            expected_queries(1000, 0.1, crate::Backend::Classical).unwrap(),
            10_000.0
        );
        assert_eq!(
            expected_queries(1000, 0.25, crate::Backend::Quantum).unwrap(),
            2000.0
        );
        assert_eq!(
            expected_queries(123, 1.0, crate::Backend::Classical).unwrap(),
            123.0
        );
        assert_eq!(
            expected_queries(123, 1.0, crate::Backend::Quantum).unwrap(),
            123.0
        );
    }

    #[test]
    fn rotation_variant_differs_in_general() {
        // at p = 0.3 the two rotation formulas disagree measurably
        let plan = plan_iterations(0.3).unwrap();
        let variant = rotation_angle_variant(0.3);
        assert!((plan.phi - variant).abs() > 0.1);
    }
}
