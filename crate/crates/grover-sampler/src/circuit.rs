use std::f64::consts::PI;

use geo_oracles::{OraclePlan, Scene};
use qsim_core::Circuit;

use crate::{GroverPlan, SampleError};

/// Inversion about the mean restricted to the coordinate qubits:
/// H^(2n) (2|0><0| - I) H^(2n), realized as a phase flip on |0...0> (via
/// negative-polarity controls) composed with an unconditional sign flip.
pub fn diffusion_circuit(num_qubits: usize, coord_qubits: &[usize]) -> Circuit {
    let mut c = Circuit::new(num_qubits);
    for &q in coord_qubits {
        c.h(q);
    }
    let controls: Vec<(usize, bool)> = coord_qubits.iter().map(|&q| (q, false)).collect();
    c.controlled_global_phase(&controls, PI);
    c.global_phase(PI);
    for &q in coord_qubits {
        c.h(q);
    }
    c
}

/// The full sampling circuit: Hadamards over both coordinate registers,
/// then `plan.iterations` repetitions of the feasibility phase oracle
/// followed by diffusion. Work qubits are |0> before and after every
/// iteration by the oracle contract, so diffusion only needs the
/// coordinates.
pub fn build_grover_circuit(
    scene: &Scene,
    plan: &GroverPlan,
) -> Result<(Circuit, OraclePlan), SampleError> {
    let oracle_plan = OraclePlan::new(scene)?;
    let oracle = oracle_plan.phase_oracle()?;
    let coords = oracle_plan.coord_register().qubits();
    let diffusion = diffusion_circuit(oracle_plan.num_qubits(), &coords);

    let mut c = Circuit::new(oracle_plan.num_qubits());
    for &q in &coords {
        c.h(q);
    }
    for _ in 0..plan.iterations {
        c.append(&oracle);
        c.append(&diffusion);
    }
    Ok((c, oracle_plan))
}
