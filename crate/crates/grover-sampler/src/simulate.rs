use geo_oracles::OraclePlan;
use qsim_core::{register_distribution, Circuit, QuantumState, SparseState, StateVector};

use crate::SampleError;

/// Widest state simulated densely; beyond this the map representation wins
/// because only the 4^n coordinate basis states (times the transient QFT
/// spread of one work register) ever carry amplitude.
const DENSE_QUBIT_LIMIT: usize = 17;

/// Runs the circuit once and returns the terminal probability distribution
/// over the joint coordinate register, indexed by x + 2^n y.
pub(crate) fn coordinate_distribution(
    oracle_plan: &OraclePlan,
    circuit: &Circuit,
) -> Result<Vec<f64>, SampleError> {
    let coord = oracle_plan.coord_register();
    let dist = if circuit.num_qubits() <= DENSE_QUBIT_LIMIT {
        let mut state = StateVector::new(circuit.num_qubits())?;
        state.apply_circuit(circuit)?;
        register_distribution(&state, &coord)
    } else {
        let mut state = SparseState::new(circuit.num_qubits())?;
        state.apply_circuit(circuit)?;
        register_distribution(&state, &coord)
    };
    debug_assert!((dist.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    Ok(dist)
}
