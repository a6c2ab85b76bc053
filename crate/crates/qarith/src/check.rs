use qsim_core::{register_zero_weight, QuantumState, Register};

use crate::ArithError;

/// Verifies that every listed register decodes to 0 with probability weight
/// at least 1 - 1e-10. The dirty-ancilla detection path for debug and test
/// builds; release callers are trusted to supply clean ancillas.
pub fn expect_clean<S: QuantumState + ?Sized>(
    state: &S,
    registers: &[&Register],
) -> Result<(), ArithError> {
    for reg in registers {
        let weight = register_zero_weight(state, reg);
        if weight < 1.0 - 1e-10 {
            return Err(ArithError::DirtyAncilla {
                register: reg.name().to_string(),
                weight,
            });
        }
    }
    Ok(())
}
