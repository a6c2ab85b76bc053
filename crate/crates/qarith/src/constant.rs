use crate::ArithError;

/// A classical constant with an explicit bit width. The width participates
/// in precondition checks (e.g. an inplace adder requires the constant to
/// fit its target register).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstantOperand {
    value: u64,
    width: u32,
}

impl ConstantOperand {
    pub fn new(value: u64, width: u32) -> Result<Self, ArithError> {
        if width == 0 || width > 63 || (width < 63 && value >= 1u64 << width) {
            return Err(ArithError::ConstantOutOfRange {
                op: "constant",
                value,
                limit: if width >= 63 { u64::MAX } else { (1u64 << width) - 1 },
            });
        }
        Ok(ConstantOperand { value, width })
    }

    /// The constant with the smallest width that holds it (width 1 for zero).
    pub fn fitting(value: u64) -> Self {
        let width = (64 - value.leading_zeros()).max(1);
        ConstantOperand { value, width }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn width(&self) -> u32 {
        self.width
    }
}
