use crate::SimError;

/// What a register is for. Purely descriptive; the simulator treats all
/// qubits alike, but oracle builders and ancilla checks key off the role.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegisterRole {
    Coordinate,
    Ancilla,
    Flag,
    Accumulator,
    Sign,
}

/// A named contiguous span of qubits inside a host state.
///
/// Values are little-endian: the qubit at `offset` holds bit 0 of the
/// register's integer value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Register {
    name: String,
    offset: usize,
    width: usize,
    role: RegisterRole,
}

impl Register {
    pub fn new(name: impl Into<String>, offset: usize, width: usize, role: RegisterRole) -> Self {
        assert!(width > 0, "register width must be positive");
        Register {
            name: name.into(),
            offset,
            width,
            role,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn role(&self) -> RegisterRole {
        self.role
    }

    /// Host index of bit `bit`.
    pub fn qubit(&self, bit: usize) -> usize {
        assert!(bit < self.width);
        self.offset + bit
    }

    /// Host indices, LSB first.
    pub fn qubits(&self) -> Vec<usize> {
        (self.offset..self.offset + self.width).collect()
    }

    pub fn mask(&self) -> u64 {
        (((1u128 << self.width) - 1) as u64) << self.offset
    }

    /// The register's value within a basis index.
    pub fn extract(&self, basis: u64) -> u64 {
        (basis >> self.offset) & (((1u128 << self.width) - 1) as u64)
    }

    /// Returns `basis` with this register's bits replaced by `value`.
    pub fn inject(&self, basis: u64, value: u64) -> u64 {
        assert!(
            value < (1u128 << self.width) as u64,
            "value {value} does not fit register `{}` of width {}",
            self.name,
            self.width
        );
        (basis & !self.mask()) | (value << self.offset)
    }

    pub fn overlaps(&self, other: &Register) -> bool {
        self.offset < other.offset + other.width && other.offset < self.offset + self.width
    }

    /// A sub-span of this register (used to carve typed views out of a
    /// shared scratch pool).
    pub fn slice(
        &self,
        name: impl Into<String>,
        local_offset: usize,
        width: usize,
        role: RegisterRole,
    ) -> Register {
        assert!(
            local_offset + width <= self.width,
            "slice exceeds register `{}`",
            self.name
        );
        Register::new(name, self.offset + local_offset, width, role)
    }

    pub fn fits(&self, num_qubits: usize) -> Result<(), SimError> {
        if self.offset + self.width > num_qubits {
            return Err(SimError::RegisterOutOfRange {
                name: self.name.clone(),
                offset: self.offset,
                width: self.width,
                num_qubits,
            });
        }
        Ok(())
    }
}

/// Sequential register allocator. Registers allocated through one layout
/// never overlap.
#[derive(Debug, Clone, Default)]
pub struct Layout {
    registers: Vec<Register>,
    num_qubits: usize,
}

impl Layout {
    pub fn new() -> Self {
        Layout::default()
    }

    pub fn alloc(&mut self, name: impl Into<String>, width: usize, role: RegisterRole) -> Register {
        let reg = Register::new(name, self.num_qubits, width, role);
        self.num_qubits += width;
        self.registers.push(reg.clone());
        reg
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    /// Basis index with the given register values and all other qubits 0.
    pub fn basis_index(&self, assignments: &[(&Register, u64)]) -> u64 {
        assignments
            .iter()
            .fold(0u64, |acc, (reg, v)| reg.inject(acc, *v))
    }
}
