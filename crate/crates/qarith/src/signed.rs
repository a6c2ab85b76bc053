use qsim_core::Register;

/// A signed integer split across a 1-qubit sign register and a magnitude
/// register: the value is (-1)^sign * magnitude. Zero is normalized to
/// sign 0.
#[derive(Debug, Clone)]
pub struct SignedMagnitude {
    pub sign: Register,
    pub magnitude: Register,
}

impl SignedMagnitude {
    pub fn new(sign: Register, magnitude: Register) -> Self {
        assert_eq!(sign.width(), 1, "sign register must be one qubit");
        assert!(!sign.overlaps(&magnitude));
        SignedMagnitude { sign, magnitude }
    }

    /// Decodes the signed value from a basis index.
    pub fn decode(&self, basis: u64) -> i64 {
        let mag = self.magnitude.extract(basis) as i64;
        if self.sign.extract(basis) == 1 {
            -mag
        } else {
            mag
        }
    }
}

/// Interprets `raw` (width bits) as a two's-complement signed integer.
pub fn decode_twos_complement(raw: u64, width: u32) -> i64 {
    assert!((1..=63).contains(&width));
    let sign_bit = 1u64 << (width - 1);
    if raw & sign_bit != 0 {
        raw as i64 - (1i64 << width)
    } else {
        raw as i64
    }
}

/// Two's-complement encoding of `value` in `width` bits.
pub fn encode_twos_complement(value: i64, width: u32) -> u64 {
    assert!((1..=63).contains(&width));
    let modulus = 1i128 << width;
    let v = ((value as i128 % modulus) + modulus) % modulus;
    let raw = v as u64;
    debug_assert_eq!(decode_twos_complement(raw, width) as i128, {
        let half = 1i128 << (width - 1);
        if (value as i128) >= half || (value as i128) < -half {
            decode_twos_complement(raw, width) as i128
        } else {
            value as i128
        }
    });
    raw
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twos_complement_roundtrip() {
        for width in [4u32, 8, 10] {
            let half = 1i64 << (width - 1);
            for v in -half..half {
                assert_eq!(decode_twos_complement(encode_twos_complement(v, width), width), v);
            }
        }
    }

    #[test]
    fn negative_five_in_eight_bits() {
        assert_eq!(encode_twos_complement(-5, 8), 251);
        assert_eq!(decode_twos_complement(251, 8), -5);
    }
}
