/// Primitive gate kinds.
///
/// `Phase(theta)` is diag(1, e^{i theta}) on its target. `GlobalPhase(theta)`
/// has no target and multiplies every matching amplitude by e^{i theta};
/// combined with controls it acts as a controlled phase without a designated
/// target qubit, which is how the feasibility oracle applies its -1 kick.
#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    X,
    H,
    Z,
    Phase(f64),
    Swap,
    GlobalPhase(f64),
}

impl GateKind {
    fn target_count(&self) -> usize {
        match self {
            GateKind::Swap => 2,
            GateKind::GlobalPhase(_) => 0,
            _ => 1,
        }
    }
}

/// One gate application: a kind, its target qubit(s), and an optional list of
/// `(qubit, required_value)` controls. A control with `required_value = false`
/// fires on |0> (negative polarity).
#[derive(Debug, Clone, PartialEq)]
pub struct GateOp {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<(usize, bool)>,
}

impl GateOp {
    pub fn new(kind: GateKind, targets: Vec<usize>, controls: Vec<(usize, bool)>) -> Self {
        let op = GateOp {
            kind,
            targets,
            controls,
        };
        op.validate();
        op
    }

    /// Panics on malformed gates; construction-time programmer errors, not
    /// runtime conditions.
    pub(crate) fn validate(&self) {
        assert_eq!(
            self.targets.len(),
            self.kind.target_count(),
            "gate {:?} expects {} target(s)",
            self.kind,
            self.kind.target_count()
        );
        if let GateKind::Phase(a) | GateKind::GlobalPhase(a) = self.kind {
            assert!(a.is_finite(), "phase angle must be finite");
        }
        let mut seen = self.targets.clone();
        for &(q, _) in &self.controls {
            assert!(
                !self.targets.contains(&q),
                "control qubit {q} collides with a target"
            );
            assert!(!seen.contains(&q), "duplicate qubit {q} in gate");
            seen.push(q);
        }
        if self.targets.len() == 2 {
            assert_ne!(self.targets[0], self.targets[1], "swap targets must differ");
        }
    }

    pub fn max_qubit(&self) -> Option<usize> {
        self.targets
            .iter()
            .chain(self.controls.iter().map(|(q, _)| q))
            .copied()
            .max()
    }

    /// (mask, expected) pair: an index `i` satisfies the controls iff
    /// `i & mask == expected`.
    pub fn control_mask(&self) -> (u64, u64) {
        let mut mask = 0u64;
        let mut val = 0u64;
        for &(q, on) in &self.controls {
            mask |= 1 << q;
            if on {
                val |= 1 << q;
            }
        }
        (mask, val)
    }

    /// The adjoint gate: phase angles negate, everything else is self-adjoint.
    /// Controls and polarities are preserved.
    pub fn adjoint(&self) -> GateOp {
        let kind = match self.kind {
            GateKind::Phase(a) => GateKind::Phase(-a),
            GateKind::GlobalPhase(a) => GateKind::GlobalPhase(-a),
            ref k => k.clone(),
        };
        GateOp {
            kind,
            targets: self.targets.clone(),
            controls: self.controls.clone(),
        }
    }

    /// The same gate with extra controls attached.
    pub fn with_extra_controls(&self, extra: &[(usize, bool)]) -> GateOp {
        let mut controls = self.controls.clone();
        controls.extend_from_slice(extra);
        GateOp::new(self.kind.clone(), self.targets.clone(), controls)
    }
}
