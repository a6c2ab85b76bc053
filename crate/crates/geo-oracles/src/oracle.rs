use std::f64::consts::PI;

use qsim_core::{
    Circuit, Layout, QuantumState, Register, RegisterRole, SparseState, MAX_QUBITS,
};

use crate::circle::{circle_exclusion, CircleWork};
use crate::polygon::{
    cross_register_width, polygon_accumulator_width, polygon_inclusion, PolygonWork,
};
use crate::rect::{multi_rect_inclusion, rect_accumulator_width, MultiRectWork};
use crate::scene::Scene;
use crate::OracleError;

/// Qubit plan for a scene's feasibility phase oracle.
///
/// Layout: coordinate registers x and y, one persistent summary register per
/// obstacle group (rectangle-containment counter, one exclusion flag per
/// circle, one inside flag per polygon), and a single scratch pool sized for
/// the hungriest obstacle, reused sequentially. Feasibility is the
/// conjunction "counter = 0, every circle flag = 1, every polygon flag = 0",
/// applied as a controlled global phase of pi and then uncomputed.
#[derive(Debug, Clone)]
pub struct OraclePlan {
    scene: Scene,
    layout: Layout,
    x: Register,
    y: Register,
    rect_count: Option<Register>,
    circle_flags: Vec<Register>,
    polygon_inside: Vec<Register>,
    scratch: Option<Register>,
}

impl OraclePlan {
    pub fn new(scene: &Scene) -> Result<Self, OracleError> {
        let n = scene.n() as usize;
        let mut layout = Layout::new();
        let x = layout.alloc("x", n, RegisterRole::Coordinate);
        let y = layout.alloc("y", n, RegisterRole::Coordinate);

        let rect_count = if scene.rectangles().is_empty() {
            None
        } else {
            Some(layout.alloc(
                "rect_count",
                rect_accumulator_width(scene.rectangles().len()),
                RegisterRole::Accumulator,
            ))
        };
        let circle_flags: Vec<Register> = (0..scene.circles().len())
            .map(|i| layout.alloc(format!("circle_out_{i}"), 1, RegisterRole::Flag))
            .collect();
        let polygon_inside: Vec<Register> = (0..scene.polygons().len())
            .map(|j| layout.alloc(format!("poly_in_{j}"), 1, RegisterRole::Flag))
            .collect();

        let mut pool = 0usize;
        if !scene.rectangles().is_empty() {
            pool = pool.max(MultiRectWork::WIDTH);
        }
        if !scene.circles().is_empty() {
            pool = pool.max(CircleWork::width(n));
        }
        for poly in scene.polygons() {
            let w = PolygonWork::width(n, cross_register_width(scene.n(), poly))
                + polygon_accumulator_width(poly.num_edges());
            pool = pool.max(w);
        }
        let scratch = (pool > 0).then(|| layout.alloc("scratch", pool, RegisterRole::Ancilla));

        if layout.num_qubits() > MAX_QUBITS {
            return Err(OracleError::Capacity {
                required: layout.num_qubits(),
                available: MAX_QUBITS,
            });
        }
        Ok(OraclePlan {
            scene: scene.clone(),
            layout,
            x,
            y,
            rect_count,
            circle_flags,
            polygon_inside,
            scratch,
        })
    }

    /// Total qubits a scene's oracle would need, without the capacity check.
    pub fn required_qubits(scene: &Scene) -> usize {
        let n = scene.n() as usize;
        let mut total = 2 * n;
        if !scene.rectangles().is_empty() {
            total += rect_accumulator_width(scene.rectangles().len());
        }
        total += scene.circles().len() + scene.polygons().len();
        let mut pool = 0usize;
        if !scene.rectangles().is_empty() {
            pool = pool.max(MultiRectWork::WIDTH);
        }
        if !scene.circles().is_empty() {
            pool = pool.max(CircleWork::width(n));
        }
        for poly in scene.polygons() {
            pool = pool.max(
                PolygonWork::width(n, cross_register_width(scene.n(), poly))
                    + polygon_accumulator_width(poly.num_edges()),
            );
        }
        total + pool
    }

    pub fn scene(&self) -> &Scene {
        &self.scene
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn num_qubits(&self) -> usize {
        self.layout.num_qubits()
    }

    pub fn x_register(&self) -> &Register {
        &self.x
    }

    pub fn y_register(&self) -> &Register {
        &self.y
    }

    /// Joint (x, y) span: value x + 2^n y, the index used for distributions
    /// and marked sets.
    pub fn coord_register(&self) -> Register {
        Register::new("coords", 0, 2 * self.scene.n() as usize, RegisterRole::Coordinate)
    }

    /// Every register that must be |0> before and after the oracle.
    pub fn work_registers(&self) -> Vec<&Register> {
        let mut regs: Vec<&Register> = Vec::new();
        if let Some(r) = &self.rect_count {
            regs.push(r);
        }
        regs.extend(self.circle_flags.iter());
        regs.extend(self.polygon_inside.iter());
        if let Some(r) = &self.scratch {
            regs.push(r);
        }
        regs
    }

    /// Computes every obstacle summary into its persistent register,
    /// leaving all scratch clean.
    fn compute_summaries(&self) -> Result<Circuit, OracleError> {
        let n = self.scene.n() as usize;
        let mut c = Circuit::new(self.layout.num_qubits());
        if let Some(count) = &self.rect_count {
            let pool = self.scratch.as_ref().expect("scratch exists with obstacles");
            let work = MultiRectWork::carve(pool, 0);
            c.append(&multi_rect_inclusion(
                &self.layout,
                &self.x,
                &self.y,
                &work,
                count,
                self.scene.rectangles(),
            )?);
        }
        for (i, circle) in self.scene.circles().iter().enumerate() {
            let pool = self.scratch.as_ref().expect("scratch exists");
            let work = CircleWork::carve(pool, 0, n);
            c.append(&circle_exclusion(
                &self.layout,
                &self.x,
                &self.y,
                &work,
                &self.circle_flags[i],
                circle,
            )?);
        }
        for (j, poly) in self.scene.polygons().iter().enumerate() {
            let pool = self.scratch.as_ref().expect("scratch exists");
            let cross_w = cross_register_width(self.scene.n(), poly);
            let work = PolygonWork::carve(pool, 0, n, cross_w);
            let g = pool.slice(
                "poly_g",
                PolygonWork::width(n, cross_w),
                polygon_accumulator_width(poly.num_edges()),
                RegisterRole::Accumulator,
            );
            let incl = polygon_inclusion(&self.layout, &self.x, &self.y, &work, &g, poly)?;
            c.append(&incl);
            // inside flag = [g == 0]
            let controls: Vec<(usize, bool)> = g.qubits().into_iter().map(|q| (q, false)).collect();
            c.mcx(&controls, self.polygon_inside[j].qubit(0));
            c.append(&incl.inverse());
        }
        Ok(c)
    }

    /// The Grover phase oracle: -1 on feasible coordinate states, identity
    /// elsewhere, with every work register restored.
    pub fn phase_oracle(&self) -> Result<Circuit, OracleError> {
        let summaries = self.compute_summaries()?;
        let mut controls: Vec<(usize, bool)> = Vec::new();
        if let Some(count) = &self.rect_count {
            controls.extend(count.qubits().into_iter().map(|q| (q, false)));
        }
        for flag in &self.circle_flags {
            controls.push((flag.qubit(0), true));
        }
        for flag in &self.polygon_inside {
            controls.push((flag.qubit(0), false));
        }
        let mut c = summaries.clone();
        c.controlled_global_phase(&controls, PI);
        c.append(&summaries.inverse());
        Ok(c)
    }

    /// Evaluates the phase oracle on every coordinate basis state and
    /// returns the marked set, indexed by x + 2^n y. Each entry is exact:
    /// the oracle maps a basis input to itself with amplitude +1 or -1.
    pub fn marked_set(&self) -> Result<Vec<bool>, OracleError> {
        let oracle = self.phase_oracle()?;
        let side = self.scene.side() as u64;
        let mut marked = Vec::with_capacity((side * side) as usize);
        for y in 0..side {
            for x in 0..side {
                let basis = self.layout.basis_index(&[(&self.x, x), (&self.y, y)]);
                let mut state = SparseState::basis_state(self.layout.num_qubits(), basis)
                    .expect("plan within capacity");
                state.apply_circuit(&oracle).expect("shape matches");
                let amp = state.amplitude(basis);
                assert!(
                    (amp.norm() - 1.0).abs() < 1e-9,
                    "oracle must act as a phase on basis states, got |amp| = {}",
                    amp.norm()
                );
                marked.push(amp.re < 0.0);
            }
        }
        Ok(marked)
    }
}
