//! Exhaustive operator verification: every circuit builder is swept over
//! every valid basis input at the requested width and compared against an
//! independent integer reference, and the published resource ledger is
//! checked against its expected rows.

use qarith::{
    abs_diff_const, add_const_inplace, add_const_outplace, add_register_inplace,
    add_square_inplace, decode_twos_complement, euclid_sq_dist, mult_const_outplace, negate_mod,
    threshold_compare, vector_cross_product, ConstantOperand, SignedMagnitude,
};
use geo_oracles::resources::{
    circle_oracle_built_qubits, circle_oracle_declared_qubits, declared_resources, ResourceCounts,
    TableOperator,
};
use geo_oracles::{
    interval_check, multi_rect_inclusion, polygon_accumulator_width, polygon_inclusion,
    rect_accumulator_width, rect_inclusion, cross_register_width, ConvexPolygon, GridPoint,
    IntervalWork, MultiRectWork, PolygonWork, Rectangle, RectWork,
};
use qsim_core::{dominant_basis, Circuit, Layout, QuantumState, RegisterRole, SparseState};

use crate::CliError;

const MAX_VERIFY_BITS: u32 = 4;

/// One mismatch: which operator, which input, what was expected.
#[derive(Debug, Clone)]
pub struct VerifyFailure {
    pub operator: &'static str,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone)]
pub struct OpReport {
    pub operator: &'static str,
    pub cases: usize,
}

#[derive(Debug, Clone)]
pub struct ResourceRow {
    pub operator: &'static str,
    pub declared: ResourceCounts,
    pub expected: ResourceCounts,
}

/// Full verification output: per-operator sweeps plus the resource ledger.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub bits: u32,
    pub operators: Vec<OpReport>,
    pub resources: Vec<ResourceRow>,
    pub circle_declared_qubits: u32,
    pub circle_built_qubits: u32,
    pub failure: Option<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
            && self
                .resources
                .iter()
                .all(|r| r.declared == r.expected)
            && self.circle_declared_qubits == 5 * self.bits + 1
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("operator verification at n = {}\n", self.bits));
        for op in &self.operators {
            out.push_str(&format!(
                "  {:<24} PASS ({} basis inputs)\n",
                op.operator, op.cases
            ));
        }
        if let Some(f) = &self.failure {
            out.push_str(&format!(
                "  {:<24} FAIL at input {} (expected {}, got {})\n",
                f.operator, f.input, f.expected, f.got
            ));
        }
        out.push_str("resource ledger (input/output/aux qubits)\n");
        for row in &self.resources {
            let ok = row.declared == row.expected;
            out.push_str(&format!(
                "  {:<24} declared {}/{}/{} expected {}/{}/{} {}\n",
                row.operator,
                row.declared.input,
                row.declared.output,
                row.declared.aux,
                row.expected.input,
                row.expected.output,
                row.expected.aux,
                if ok { "PASS" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "  circle oracle: declared {} qubits (5n+1), built {} (+1 flag)\n",
            self.circle_declared_qubits, self.circle_built_qubits
        ));
        out.push_str(if self.passed() {
            "verification PASSED\n"
        } else {
            "verification FAILED\n"
        });
        out
    }
}

/// Applies a circuit to one basis input and checks the dominant output
/// basis state. The backbone of every sweep; also how the test suite
/// detects deliberately corrupted circuits.
pub fn check_case(
    operator: &'static str,
    layout: &Layout,
    circuit: &Circuit,
    input_basis: u64,
    expected_basis: u64,
    input_desc: impl Fn() -> String,
) -> Result<(), Box<VerifyFailure>> {
    let mut state = SparseState::basis_state(layout.num_qubits(), input_basis)
        .expect("verify layouts stay within capacity");
    state.apply_circuit(circuit).expect("shape matches");
    let (got, p) = dominant_basis(&state).expect("non-empty state");
    if p < 1.0 - 1e-9 || got != expected_basis {
        return Err(Box::new(VerifyFailure {
            operator,
            input: input_desc(),
            expected: format!("basis {expected_basis:#x}"),
            got: format!("basis {got:#x} (weight {p:.12})"),
        }));
    }
    Ok(())
}

type SweepResult = Result<OpReport, Box<VerifyFailure>>;

fn sweep_add_const_inplace(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let t = layout.alloc("t", n as usize, RegisterRole::Accumulator);
    let side = 1u64 << n;
    let mut cases = 0;
    for k in 0..side {
        let c = add_const_inplace(&layout, &t, &ConstantOperand::fitting(k)).expect("valid");
        for x in 0..side {
            check_case(
                "add_const_inplace",
                &layout,
                &c,
                layout.basis_index(&[(&t, x)]),
                layout.basis_index(&[(&t, (x + k) % side)]),
                || format!("x={x} k={k}"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "add_const_inplace",
        cases,
    })
}

fn sweep_add_register_inplace(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let a = layout.alloc("a", n as usize, RegisterRole::Coordinate);
    let b = layout.alloc("b", n as usize + 1, RegisterRole::Accumulator);
    let c = add_register_inplace(&layout, &a, &b).expect("valid");
    let side = 1u64 << n;
    let wide = side * 2;
    let mut cases = 0;
    for av in 0..side {
        for bv in 0..wide {
            check_case(
                "add_register_inplace",
                &layout,
                &c,
                layout.basis_index(&[(&a, av), (&b, bv)]),
                layout.basis_index(&[(&a, av), (&b, (av + bv) % wide)]),
                || format!("a={av} b={bv}"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "add_register_inplace",
        cases,
    })
}

fn sweep_add_const_outplace(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let a = layout.alloc("a", n as usize, RegisterRole::Coordinate);
    let out = layout.alloc("out", n as usize + 1, RegisterRole::Accumulator);
    let side = 1u64 << n;
    let mut cases = 0;
    for k in 0..side {
        let c = add_const_outplace(&layout, &a, &out, &ConstantOperand::fitting(k)).expect("valid");
        for av in 0..side {
            check_case(
                "add_const_outplace",
                &layout,
                &c,
                layout.basis_index(&[(&a, av)]),
                layout.basis_index(&[(&a, av), (&out, av + k)]),
                || format!("a={av} k={k}"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "add_const_outplace",
        cases,
    })
}

fn sweep_mult_const_outplace(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let out = layout.alloc("out", 2 * n as usize, RegisterRole::Accumulator);
    let side = 1u64 << n;
    let mut cases = 0;
    for k in 0..side {
        let c = mult_const_outplace(&layout, &x, &out, &ConstantOperand::fitting(k)).expect("valid");
        for xv in 0..side {
            check_case(
                "mult_const_outplace",
                &layout,
                &c,
                layout.basis_index(&[(&x, xv)]),
                layout.basis_index(&[(&x, xv), (&out, k * xv)]),
                || format!("x={xv} k={k}"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "mult_const_outplace",
        cases,
    })
}

fn sweep_add_square_inplace(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let y = layout.alloc("y", 2 * n as usize, RegisterRole::Accumulator);
    let c = add_square_inplace(&layout, &x, &y).expect("valid");
    let side = 1u64 << n;
    let wide = 1u64 << (2 * n);
    let mut cases = 0;
    for xv in 0..side {
        for yv in 0..wide {
            check_case(
                "add_square_inplace",
                &layout,
                &c,
                layout.basis_index(&[(&x, xv), (&y, yv)]),
                layout.basis_index(&[(&x, xv), (&y, (yv + xv * xv) % wide)]),
                || format!("x={xv} y={yv}"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "add_square_inplace",
        cases,
    })
}

fn sweep_negate_mod(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let ext = layout.alloc("ext", 1, RegisterRole::Ancilla);
    let c = negate_mod(&layout, &ext, &x).expect("valid");
    let side = 1u64 << n;
    let mut cases = 0;
    for xv in 0..side {
        let joint = side - xv; // 2^n - x on (ext, x) jointly
        check_case(
            "negate_mod",
            &layout,
            &c,
            layout.basis_index(&[(&x, xv)]),
            layout.basis_index(&[(&x, joint % side), (&ext, joint / side)]),
            || format!("x={xv}"),
        )?;
        cases += 1;
    }
    Ok(OpReport {
        operator: "negate_mod",
        cases,
    })
}

fn sweep_threshold_compare(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let flag = layout.alloc("flag", 1, RegisterRole::Flag);
    let ext = layout.alloc("ext", 1, RegisterRole::Ancilla);
    let side = 1u64 << n;
    let mut cases = 0;
    for cv in 0..=side {
        let c = threshold_compare(&layout, &x, &flag, &ext, &ConstantOperand::fitting(cv))
            .expect("valid");
        for xv in 0..side {
            check_case(
                "threshold_compare",
                &layout,
                &c,
                layout.basis_index(&[(&x, xv)]),
                layout.basis_index(&[(&x, xv), (&flag, (xv < cv) as u64)]),
                || format!("x={xv} c={cv}"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "threshold_compare",
        cases,
    })
}

fn sweep_abs_diff(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let alpha = layout.alloc("alpha", 1, RegisterRole::Flag);
    let ext = layout.alloc("ext", 1, RegisterRole::Ancilla);
    let out = layout.alloc("out", n as usize + 1, RegisterRole::Accumulator);
    let side = 1u64 << n;
    let mut cases = 0;
    for kv in 0..=side {
        let c = abs_diff_const(&layout, &x, &alpha, &ext, &out, &ConstantOperand::fitting(kv))
            .expect("valid");
        for xv in 0..side {
            check_case(
                "abs_diff_const",
                &layout,
                &c,
                layout.basis_index(&[(&x, xv)]),
                layout.basis_index(&[(&x, xv), (&out, xv.abs_diff(kv))]),
                || format!("x={xv} k={kv}"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "abs_diff_const",
        cases,
    })
}

fn sweep_euclid(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let y = layout.alloc("y", n as usize, RegisterRole::Coordinate);
    let dx = layout.alloc("dx", n as usize, RegisterRole::Accumulator);
    let dy = layout.alloc("dy", n as usize, RegisterRole::Accumulator);
    let dist = layout.alloc("dist", 2 * n as usize + 1, RegisterRole::Accumulator);
    let alpha = layout.alloc("alpha", 1, RegisterRole::Flag);
    let ext = layout.alloc("ext", 1, RegisterRole::Ancilla);
    let side = 1u64 << n;
    let mut cases = 0;
    for c1 in 0..side {
        for c2 in 0..side {
            let circuit = euclid_sq_dist(
                &layout,
                &x,
                &y,
                &dx,
                &dy,
                &dist,
                &alpha,
                &ext,
                &ConstantOperand::fitting(c1),
                &ConstantOperand::fitting(c2),
            )
            .expect("valid");
            for xv in 0..side {
                for yv in 0..side {
                    let ex = xv.abs_diff(c1);
                    let ey = yv.abs_diff(c2);
                    check_case(
                        "euclid_sq_dist",
                        &layout,
                        &circuit,
                        layout.basis_index(&[(&x, xv), (&y, yv)]),
                        layout.basis_index(&[
                            (&x, xv),
                            (&y, yv),
                            (&dx, ex),
                            (&dy, ey),
                            (&dist, ex * ex + ey * ey),
                        ]),
                        || format!("z=({xv},{yv}) c=({c1},{c2})"),
                    )?;
                    cases += 1;
                }
            }
        }
    }
    Ok(OpReport {
        operator: "euclid_sq_dist",
        cases,
    })
}

fn sweep_cross_product(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let sx = layout.alloc("sx", 1, RegisterRole::Sign);
    let xm = layout.alloc("xm", n as usize, RegisterRole::Coordinate);
    let sy = layout.alloc("sy", 1, RegisterRole::Sign);
    let ym = layout.alloc("ym", n as usize, RegisterRole::Coordinate);
    let w = 2 * n as usize + 2;
    let out = layout.alloc("out", w, RegisterRole::Accumulator);
    let x = SignedMagnitude::new(sx.clone(), xm.clone());
    let y = SignedMagnitude::new(sy.clone(), ym.clone());
    let side = 1i64 << n;
    let vs: [(i64, i64); 16] = [
        (0, 0),
        (1, 0),
        (0, 1),
        (1, 3),
        (3, 1),
        (-1, 2),
        (2, -1),
        (-3, -4),
        (5, 2),
        (-5, 7),
        (7, 7),
        (-7, -7),
        (4, -6),
        (-2, 5),
        (6, 1),
        (0, -3),
    ];
    let mut cases = 0;
    for (v1, v2) in vs {
        if v1.abs() >= side || v2.abs() >= side {
            continue;
        }
        let c = vector_cross_product(&layout, &x, &y, &out, v1, v2).expect("valid");
        for sxv in 0..2u64 {
            for xv in 0..side as u64 {
                if sxv == 1 && xv == 0 {
                    continue;
                }
                for syv in 0..2u64 {
                    for yv in 0..side as u64 {
                        if syv == 1 && yv == 0 {
                            continue;
                        }
                        let xs = if sxv == 1 { -(xv as i64) } else { xv as i64 };
                        let ys = if syv == 1 { -(yv as i64) } else { yv as i64 };
                        let expected = xs * v2 - ys * v1;
                        let raw = if expected < 0 {
                            (expected + (1i64 << w)) as u64
                        } else {
                            expected as u64
                        };
                        debug_assert_eq!(decode_twos_complement(raw, w as u32), expected);
                        check_case(
                            "vector_cross_product",
                            &layout,
                            &c,
                            layout.basis_index(&[
                                (&sx, sxv),
                                (&xm, xv),
                                (&sy, syv),
                                (&ym, yv),
                            ]),
                            layout.basis_index(&[
                                (&sx, sxv),
                                (&xm, xv),
                                (&sy, syv),
                                (&ym, yv),
                                (&out, raw),
                            ]),
                            || format!("x={xs} y={ys} v=({v1},{v2})"),
                        )?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(OpReport {
        operator: "vector_cross_product",
        cases,
    })
}

fn sweep_interval_check(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let work = IntervalWork::alloc(&mut layout, "w");
    let s = layout.alloc("s", 1, RegisterRole::Flag);
    let side = 1u64 << n;
    let mut cases = 0;
    for a1 in 0..side {
        for a2 in a1..side {
            let c = interval_check(&layout, &x, &work, &s, a1, a2).expect("valid");
            for xv in 0..side {
                check_case(
                    "interval_check",
                    &layout,
                    &c,
                    layout.basis_index(&[(&x, xv)]),
                    layout.basis_index(&[(&x, xv), (&s, (a1 <= xv && xv <= a2) as u64)]),
                    || format!("x={xv} interval=[{a1},{a2}]"),
                )?;
                cases += 1;
            }
        }
    }
    Ok(OpReport {
        operator: "interval_check",
        cases,
    })
}

fn verify_rects(n: u32) -> Vec<Rectangle> {
    let hi = (1u32 << n) - 1;
    vec![
        Rectangle::new(1, hi.min(4), 1, hi.min(3)),
        Rectangle::new(0, hi, 0, hi / 2),
        Rectangle::new(hi / 2, hi, hi / 2, hi),
        Rectangle::new(2, 2, 0, hi),
    ]
}

fn sweep_rect_inclusion(n: u32) -> SweepResult {
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let y = layout.alloc("y", n as usize, RegisterRole::Coordinate);
    let work = RectWork::alloc(&mut layout, "w");
    let s = layout.alloc("s", 1, RegisterRole::Flag);
    let side = 1u64 << n;
    let mut cases = 0;
    for rect in verify_rects(n) {
        let c = rect_inclusion(&layout, &x, &y, &work, &s, &rect).expect("valid");
        for xv in 0..side {
            for yv in 0..side {
                let inside = rect.contains(GridPoint::new(xv as u32, yv as u32));
                check_case(
                    "rect_inclusion",
                    &layout,
                    &c,
                    layout.basis_index(&[(&x, xv), (&y, yv)]),
                    layout.basis_index(&[(&x, xv), (&y, yv), (&s, inside as u64)]),
                    || format!("z=({xv},{yv}) rect={rect:?}"),
                )?;
                cases += 1;
            }
        }
    }
    Ok(OpReport {
        operator: "rect_inclusion",
        cases,
    })
}

fn sweep_multi_rect(n: u32) -> SweepResult {
    let rects = verify_rects(n);
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let y = layout.alloc("y", n as usize, RegisterRole::Coordinate);
    let work = MultiRectWork::alloc(&mut layout, "w");
    let count = layout.alloc(
        "count",
        rect_accumulator_width(rects.len()),
        RegisterRole::Accumulator,
    );
    let c = multi_rect_inclusion(&layout, &x, &y, &work, &count, &rects).expect("valid");
    let side = 1u64 << n;
    let mut cases = 0;
    for xv in 0..side {
        for yv in 0..side {
            let z = GridPoint::new(xv as u32, yv as u32);
            let expected = rects.iter().filter(|r| r.contains(z)).count() as u64;
            check_case(
                "multi_rect_inclusion",
                &layout,
                &c,
                layout.basis_index(&[(&x, xv), (&y, yv)]),
                layout.basis_index(&[(&x, xv), (&y, yv), (&count, expected)]),
                || format!("z=({xv},{yv})"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "multi_rect_inclusion",
        cases,
    })
}

fn sweep_polygon(n: u32) -> SweepResult {
    let hi = (1u32 << n) - 1;
    let poly = ConvexPolygon::new(vec![
        GridPoint::new(1, 1),
        GridPoint::new(hi.min(6), 2.min(hi)),
        GridPoint::new(3.min(hi), hi.min(6)),
    ])
    .expect("triangle is convex");
    let mut layout = Layout::new();
    let x = layout.alloc("x", n as usize, RegisterRole::Coordinate);
    let y = layout.alloc("y", n as usize, RegisterRole::Coordinate);
    let cross_w = cross_register_width(n, &poly);
    let work = PolygonWork::alloc(&mut layout, n as usize, cross_w, "w");
    let g = layout.alloc(
        "g",
        polygon_accumulator_width(poly.num_edges()),
        RegisterRole::Accumulator,
    );
    let c = polygon_inclusion(&layout, &x, &y, &work, &g, &poly).expect("valid");
    let side = 1u64 << n;
    let mut cases = 0;
    for xv in 0..side {
        for yv in 0..side {
            let z = GridPoint::new(xv as u32, yv as u32);
            let expected = poly
                .edges()
                .into_iter()
                .filter(|&(p, v)| ConvexPolygon::edge_cross(p, v, z) < 0)
                .count() as u64;
            check_case(
                "polygon_inclusion",
                &layout,
                &c,
                layout.basis_index(&[(&x, xv), (&y, yv)]),
                layout.basis_index(&[(&x, xv), (&y, yv), (&g, expected)]),
                || format!("z=({xv},{yv})"),
            )?;
            cases += 1;
        }
    }
    Ok(OpReport {
        operator: "polygon_inclusion",
        cases,
    })
}

/// Expected resource rows, kept separate from the published declarations so
/// an edit to either side trips the comparison.
fn expected_resources(op: TableOperator, n: u32, m: u32) -> ResourceCounts {
    let (input, output, aux) = match op {
        TableOperator::IntervalCheck => (n, 1, 3),
        TableOperator::RectInclusion => (n, 1, 5),
        TableOperator::MultiRectInclusion => (n, rect_accumulator_width(m as usize) as u32, 6),
        TableOperator::ThresholdCompare => (n, 1, 1),
        TableOperator::NegateMod => (n + 1, 0, 0),
        TableOperator::MultConst => (n, 2 * n, 0),
        TableOperator::AddConstInplace => (n, 0, 0),
        TableOperator::AddRegisterInplace => (n, 0, 0),
        TableOperator::AbsDiff => (n + 1, n + 1, 2),
        TableOperator::AddSquare => (n, 2 * n, 0),
        TableOperator::EuclidSqDist => (2 * n, 2 * n, n + 1),
        TableOperator::VectorCrossProduct => (2 * n, 2 * n, 1),
    };
    ResourceCounts { input, output, aux }
}

/// Runs every operator sweep and the resource-ledger comparison at width
/// `bits`. Capacity-limited to 4 bits.
pub fn cmd_verify(bits: u32) -> Result<VerifyReport, CliError> {
    if bits == 0 || bits > MAX_VERIFY_BITS {
        return Err(CliError::Capacity(format!(
            "verification sweeps support 1..={MAX_VERIFY_BITS} bits, got {bits}"
        )));
    }
    let sweeps: Vec<fn(u32) -> SweepResult> = vec![
        sweep_interval_check,
        sweep_rect_inclusion,
        sweep_multi_rect,
        sweep_threshold_compare,
        sweep_negate_mod,
        sweep_mult_const_outplace,
        sweep_add_const_inplace,
        sweep_add_register_inplace,
        sweep_add_const_outplace,
        sweep_abs_diff,
        sweep_add_square_inplace,
        sweep_euclid,
        sweep_cross_product,
        sweep_polygon,
    ];
    let mut operators = Vec::new();
    let mut failure = None;
    for sweep in sweeps {
        match sweep(bits) {
            Ok(report) => operators.push(report),
            Err(f) => {
                failure = Some(*f);
                break;
            }
        }
    }
    let resources = TableOperator::ALL
        .iter()
        .map(|&op| ResourceRow {
            operator: op.label(),
            declared: declared_resources(op, bits, 4),
            expected: expected_resources(op, bits, 4),
        })
        .collect();
    Ok(VerifyReport {
        bits,
        operators,
        resources,
        circle_declared_qubits: circle_oracle_declared_qubits(bits),
        circle_built_qubits: circle_oracle_built_qubits(bits),
        failure,
    })
}
