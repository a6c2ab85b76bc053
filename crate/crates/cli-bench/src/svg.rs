use geo_oracles::{GridPoint, Scene};
use grover_sampler::SweepRow;

/// Pixels per grid cell.
const UNIT: i64 = 20;
const MARGIN: i64 = 20;
const DOT_RADIUS: i64 = 4;

/// Scene rendering: obstacles at 40% opacity with sampled points as dots.
///
/// The y axis is flipped so cell (0, 0) renders bottom-left. Every cell is
/// drawn at its center (x + 1/2, y + 1/2 in grid units), and obstacle
/// geometry lives in the same point space, so a dot lies inside a drawn
/// shape exactly when the classical predicate puts its cell inside the
/// obstacle (circle boundaries excluded, rectangle/polygon boundaries
/// included).
pub fn scene_svg(scene: &Scene, points: &[GridPoint]) -> String {
    let side = scene.side() as i64;
    let canvas = side * UNIT + 2 * MARGIN;
    let px = |x: i64| MARGIN + x * UNIT + UNIT / 2;
    let py = |y: i64| MARGIN + (side - 1 - y) * UNIT + UNIT / 2;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{canvas}\" height=\"{canvas}\" \
         viewBox=\"0 0 {canvas} {canvas}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{canvas}\" height=\"{canvas}\" fill=\"#ffffff\"/>\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{}\" height=\"{}\" fill=\"none\" \
         stroke=\"#888888\" stroke-width=\"1\"/>\n",
        side * UNIT,
        side * UNIT
    ));

    for r in scene.rectangles() {
        let x = px(r.a1 as i64);
        let y = py(r.b2 as i64);
        let w = (r.a2 - r.a1) as i64 * UNIT;
        let h = (r.b2 - r.b1) as i64 * UNIT;
        svg.push_str(&format!(
            "  <rect class=\"obstacle-rect\" x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" \
             fill=\"#7f7f7f\" fill-opacity=\"0.4\" stroke=\"#555555\" stroke-width=\"2\"/>\n"
        ));
    }
    for c in scene.circles() {
        svg.push_str(&format!(
            "  <circle class=\"obstacle-circle\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#2ca02c\" \
             fill-opacity=\"0.4\" stroke=\"#1a661a\" stroke-width=\"2\"/>\n",
            px(c.c1 as i64),
            py(c.c2 as i64),
            c.r as i64 * UNIT
        ));
    }
    for poly in scene.polygons() {
        let mut d = String::new();
        for (i, v) in poly.vertices().iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{cmd}{},{} ", px(v.x as i64), py(v.y as i64)));
        }
        d.push('Z');
        svg.push_str(&format!(
            "  <path class=\"obstacle-poly\" d=\"{d}\" fill=\"#9467bd\" fill-opacity=\"0.4\" \
             stroke=\"#5e3f82\" stroke-width=\"2\"/>\n"
        ));
    }
    for p in points {
        svg.push_str(&format!(
            "  <circle class=\"dot\" cx=\"{}\" cy=\"{}\" r=\"{DOT_RADIUS}\" fill=\"#c01010\"/>\n",
            px(p.x as i64),
            py(p.y as i64)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

/// Query-complexity chart: empirical means (solid, markers) and analytic
/// curves (dashed) for both backends against the feasible fraction on a
/// log-scaled x axis.
pub fn bench_svg(rows: &[SweepRow]) -> String {
    assert!(rows.len() >= 2, "chart needs at least two scenes");
    let width = 640.0;
    let height = 440.0;
    let (left, right, top, bottom) = (80.0, 20.0, 20.0, 60.0);
    let plot_w = width - left - right;
    let plot_h = height - top - bottom;

    let mut rows: Vec<&SweepRow> = rows.iter().collect();
    rows.sort_by(|a, b| b.p.partial_cmp(&a.p).expect("finite p"));

    let lg = |p: f64| p.log2();
    let (p_max, p_min) = (rows[0].p, rows[rows.len() - 1].p);
    let x_of = |p: f64| {
        if (p_max - p_min).abs() < f64::EPSILON {
            left + plot_w / 2.0
        } else {
            left + (lg(p_max) - lg(p)) / (lg(p_max) - lg(p_min)) * plot_w
        }
    };
    let y_top = rows
        .iter()
        .flat_map(|r| {
            [
                r.classical_mean,
                r.quantum_mean,
                r.classical_analytic,
                r.quantum_analytic,
            ]
        })
        .fold(0.0f64, f64::max)
        * 1.05;
    let y_of = |v: f64| top + plot_h - v / y_top * plot_h;

    let polyline = |vals: &dyn Fn(&SweepRow) -> f64| -> String {
        rows.iter()
            .map(|r| format!("{:.1},{:.1}", x_of(r.p), y_of(vals(r))))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
    ));
    // axes
    svg.push_str(&format!(
        "  <line x1=\"{left}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#000\"/>\n",
        top + plot_h,
        left + plot_w,
        top + plot_h
    ));
    svg.push_str(&format!(
        "  <line x1=\"{left}\" y1=\"{top}\" x2=\"{left}\" y2=\"{:.1}\" stroke=\"#000\"/>\n",
        top + plot_h
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"13\">feasible \
         fraction p</text>\n",
        left + plot_w / 2.0,
        height - 12.0
    ));
    svg.push_str(&format!(
        "  <text x=\"16\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"13\" \
         transform=\"rotate(-90 16 {:.1})\">oracle calls</text>\n",
        top + plot_h / 2.0,
        top + plot_h / 2.0
    ));
    for r in &rows {
        svg.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"11\">{}</text>\n",
            x_of(r.p),
            top + plot_h + 18.0,
            r.p
        ));
    }
    for tick in 0..=4 {
        let v = y_top * tick as f64 / 4.0;
        svg.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\" font-size=\"11\">{:.0}</text>\n",
            left - 6.0,
            y_of(v) + 4.0,
            v
        ));
    }

    type Series<'a> = (&'a str, &'a dyn Fn(&SweepRow) -> f64, &'a str, &'a str);
    let series: [Series; 4] = [
        ("classical empirical", &|r| r.classical_mean, "#d62728", ""),
        ("quantum empirical", &|r| r.quantum_mean, "#1f77b4", ""),
        (
            "classical analytic M/p",
            &|r| r.classical_analytic,
            "#d62728",
            " stroke-dasharray=\"6 3\"",
        ),
        (
            "quantum analytic (R+1)M",
            &|r| r.quantum_analytic,
            "#1f77b4",
            " stroke-dasharray=\"6 3\"",
        ),
    ];
    for (i, (label, vals, color, dash)) in series.iter().enumerate() {
        svg.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"{dash}/>\n",
            polyline(vals)
        ));
        if dash.is_empty() {
            for r in &rows {
                svg.push_str(&format!(
                    "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"3\" fill=\"{color}\"/>\n",
                    x_of(r.p),
                    y_of(vals(r))
                ));
            }
        }
        let ly = top + 16.0 + i as f64 * 18.0;
        svg.push_str(&format!(
            "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{color}\" \
             stroke-width=\"2\"{dash}/>\n",
            left + 16.0,
            ly,
            left + 46.0,
            ly
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\">{label}</text>\n",
            left + 52.0,
            ly + 4.0
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
