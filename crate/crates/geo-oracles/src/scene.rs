use crate::SceneError;

/// A point of the discretized workspace; both coordinates lie in [0, 2^n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridPoint {
    pub x: u32,
    pub y: u32,
}

impl GridPoint {
    pub fn new(x: u32, y: u32) -> Self {
        GridPoint { x, y }
    }
}

/// Axis-aligned rectangular obstacle with inclusive bounds: the cell (x, y)
/// is inside iff a1 <= x <= a2 and b1 <= y <= b2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rectangle {
    pub a1: u32,
    pub a2: u32,
    pub b1: u32,
    pub b2: u32,
}

impl Rectangle {
    pub fn new(a1: u32, a2: u32, b1: u32, b2: u32) -> Self {
        Rectangle { a1, a2, b1, b2 }
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.a1 <= p.x && p.x <= self.a2 && self.b1 <= p.y && p.y <= self.b2
    }

    fn validate(&self, index: usize, n: u32) -> Result<(), SceneError> {
        if self.a1 > self.a2 || self.b1 > self.b2 {
            return Err(SceneError::BadRectangle {
                index,
                reason: format!(
                    "bounds inverted: [{}, {}] x [{}, {}]",
                    self.a1, self.a2, self.b1, self.b2
                ),
            });
        }
        let max = 1u32 << n;
        if self.a2 > max || self.b2 > max {
            return Err(SceneError::BadRectangle {
                index,
                reason: format!("coordinate exceeds {max}"),
            });
        }
        Ok(())
    }
}

/// Circular obstacle. A cell is excluded from the obstacle (feasible with
/// respect to this circle) iff r^2 <= (x-c1)^2 + (y-c2)^2, so the boundary
/// is feasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Circle {
    pub c1: u32,
    pub c2: u32,
    pub r: u32,
}

impl Circle {
    pub fn new(c1: u32, c2: u32, r: u32) -> Self {
        Circle { c1, c2, r }
    }

    pub fn r_squared(&self) -> u64 {
        (self.r as u64) * (self.r as u64)
    }

    /// Squared distance from the center to `p`.
    pub fn dist_squared(&self, p: GridPoint) -> u64 {
        let dx = (p.x as i64 - self.c1 as i64).unsigned_abs();
        let dy = (p.y as i64 - self.c2 as i64).unsigned_abs();
        dx * dx + dy * dy
    }

    /// Exclusion condition: outside or on the circle.
    pub fn excludes(&self, p: GridPoint) -> bool {
        self.dist_squared(p) >= self.r_squared()
    }

    fn validate(&self, index: usize, n: u32) -> Result<(), SceneError> {
        let max = (1u32 << n) - 1;
        for value in [self.c1, self.c2] {
            if value > max {
                return Err(SceneError::CircleCenterOutOfRange { index, value, max });
            }
        }
        let limit = 1u64 << (2 * n + 1);
        if self.r_squared() >= limit {
            return Err(SceneError::RadiusTooLarge {
                index,
                r_squared: self.r_squared(),
                limit,
            });
        }
        Ok(())
    }
}

/// Strictly convex polygonal obstacle with counter-clockwise vertices; the
/// interior lies to the left of every directed edge. Construction
/// normalizes clockwise input by reversing it and rejects non-convex
/// vertex lists naming the offending vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexPolygon {
    vertices: Vec<GridPoint>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<GridPoint>) -> Result<Self, SceneError> {
        Self::with_index(vertices, 0)
    }

    pub(crate) fn with_index(
        mut vertices: Vec<GridPoint>,
        index: usize,
    ) -> Result<Self, SceneError> {
        if vertices.len() < 3 {
            return Err(SceneError::TooFewVertices {
                index,
                got: vertices.len(),
            });
        }
        let area2: i64 = signed_area_doubled(&vertices);
        if area2 == 0 {
            return Err(SceneError::DegeneratePolygon { index });
        }
        if area2 < 0 {
            vertices.reverse();
        }
        // strict convexity: every consecutive edge pair turns left
        let m = vertices.len();
        for i in 0..m {
            let a = vertices[i];
            let b = vertices[(i + 1) % m];
            let c = vertices[(i + 2) % m];
            let v1 = (b.x as i64 - a.x as i64, b.y as i64 - a.y as i64);
            let v2 = (c.x as i64 - b.x as i64, c.y as i64 - b.y as i64);
            if v1.0 * v2.1 - v1.1 * v2.0 <= 0 {
                return Err(SceneError::NonConvex {
                    index,
                    x: b.x,
                    y: b.y,
                });
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[GridPoint] {
        &self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.vertices.len()
    }

    /// (vertex, edge vector) pairs in traversal order, wrapping around.
    pub fn edges(&self) -> Vec<(GridPoint, (i64, i64))> {
        let m = self.vertices.len();
        (0..m)
            .map(|i| {
                let p = self.vertices[i];
                let q = self.vertices[(i + 1) % m];
                (p, (q.x as i64 - p.x as i64, q.y as i64 - p.y as i64))
            })
            .collect()
    }

    /// Cross product (p - z) x v for one edge; nonnegative for every edge
    /// exactly when z is inside the polygon or on its boundary.
    pub fn edge_cross(p: GridPoint, v: (i64, i64), z: GridPoint) -> i64 {
        let dx = p.x as i64 - z.x as i64;
        let dy = p.y as i64 - z.y as i64;
        dx * v.1 - dy * v.0
    }

    /// Inside-or-boundary test; boundary cells count as obstacle cells.
    pub fn contains(&self, z: GridPoint) -> bool {
        self.edges()
            .into_iter()
            .all(|(p, v)| Self::edge_cross(p, v, z) >= 0)
    }

    fn validate_range(&self, index: usize, n: u32) -> Result<(), SceneError> {
        let max = (1u32 << n) - 1;
        for v in &self.vertices {
            if v.x > max || v.y > max {
                return Err(SceneError::VertexOutOfRange {
                    index,
                    x: v.x,
                    y: v.y,
                    max,
                });
            }
        }
        Ok(())
    }
}

fn signed_area_doubled(vertices: &[GridPoint]) -> i64 {
    let m = vertices.len();
    (0..m)
        .map(|i| {
            let a = vertices[i];
            let b = vertices[(i + 1) % m];
            a.x as i64 * b.y as i64 - b.x as i64 * a.y as i64
        })
        .sum()
}

/// A grid resolution plus obstacle lists; defines the feasible region.
///
/// Construction validates geometry only. Whether any feasible point exists
/// is checked at load time by the front end, not here, so oracle edge cases
/// (fully covered grids) remain constructible in tests.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    n: u32,
    rectangles: Vec<Rectangle>,
    circles: Vec<Circle>,
    polygons: Vec<ConvexPolygon>,
}

impl Scene {
    pub const MAX_RESOLUTION: u32 = 12;

    pub fn new(
        n: u32,
        rectangles: Vec<Rectangle>,
        circles: Vec<Circle>,
        polygons: Vec<ConvexPolygon>,
    ) -> Result<Self, SceneError> {
        if n == 0 || n > Self::MAX_RESOLUTION {
            return Err(SceneError::BadResolution {
                n,
                max: Self::MAX_RESOLUTION,
            });
        }
        for (i, r) in rectangles.iter().enumerate() {
            r.validate(i, n)?;
        }
        for (i, c) in circles.iter().enumerate() {
            c.validate(i, n)?;
        }
        for (i, p) in polygons.iter().enumerate() {
            p.validate_range(i, n)?;
        }
        Ok(Scene {
            n,
            rectangles,
            circles,
            polygons,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Grid side length 2^n.
    pub fn side(&self) -> u32 {
        1 << self.n
    }

    /// Total cell count 4^n.
    pub fn num_cells(&self) -> u64 {
        1u64 << (2 * self.n)
    }

    pub fn rectangles(&self) -> &[Rectangle] {
        &self.rectangles
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn polygons(&self) -> &[ConvexPolygon] {
        &self.polygons
    }

    /// The classical feasibility predicate: inside the workspace and outside
    /// every obstacle. This is the reference every quantum oracle is checked
    /// against.
    pub fn is_feasible(&self, p: GridPoint) -> bool {
        !self.rectangles.iter().any(|r| r.contains(p))
            && self.circles.iter().all(|c| c.excludes(p))
            && !self.polygons.iter().any(|poly| poly.contains(p))
    }

    pub fn grid_points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        let side = self.side();
        (0..side).flat_map(move |y| (0..side).map(move |x| GridPoint::new(x, y)))
    }

    pub fn feasible_points(&self) -> Vec<GridPoint> {
        self.grid_points().filter(|&p| self.is_feasible(p)).collect()
    }

    /// |feasible| / 4^n by exhaustive enumeration.
    pub fn exact_feasible_fraction(&self) -> f64 {
        let feasible = self.grid_points().filter(|&p| self.is_feasible(p)).count();
        feasible as f64 / self.num_cells() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_bounds_are_inclusive() {
        let r = Rectangle::new(1, 4, 1, 3);
        assert!(r.contains(GridPoint::new(2, 2)));
        assert!(!r.contains(GridPoint::new(5, 2)));
        assert!(r.contains(GridPoint::new(4, 3)), "corner counts as inside");
    }

    #[test]
    fn circle_boundary_is_feasible() {
        let c = Circle::new(4, 4, 2);
        assert!(c.excludes(GridPoint::new(7, 4)));
        assert!(!c.excludes(GridPoint::new(4, 4)));
        assert!(c.excludes(GridPoint::new(6, 4)), "d^2 = r^2 satisfies >=");
    }

    #[test]
    fn polygon_contains_square_cases() {
        let poly = ConvexPolygon::new(vec![
            GridPoint::new(1, 1),
            GridPoint::new(5, 1),
            GridPoint::new(5, 5),
            GridPoint::new(1, 5),
        ])
        .unwrap();
        assert!(poly.contains(GridPoint::new(3, 3)));
        assert!(!poly.contains(GridPoint::new(0, 0)));
        assert!(poly.contains(GridPoint::new(1, 3)), "boundary is obstacle");
    }

    #[test]
    fn clockwise_vertices_are_normalized() {
        let ccw = ConvexPolygon::new(vec![
            GridPoint::new(1, 1),
            GridPoint::new(5, 1),
            GridPoint::new(3, 4),
        ])
        .unwrap();
        let cw = ConvexPolygon::new(vec![
            GridPoint::new(3, 4),
            GridPoint::new(5, 1),
            GridPoint::new(1, 1),
        ])
        .unwrap();
        for y in 0..8 {
            for x in 0..8 {
                let p = GridPoint::new(x, y);
                assert_eq!(ccw.contains(p), cw.contains(p), "at ({x},{y})");
            }
        }
    }

    #[test]
    fn nonconvex_rejected_with_vertex_diagnostic() {
        let err = ConvexPolygon::new(vec![
            GridPoint::new(0, 0),
            GridPoint::new(4, 0),
            GridPoint::new(2, 1), // reflex dent
            GridPoint::new(4, 4),
        ])
        .unwrap_err();
        match err {
            SceneError::NonConvex { x, y, .. } => assert_eq!((x, y), (2, 1)),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn collinear_vertices_rejected() {
        assert!(matches!(
            ConvexPolygon::new(vec![
                GridPoint::new(0, 0),
                GridPoint::new(2, 0),
                GridPoint::new(4, 0),
            ]),
            Err(SceneError::DegeneratePolygon { .. })
        ));
    }

    #[test]
    fn scene_feasibility_composes_all_obstacles() {
        let scene = Scene::new(
            3,
            vec![Rectangle::new(0, 3, 0, 3)],
            vec![Circle::new(6, 6, 2)],
            vec![],
        )
        .unwrap();
        assert!(!scene.is_feasible(GridPoint::new(1, 1)), "in rectangle");
        assert!(!scene.is_feasible(GridPoint::new(6, 6)), "in circle");
        assert!(scene.is_feasible(GridPoint::new(7, 0)));
        let p = scene.exact_feasible_fraction();
        assert!(p > 0.0 && p < 1.0);
    }

    #[test]
    fn single_rectangle_fraction_example() {
        let scene = Scene::new(3, vec![Rectangle::new(0, 3, 0, 3)], vec![], vec![]).unwrap();
        assert_eq!(scene.exact_feasible_fraction(), 0.75);
    }
}
