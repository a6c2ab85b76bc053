//! Geometric inclusion/exclusion oracles over a 2^n x 2^n grid.
//!
//! A [`Scene`] holds rectangular, circular, and convex-polygonal obstacles;
//! the feasible region is the grid minus their union. Each obstacle type has
//! a reversible circuit that computes its membership predicate into a flag
//! or counter register and restores every scratch qubit, and
//! [`OraclePlan`] composes them into the Grover phase oracle that flips the
//! sign of exactly the feasible coordinate states.
//!
//! Boundary semantics follow the obstacle type: rectangle bounds are
//! inclusive (boundary cells are obstacle cells), a circle excludes strictly
//! inside its radius (the boundary r^2 = d^2 stays feasible), and polygon
//! boundaries count as obstacle cells.

mod circle;
mod error;
mod interval;
mod oracle;
mod polygon;
mod rect;
pub mod resources;
mod scene;

pub use circle::{circle_exclusion, CircleWork};
pub use error::{OracleError, SceneError};
pub use interval::{interval_check, IntervalWork};
pub use oracle::OraclePlan;
pub use polygon::{cross_register_width, polygon_accumulator_width, polygon_inclusion, PolygonWork};
pub use rect::{multi_rect_inclusion, rect_inclusion, rect_accumulator_width, MultiRectWork, RectWork};
pub use scene::{Circle, ConvexPolygon, GridPoint, Rectangle, Scene};
