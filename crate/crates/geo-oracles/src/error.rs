use qarith::ArithError;
use thiserror::Error;

/// Scene validation failures, each with enough context to fix the input.
#[derive(Debug, Error)]
pub enum SceneError {
    #[error("grid resolution n={n} outside supported range 1..={max}")]
    BadResolution { n: u32, max: u32 },

    #[error("rectangle {index}: {reason}")]
    BadRectangle { index: usize, reason: String },

    #[error("circle {index}: center coordinate {value} outside grid [0, {max}]")]
    CircleCenterOutOfRange { index: usize, value: u32, max: u32 },

    #[error("circle {index}: r^2 = {r_squared} does not fit the distance register (< {limit})")]
    RadiusTooLarge {
        index: usize,
        r_squared: u64,
        limit: u64,
    },

    #[error("polygon {index}: needs at least 3 vertices, got {got}")]
    TooFewVertices { index: usize, got: usize },

    #[error("polygon {index}: vertex ({x}, {y}) outside grid [0, {max}]")]
    VertexOutOfRange { index: usize, x: u32, y: u32, max: u32 },

    #[error("polygon {index}: not strictly convex at vertex ({x}, {y})")]
    NonConvex { index: usize, x: u32, y: u32 },

    #[error("polygon {index}: degenerate (zero signed area)")]
    DegeneratePolygon { index: usize },

    #[error("scene has no feasible grid point")]
    EmptyFeasibleRegion,
}

/// Oracle construction failures.
#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Arith(#[from] ArithError),

    #[error("oracle needs {required} qubits but the simulator caps at {available}")]
    Capacity { required: usize, available: usize },

    #[error("{what}: register needs width >= {needed}, got {got}")]
    WidthShortfall {
        what: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("interval bounds inverted: a1={a1} > a2={a2}")]
    InvertedInterval { a1: u64, a2: u64 },
}
