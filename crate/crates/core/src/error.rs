use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, not square")]
    NonSquare { rows: usize, cols: usize },

    #[error("variable a{} has no assigned value", .0 + 1)]
    UnboundVariable(usize),

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("edge {0} has a non-homogeneous label; homogenize first")]
    NonHomogeneousLabel(usize),

    #[error("edge {0} lies on a face but carries no label")]
    MissingLabel(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what}: size {size} exceeds the limit {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("graph is not generic: every maximal minor of M^ext vanishes identically")]
    NotGeneric,

    #[error("no total edge-injective function exists")]
    NoneExists,

    #[error("no admissible 3-coloring of the orientation exists")]
    NotFound,

    #[error("face set {0:?} is not contractible")]
    NotContractible(Vec<usize>),

    #[error("minimal contractible face sets {first:?} and {second:?} share an edge")]
    SharedEdgeViolation {
        first: Vec<usize>,
        second: Vec<usize>,
    },

    #[error("labels are in special position at stage {stage}: {detail}")]
    SpecialPosition { stage: usize, detail: String },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("interior edge between points {0} and {1} is horizontal; apply a rotation first")]
    HorizontalEdge(usize, usize),

    #[error("triangle {0} is degenerate")]
    Degenerate(usize),

    #[error("rotation ({x0}, {y0}) makes line {index} horizontal")]
    BadRotation {
        x0: String,
        y0: String,
        index: usize,
    },

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("enumeration methods disagree: {0}")]
    EnumerationMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
