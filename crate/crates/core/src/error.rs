use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("inputs coincide projectively")]
    IdenticalInputs,
    #[error("the five points do not determine a smooth conic")]
    DegenerateConic,
    #[error("conic form is not signature-normalized")]
    NotNormalized,
    #[error("point {0} does not lie on the conic")]
    PointNotOnConic(u8),
    #[error("point {0} coincides with the pencil center")]
    CoincidentWithCenter(u8),
    #[error("points {0} and {1} span the same line through the center")]
    SharedDirection(u8, u8),
    #[error("input point is a base point of the quadratic transformation")]
    BasePointInput,
    #[error("base points of the quadratic transformation are collinear")]
    CollinearBase,
    #[error("chart line passes through point {0}")]
    ChartThroughPoint(u8),
    #[error("expected {expected} points, got {got}")]
    WrongArity { expected: &'static str, got: usize },
    #[error("label {0} out of range")]
    BadLabel(u8),
    #[error("linear system has null space of dimension {got}, expected {expected}")]
    UnexpectedRank { expected: usize, got: usize },
    #[error("form does not lie in the pencil")]
    NotInPencil,
    #[error("nodal cubic degenerates to a cusp at the node")]
    Cusp,
    #[error("cubic is not singular at the designated node")]
    NotSingularAtNode,
    #[error("cubic is reducible")]
    Reducible,
    #[error("point {0} is not on the cubic")]
    PointOffCubic(u8),
    #[error("point set is not in generic position")]
    NonGeneric,
    #[error("fingerprint does not match any known class")]
    UnknownClass,
    #[error("pencil does not match any known zone")]
    UnknownZone,
    #[error("more than one simultaneous degeneracy")]
    MultipleDegeneracies,
    #[error("configuration is not on the requested wall")]
    NotOnWall,
    #[error("conic-diagram is not realizable")]
    NonRealizableDiagram,
    #[error("no clean crossing path found")]
    PathBlocked,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("golden table mismatch: {0}")]
    GoldenMismatch(String),
}
