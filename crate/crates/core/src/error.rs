use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivByZero,
    #[error("square root of a negative element")]
    NegativeRadicand,
    #[error("one-sided limits at t = 0 disagree")]
    DiscontinuousAtZero,
    #[error("pole at t = 0")]
    PoleAtZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAt,
    #[error("degree {0} exceeds the identity-testing bound")]
    DegreeBound(usize),
    #[error("rescaling is undefined at t = 0")]
    DegenerateRescale,
    #[error("point lies in the opposite affine chart (x0 < 0)")]
    WrongChart,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero vector does not define a projective object")]
    ZeroVector,
    #[error("matrix is singular")]
    Singular,
    #[error("hyperplane does not meet the domain")]
    OutsideDomain,
    #[error("hyperplanes do not intersect transversely")]
    NoTransverseIntersection,
    #[error("reflection in a lightlike hyperplane is undefined")]
    LightlikeMirror,
    #[error("reflection in a degenerate half-pipe hyperplane is not unique")]
    AmbiguousHalfPipeReflection,
    #[error("matrix does not preserve the Minkowski form")]
    NotLorentz,
    #[error("vector is not spacelike")]
    NotSpacelike,
    #[error("matrix does not preserve the form")]
    NotIsometry,
    #[error("element is the identity")]
    TrivialElement,
    #[error("parameter does not vanish at t = 0")]
    NotCollapsing,
    #[error("vertex candidate outside the affine chart: {0}")]
    ChartViolation(String),
    #[error("map does not permute the half-space system")]
    NotASymmetry,
    #[error("t = {0} is outside the validity interval")]
    OutOfInterval(String),
    #[error("point is outside the upper half-space chart")]
    OutOfChart,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
