use thiserror::Error;

/// Errors raised by kernel constructions.
///
/// Every variant corresponds to a violated precondition; none of them is
/// produced by a construction whose preconditions hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("invalid rational literal `{0}`")]
    BadLiteral(String),
    #[error("homogeneous vector must have a nonzero coordinate")]
    ZeroVector,
    #[error("{0}: elements are not apart")]
    NotApart(&'static str),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("center of projection lies on the {0} line")]
    CenterOnLine(&'static str),
    #[error("point does not lie on the domain of the projectivity")]
    OffDomain,
    #[error("codomain of the first map differs from the domain of the second")]
    ChainMismatch,
    #[error("domain and codomain are the same line")]
    SameLine,
    #[error("projectivity is perspective (the common point is fixed)")]
    Perspective,
    #[error("no sample point is moved, so the map cannot be shown to differ from the identity")]
    NoMovedPoint,
    #[error("projectivity is not an involution")]
    NotInvolution,
    #[error("point is not fixed by the projectivity")]
    NotFixed,
    #[error("points {0} are collinear")]
    DegenerateFive(String),
    #[error("point does not lie on the conic")]
    NotOnConic,
    #[error("line is the tangent at the given point")]
    TangentLine,
    #[error("tangents at three conic points are concurrent")]
    TangentsConcurrent,
    #[error("singular matrix")]
    Singular,
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
