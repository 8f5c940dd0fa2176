use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands carry different radicands ({0} vs {1})")]
    MixedRadicand(u64, u64),
    #[error("radicand too large to certify a squarefree decomposition")]
    RadicandTooLarge,
    #[error("point set is degenerate (does not span two dimensions)")]
    Degenerate,
    #[error("origin is not interior to the polygon")]
    OriginNotInterior,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(i64),
    #[error("enumeration radius {given} is below the certified radius {required}")]
    RadiusTooSmall { given: i64, required: i64 },
    #[error("maximal-pattern polygon with {0} edges cannot be lattice-free")]
    NotTriangleOrQuad(usize),
    #[error("barycentric frame is degenerate")]
    DegenerateFrame,
    #[error("circumscription parameters are singular")]
    SingularParams,
    #[error("polygon is not symmetric about the origin")]
    NotSymmetric,
    #[error("alpha must satisfy 0 <= alpha < 1")]
    AlphaOutOfRange,
    #[error("refinement budget exceeded before reaching the requested precision")]
    EpsTooSmall,
    #[error("polygon is not a tiling parallelogram")]
    NotTilingParallelogram,
    #[error("bounded search exhausted; this indicates an internal bug")]
    SearchExhausted,
    #[error("lattice width out of the admissible range")]
    WidthOutOfRange,
    #[error("covering minima ratio out of the admissible range")]
    RatioOutOfRange,
    #[error("construction parameter out of range: {0}")]
    ParamOutOfRange(&'static str),
    #[error("slack is zero but no structural equality match was found")]
    CertificationFailed,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
    #[error("invalid input: {0}")]
    Invalid(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
