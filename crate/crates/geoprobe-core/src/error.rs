use thiserror::Error;

/// Errors raised by constructions and scene generation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
    #[error("degenerate triangle: zero signed area")]
    DegenerateTriangle,
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),
    #[error("plane normal must have unit length")]
    NonUnitNormal,
    #[error("lines are parallel ({})", if *coincident { "coincident" } else { "disjoint" })]
    ParallelLines { coincident: bool },
    #[error("point does not lie on the circle/sphere surface")]
    PointNotOnSurface,
    #[error("side lengths violate the strict triangle inequality")]
    TriangleInequality,
    #[error("parameter out of domain: {0}")]
    OutOfDomain(String),
    #[error("triangle is not strictly acute")]
    NonAcuteTriangle,
    #[error("shapes do not intersect transversally")]
    NotTransversal,
    #[error("scene generation exhausted after {attempts} attempts ({kind})")]
    GenerationExhausted { kind: String, attempts: u32 },
}

pub type Result<T> = std::result::Result<T, GeomError>;
