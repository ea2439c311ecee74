use thiserror::Error;

/// Errors raised by the exact geometry pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational {0:?}: expected an integer or \"num/den\"")]
    MalformedRational(String),
    #[error("side lengths must be positive")]
    NonPositiveSide,
    #[error("side lengths violate the strict triangle inequality")]
    TriangleInequalityViolated,
    #[error("barycentric coordinates must not all be zero")]
    ZeroPoint,
    #[error("point has zero coordinate sum (at infinity)")]
    PointAtInfinity,
    #[error("point is not normalized (coordinate sum must be 1)")]
    NotNormalized,
    #[error("line coefficients must not all be zero")]
    ZeroLine,
    #[error("points are projectively coincident")]
    CoincidentPoints,
    #[error("lines are projectively coincident")]
    CoincidentLines,
    #[error("scale factor k must be nonzero")]
    ZeroK,
    #[error("cevian through vertex {vertex} degenerates (zero denominator coordinate)")]
    DegenerateCevian { vertex: char },
    #[error("the pedal cevians AA', BB', CC' are not concurrent")]
    PedalCeviansNotConcurrent,
    #[error("the cevians AA'', BB'', CC'' are not concurrent")]
    NotConcurrent,
    #[error("Euler line is undefined for an equilateral triangle")]
    EquilateralEulerLineUndefined,
    #[error("{0} is not an excenter")]
    NotAnExcenter(&'static str),
    #[error("unknown center name {0:?}")]
    UnknownCenter(String),
}

impl GeomError {
    /// Stable snake_case identifier for machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            GeomError::DivisionByZero => "division_by_zero",
            GeomError::MalformedRational(_) => "malformed_rational",
            GeomError::NonPositiveSide => "non_positive_side",
            GeomError::TriangleInequalityViolated => "triangle_inequality_violated",
            GeomError::ZeroPoint => "zero_point",
            GeomError::PointAtInfinity => "point_at_infinity",
            GeomError::NotNormalized => "not_normalized",
            GeomError::ZeroLine => "zero_line",
            GeomError::CoincidentPoints => "coincident_points",
            GeomError::CoincidentLines => "coincident_lines",
            GeomError::ZeroK => "zero_k",
            GeomError::DegenerateCevian { .. } => "degenerate_cevian",
            GeomError::PedalCeviansNotConcurrent => "pedal_cevians_not_concurrent",
            GeomError::NotConcurrent => "not_concurrent",
            GeomError::EquilateralEulerLineUndefined => "equilateral_euler_line_undefined",
            GeomError::NotAnExcenter(_) => "not_an_excenter",
            GeomError::UnknownCenter(_) => "unknown_center",
        }
    }
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
