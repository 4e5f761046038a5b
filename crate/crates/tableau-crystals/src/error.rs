use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid {family}: {reason}")]
    Invalid { family: &'static str, reason: String },

    #[error("entry {entry} exceeds the variable bound n = {n}")]
    BoundViolation { entry: u32, n: usize },

    #[error("operation not supported for family {0}")]
    UnsupportedFamily(&'static str),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("inversion failed: {0}")]
    InversionFailure(String),

    #[error("structural failure in component keyed by {key}: {reason}")]
    StructuralFailure { key: String, reason: String },

    #[error("not a highest weight element: {0}")]
    NotHighestWeight(String),

    #[error("polynomial is not symmetric: leading exponent {0:?} is not a partition")]
    NonSymmetric(Vec<u32>),

    #[error("route {0} is not available for this family")]
    RouteUnavailable(&'static str),

    #[error("bijection target violated: {0}")]
    BijectionViolation(String),

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Invalid { .. } => "invalid",
            Error::BoundViolation { .. } => "bound_violation",
            Error::UnsupportedFamily(_) => "unsupported_family",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::InversionFailure(_) => "inversion_failure",
            Error::StructuralFailure { .. } => "structural_failure",
            Error::NotHighestWeight(_) => "not_highest_weight",
            Error::NonSymmetric(_) => "non_symmetric",
            Error::RouteUnavailable(_) => "route_unavailable",
            Error::BijectionViolation(_) => "bijection_violation",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(family: &'static str, reason: impl Into<String>) -> Result<T> {
    Err(Error::Invalid { family, reason: reason.into() })
}
