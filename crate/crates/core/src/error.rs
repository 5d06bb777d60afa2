use alloc::string::String;

/// Errors raised anywhere in the library.
///
/// Variants are grouped by [`ErrorClass`] so front ends can map them to exit
/// codes without matching on every case.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("not a subspace: {0}")]
    NotASubspace(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("gram matrix is singular")]
    SingularGram,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("radical computation failed validation: {0}")]
    RadicalFailure(String),
    #[error("algebra carries no quiver presentation")]
    NoPresentation,
    #[error("length bound {bound} too small: path {path} does not reduce to zero")]
    BoundTooSmall { bound: usize, path: String },
    #[error("relation is not admissible: {0}")]
    NonAdmissible(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("path basis cannot be arranged to contain a socle basis: {0}")]
    SoclePathFailure(String),
    #[error("bilinear form is degenerate: {0}")]
    DegenerateForm(String),
    #[error("map is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("a symmetric form is required: {0}")]
    NotSymmetric(String),
    #[error("Külshammer ideal routes disagree at level {0}")]
    RouteMismatch(usize),
    #[error("not an ideal: {0}")]
    NotIdeal(String),
    #[error("isomorphism search bound exceeded: {0}")]
    SearchBoundExceeded(String),
    #[error("ring is not local")]
    NotLocal,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

/// Coarse classification of [`Error`] values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad or inconsistent input.
    Validation,
    /// A search or length bound was exhausted.
    Resource,
    /// An internal consistency check failed; indicates a bug.
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::BoundTooSmall { .. } | Error::SearchBoundExceeded(_) => ErrorClass::Resource,
            Error::RouteMismatch(_) | Error::InvariantViolation(_) | Error::RadicalFailure(_) => {
                ErrorClass::Internal
            }
            _ => ErrorClass::Validation,
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
