//! Distance-regular graphs from intersection arrays, their q-distance and
//! generalized distance spectra, and an explicit-graph oracle that recomputes
//! everything by brute force.
//!
//! The analytic side ([`drg`], [`qdistance`]) never builds an `n × n` matrix.
//! The oracle side ([`graph`], [`family`], [`oracle`]) never looks at an
//! intersection array except to compare against it.

pub mod catalog;
pub mod checks;
pub mod drg;
pub mod family;
pub mod graph;
pub mod oracle;
pub mod qdistance;
pub mod search;

pub use catalog::{catalog, CatalogEntry, Source};
pub use checks::{CheckOutcome, CheckRegistry, Evaluation, Status, Subject};
pub use drg::{ClassicalParameters, IntersectionArray, SpectrumOfGamma, StandardSequence};
pub use family::{FamilyDescriptor, FamilyRegistry};
pub use graph::{DistanceMatrix, Graph};
pub use qdistance::{ClassicalTypeReport, CoefficientSequence, GeneralizedSpectrum, QCoefficients};
pub use search::{parse_q_grid, parse_q_range, search_q, SearchPoint};

use drgq_exact::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid intersection array: {0}")]
    InvalidArray(String),
    #[error("k_{index} = {value} is not a positive integer")]
    NonIntegralCount { index: usize, value: String },
    #[error("invalid classical parameters: {0}")]
    InvalidClassicalParameters(String),
    #[error("multiplicity of eigenvalue {theta} is not a positive integer")]
    NonIntegralMultiplicity { theta: String },
    #[error("trace identity failed: {0}")]
    TraceViolation(String),
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("coefficient sequence must have length {expected}, found {found}")]
    CoefficientLength { expected: usize, found: usize },
    #[error("invalid coefficient sequence: {0}")]
    InvalidCoefficients(String),
    #[error("theta equals the valency")]
    ThetaEqualsValency,
    #[error("value is not an eigenvalue of the array")]
    NotAnEigenvalue,
    #[error("certificate failed: {clause}")]
    CertificateFailure { clause: String },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParameters(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("matrix order {order} exceeds the limit {limit} (set DRGQ_ORDER_LIMIT to raise it)")]
    OrderLimitExceeded { order: usize, limit: usize },
    #[error("matrix does not have constant row sums")]
    NotConstantRowSum,
    #[error("matrix has {n_pos} positive eigenvalues, expected exactly one")]
    NotOnePositive { n_pos: usize },
    #[error("Gram matrix is not positive semidefinite: {0}")]
    WitnessNotPsd(String),
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error("search size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid syntax: {0}")]
    Syntax(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidArray(_) => "invalid-array",
            Error::NonIntegralCount { .. } => "non-integral-count",
            Error::InvalidClassicalParameters(_) => "invalid-classical-parameters",
            Error::NonIntegralMultiplicity { .. } => "non-integral-multiplicity",
            Error::TraceViolation(_) => "trace-violation",
            Error::ZeroQ => "zero-q",
            Error::CoefficientLength { .. } => "coefficient-length",
            Error::InvalidCoefficients(_) => "invalid-coefficients",
            Error::ThetaEqualsValency => "theta-equals-valency",
            Error::NotAnEigenvalue => "not-an-eigenvalue",
            Error::CertificateFailure { .. } => "certificate-failure",
            Error::InvalidFamilyParameters(_) => "invalid-family-parameters",
            Error::UnknownFamily(_) => "unknown-family",
            Error::InvalidGraph(_) => "invalid-graph",
            Error::Disconnected => "disconnected",
            Error::OrderLimitExceeded { .. } => "order-limit-exceeded",
            Error::NotConstantRowSum => "not-constant-row-sum",
            Error::NotOnePositive { .. } => "not-one-positive",
            Error::WitnessNotPsd(_) => "witness-not-psd",
            Error::PreconditionNotMet(_) => "precondition-not-met",
            Error::SizeLimitExceeded(_) => "size-limit-exceeded",
            Error::Parse(_) => "parse",
            Error::Syntax(_) => "syntax",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
