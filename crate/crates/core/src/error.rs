use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input or a violated precondition.
    Usage,
    /// The data admits no consistent mathematical object.
    Inconsistent,
    /// A configured size bound was exceeded.
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("jet of order 0 carries no derivative information")]
    NoDerivative,
    #[error("composition needs an inner jet with zero constant term")]
    NonzeroConstantTerm,
    #[error("division by a flat jet")]
    DivisionByFlat,
    #[error("quotient is not a jet: {0}")]
    NotAJet(String),
    #[error("constant term {0} has no exact rational root")]
    ExactRootUnavailable(String),
    #[error("even root of negative constant term {0}")]
    NoRealRoot(String),
    #[error("exponents {m} and {n} are not coprime")]
    CoprimeRequired { m: u64, n: u64 },
    #[error("exponents must be positive")]
    ZeroExponent,
    #[error("inconsistent pair: {0}")]
    InconsistentPair(String),
    #[error("sign of the root is not determined by even-exponent data")]
    AmbiguousSign,
    #[error("no Frobenius number: {0} represents every non-negative integer")]
    NoFrobenius(u64),
    #[error("{r} is below the threshold {threshold}")]
    BelowThreshold { r: u64, threshold: u64 },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degenerate curve: both components are constant")]
    DegenerateCurve,
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("inconsistent samples: {0}")]
    InconsistentSamples(String),
    #[error("sample grids differ")]
    GridMismatch,
    #[error("invalid sample series: {0}")]
    InvalidSeries(String),
    #[error("series too short: {0}")]
    TooShort(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InconsistentPair(_) | Error::InconsistentSamples(_) => ErrorClass::Inconsistent,
            Error::ResourceLimit(_) | Error::DegreeLimit { .. } => ErrorClass::ResourceLimit,
            _ => ErrorClass::Usage,
        }
    }

    /// Stable snake_case tag for machine-readable error lines.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::OrderMismatch { .. } => "order_mismatch",
            Error::NoDerivative => "no_derivative",
            Error::NonzeroConstantTerm => "nonzero_constant_term",
            Error::DivisionByFlat => "division_by_flat",
            Error::NotAJet(_) => "not_a_jet",
            Error::ExactRootUnavailable(_) => "exact_root_unavailable",
            Error::NoRealRoot(_) => "no_real_root",
            Error::CoprimeRequired { .. } => "coprime_required",
            Error::ZeroExponent => "zero_exponent",
            Error::InconsistentPair(_) => "inconsistent_pair",
            Error::AmbiguousSign => "ambiguous_sign",
            Error::NoFrobenius(_) => "no_frobenius",
            Error::BelowThreshold { .. } => "below_threshold",
            Error::Syntax { .. } => "syntax",
            Error::DegreeLimit { .. } => "degree_limit",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::DegenerateCurve => "degenerate_curve",
            Error::InvalidDomain(_) => "invalid_domain",
            Error::ResourceLimit(_) => "resource_limit",
            Error::InconsistentSamples(_) => "inconsistent_samples",
            Error::GridMismatch => "grid_mismatch",
            Error::InvalidSeries(_) => "invalid_series",
            Error::TooShort(_) => "too_short",
            Error::Malformed(_) => "malformed",
        }
    }
}
