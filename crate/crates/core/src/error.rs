use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no multiplicity profile")]
    ZeroPolynomial,
    #[error("not a K3 Weierstrass datum: {0}")]
    NotK3Datum(String),
    #[error("non-minimal Weierstrass datum at {place}: v(a) >= 4 and v(b) >= 6; rescale (x, y) -> (x/u^2, y/u^3)")]
    NonMinimal { place: String },
    #[error("inconsistent Weierstrass datum: valuations (v_a, v_b, v_delta) = {0}")]
    InconsistentValuations(String),
    #[error("not a valid 2-elementary datum: {0}")]
    InvalidTwoElementary(String),
    #[error("inconsistent configuration: {0}")]
    InconsistentConfiguration(String),
    #[error("action {action} is incompatible with fiber {shape}")]
    IncompatibleAction { shape: String, action: String },
    #[error("no consistent local-action labeling: {0}")]
    NoConsistentLabeling(String),
    #[error("local-action labeling is ambiguous: {0}")]
    AmbiguousLabeling(String),
    #[error("singular fiber: {0}")]
    SingularFiber(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parameters violate family conditions: {0}")]
    ConditionViolated(String),
    #[error("no classification row matches: {0}")]
    NoMatchingRow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
