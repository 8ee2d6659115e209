use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input where an invertible value is required")]
    ZeroInput,
    #[error("pfaffian of odd order {0}")]
    OddOrder(usize),
    #[error("interpolation system is singular")]
    SingularSystem,
    #[error("order {n} exceeds the cap {cap} for {what}")]
    CapExceeded { what: String, n: usize, cap: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("object is not extreme: {0}")]
    NotExtreme(String),
    #[error("statistic {stat} does not apply to {object}")]
    TypeMismatch { stat: String, object: String },
    #[error("degenerate q: sigma(q^2) or sigma(q^4) vanishes")]
    DegenerateQ,
    #[error("pole hit while evaluating {0}")]
    PoleHit(String),
    #[error("repeated variables in a bialternant")]
    RepeatedVariables,
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
}

pub type Result<T> = std::result::Result<T, Error>;
