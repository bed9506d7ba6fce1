use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("EigenvalueBelowThreshold: smallest Seidel eigenvalue is below -beta")]
    EigenvalueBelowThreshold,
    #[error("BelowThreshold: lambda is below sqrt(2+sqrt(5))")]
    BelowThreshold,
    #[error("Disconnected: graph has {components} components")]
    Disconnected { components: usize },
    #[error("NotCubic: graph is not 3-regular")]
    NotCubic,
    #[error("WrongOrder: order {0} is not of the form 4n'+2 with n' >= 2")]
    WrongOrder(usize),
    #[error("DimensionTooSmall: target dimension {target} is below certified rank {certified}")]
    DimensionTooSmall { target: usize, certified: usize },
    #[error("FactorizationResidual: numeric factorization missed tolerance ({residual:e} > {tolerance:e})")]
    FactorizationResidual { residual: f64, tolerance: f64 },
    #[error("AmbiguousSign: inner product of lines {0} and {1} is indistinguishable from zero")]
    AmbiguousSign(usize, usize),
    #[error("step budget of {0} exhausted")]
    BudgetExhausted(usize),
    #[error("invalid algebraic number: {0}")]
    InvalidAlgebraic(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}
