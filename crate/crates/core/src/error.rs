use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {arg} outside domain: {what}")]
    Domain { arg: f64, what: &'static str },
    #[error("pole of gamma at {0}")]
    Pole(f64),
    #[error("order {0} not supported here")]
    Order(f64),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("divergent: {0}")]
    Divergent(String),
    #[error("no convergence (estimate {estimate}, error {error})")]
    NonConvergence { estimate: f64, error: f64 },
    #[error("unstable extrapolation (estimate {estimate})")]
    Unstable { estimate: f64 },
    #[error("singular locus")]
    SingularLocus,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
