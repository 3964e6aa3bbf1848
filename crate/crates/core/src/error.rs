use thiserror::Error;

use crate::genericity::Violation;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),
    #[error("invalid gauge: {0}")]
    GaugeInvalid(String),
    #[error("basis family {0} needs a pencil parameter mu")]
    MissingPencil(&'static str),
    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("basis matrix is not triangular with nonzero pivots")]
    SingularBasis,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-generic parameters: {}", render_violations(.0))]
    Genericity(Vec<Violation>),
    #[error("{0}")]
    Parse(String),
}

fn render_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
