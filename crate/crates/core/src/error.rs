use thiserror::Error;

use crate::degree::Kind;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("operation `{op}` is not available for {kind} degree functions")]
    UnsupportedClassification { op: &'static str, kind: Kind },

    #[error("the quotient is not artinian; pass an explicit degree bound")]
    NonArtinian,

    #[error("field hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("reduction exceeded {0} steps")]
    StepLimit(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
