use thiserror::Error;

use crate::polygon::Diagonal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("degenerate diagonal: both endpoints reduce to vertex {0}")]
    DegenerateDiagonal(u32),

    #[error("diagonal {0} is not admissible")]
    NotAdmissible(Diagonal),

    #[error("not a simple minded system: {0}")]
    NotSms(String),

    #[error("no extension of {target} by {through}")]
    NoExtension { target: Diagonal, through: Diagonal },

    #[error("weight {0} is not supported here; this operation needs weight >= 2")]
    UnsupportedWeight(u32),

    #[error("tilt rule does not determine this move: {0}")]
    TiltRuleIncomplete(String),

    #[error("inconsistent closure data: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
