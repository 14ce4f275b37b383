use thiserror::Error;

use crate::limits::LimitReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which sweep budget ran out before a limit was detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepBound {
    KMax(usize),
    RMin(i64),
}

impl std::fmt::Display for SweepBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepBound::KMax(k) => write!(f, "k_max = {k}"),
            SweepBound::RMin(r) => write!(f, "R_min = {r}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),

    #[error("node {} out of range for rank {rank}", .node + 1)]
    UnknownNode { node: usize, rank: usize },

    #[error("not-an-A-monomial: residual {0}")]
    NotAnAMonomial(String),

    #[error("highest weight {0} is not dominant")]
    NotDominant(String),

    #[error("fm-inconsistent at monomial {0}")]
    FmInconsistent(String),

    #[error("step-cap-exceeded after {0} steps")]
    StepCapExceeded(usize),

    #[error("normalization-not-in-cone: degree of {0} is outside the cone")]
    NormalizationNotInCone(String),

    #[error("degree of {0} is outside the cone")]
    OutsideCone(String),

    #[error("non-unit-leading-term: {0}")]
    NonUnitLeadingTerm(String),

    #[error("factorization-failed: mixed term {0}")]
    FactorizationFailed(String),

    #[error("flip-left-cone: {0}")]
    FlipLeftCone(String),

    #[error("series live in different cones or truncations")]
    IncompatibleSeries,

    #[error("closed form not available: {0}")]
    ClosedFormUnavailable(String),

    #[error("no-limit-detected({bound})")]
    NoLimitDetected {
        bound: SweepBound,
        report: Box<LimitReport>,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
