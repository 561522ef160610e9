use thiserror::Error;

use crate::arc::Arc;
use crate::quiver::FiniteInd;

/// Largest absolute coordinate accepted at the public boundaries (parsing,
/// configuration files, constructors). Internal arithmetic runs in `i64`, so
/// sums and differences of a handful of such values cannot overflow.
pub const COORD_LIMIT: i64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index must be non-negative, got {0}")]
    NegativeIndex(i64),

    #[error("coordinate {0} outside the supported range |x| <= 2^31")]
    OutOfRange(i64),

    #[error("({a},{b}) is not an arc: endpoints must satisfy a <= b - 2")]
    InvalidArc { a: i64, b: i64 },

    #[error("Ext between two infinite arcs {0} and {1} has no crossing interpretation (the Hom spaces are not symmetric)")]
    TwoInfiniteArcs(Arc, Arc),

    #[error("Hom({from}, {to}) vanishes; no nonzero morphism to compose")]
    VanishingHom { from: FiniteInd, to: FiniteInd },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("tower has not stabilized within {len} terms (checked the last {window}); increase the truncation")]
    Unstable { len: usize, window: usize },

    #[error("invalid tower: {0}")]
    InvalidTower(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("malformed direct system: {0}")]
    MalformedSystem(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(x: i64) -> Result<i64> {
    if x.abs() > COORD_LIMIT {
        Err(Error::OutOfRange(x))
    } else {
        Ok(x)
    }
}
