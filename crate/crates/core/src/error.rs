use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("enumeration budget exceeded: {required} candidates, limit {limit}")]
    Budget { required: String, limit: u128 },
    #[error("missing dependency value for {0}")]
    Dependency(String),
    #[error("under-determined interpolation: {0}")]
    UnderDetermined(String),
    #[error("inconsistent interpolation: {0}")]
    Inconsistent(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

/// Ceiling on the number of candidate tuples an exhaustive oracle may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_candidates: u128,
}

impl Budget {
    pub const DEFAULT_CANDIDATES: u128 = 100_000_000;

    pub fn new(max_candidates: u128) -> Self {
        Budget { max_candidates }
    }

    pub fn unlimited() -> Self {
        Budget { max_candidates: u128::MAX }
    }

    /// Refuses work whose candidate count exceeds the ceiling.
    pub fn check(&self, required: &BigUint) -> Result<()> {
        if *required > BigUint::from(self.max_candidates) {
            return Err(Error::Budget { required: required.to_string(), limit: self.max_candidates });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_CANDIDATES)
    }
}
