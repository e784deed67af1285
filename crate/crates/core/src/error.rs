use thiserror::Error;

/// Errors raised while building or transforming finite structures.
///
/// Axiom violations of orthostructures are not errors: they are collected as
/// [`crate::report::Report`] entries with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} out of range for a carrier of size {1}")]
    OutOfRange(usize, usize),
    #[error("order is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("order is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("order is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("pair ({0}, {1}) has no {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("poset has no {0} element")]
    NotBounded(&'static str),
    #[error("{lo} is not below {hi}")]
    BadInterval { lo: usize, hi: usize },
    #[error("{what} of size {size} exceeds the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("not an orthomodular poset ({0})")]
    NotAnOmp(String),
    #[error("not an orthoalgebra ({0})")]
    NotAnOa(String),
    #[error("meet of {0} and {1} does not exist")]
    MissingMeet(usize, usize),
    #[error("precondition failed: {reason}")]
    PreconditionFailed { reason: String, witness: Vec<usize> },
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("empty carrier (only non-empty sets are objects)")]
    EmptySet,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i < n {
        Ok(())
    } else {
        Err(Error::OutOfRange(i, n))
    }
}
