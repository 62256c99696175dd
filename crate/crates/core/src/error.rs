use thiserror::Error;

/// Errors shared across the crate. Operations that merely *fail* (a
/// non-minimal family, an unreachable diversity target) report that through
/// their return value; `Error` is reserved for contract violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {n} out of range (1..=64)")]
    GroundSetSize { n: u32 },

    #[error("uniformity k={k} out of range for ground set [{n}]")]
    Uniformity { k: u32, n: u32 },

    #[error("element {element} out of range for ground set [{n}]")]
    ElementOutOfRange { element: u32, n: u32 },

    #[error("set has {got} elements, expected {expected}")]
    WrongCardinality { got: u32, expected: u32 },

    #[error("ground sets differ: [{left}] vs [{right}]")]
    GroundSetMismatch { left: u32, right: u32 },

    #[error("family is empty")]
    EmptyFamily,

    #[error("family contains the empty set; no transversal exists")]
    Uncoverable,

    #[error("shift indices must satisfy i < j, got ({i}, {j})")]
    InvalidShiftPair { i: u32, j: u32 },

    #[error("{what} = {value} outside required range {range}")]
    OutOfRange {
        what: &'static str,
        value: String,
        range: String,
    },

    #[error("regime violation: {0}")]
    Regime(String),

    #[error("family is not intersecting")]
    NotIntersecting,

    #[error("family member contains element 1")]
    ContainsOne,

    #[error("switch context invalid: {0}")]
    BadSwitchContext(String),

    #[error("switch target invalid: {0}")]
    BadSwitchTarget(String),

    #[error("not a permutation of [{n}]")]
    BadPermutation { n: u32 },

    #[error("could not reach diversity {target} within {attempts} seeded attempts")]
    DiversityInfeasible { target: u64, attempts: u32 },

    #[error("numeric overflow: {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn out_of_range(
        what: &'static str,
        value: impl std::fmt::Display,
        range: impl Into<String>,
    ) -> Self {
        Error::OutOfRange {
            what,
            value: value.to_string(),
            range: range.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
