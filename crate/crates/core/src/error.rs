use thiserror::Error;

/// Errors raised by poset construction and the solvers.
///
/// Element labels are carried as their `Debug` rendering so the error type
/// stays independent of the label type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    #[error("edge endpoint {0} is not an element")]
    UnknownElement(String),
    #[error("order relation has a cycle through {0} and {1}")]
    CycleDetected(String, String),
    #[error("element {0} is not in the carrier")]
    ElementNotInCarrier(String),
    #[error("set is not a subset of the carrier (offending element {0})")]
    NotASubset(String),
    #[error("vertex set is not a subset of the left side (offending vertex {0})")]
    NotASubsetOfLeft(String),
    #[error("instance of size {size} exceeds the {cap_name} cap of {cap}")]
    InstanceTooLarge {
        size: usize,
        cap: usize,
        cap_name: &'static str,
    },
    #[error("cover of size {given} is not a smallest chain cover (minimum is {minimum})")]
    NotASmallestCover { given: usize, minimum: usize },
    #[error("cover is not a valid chain cover")]
    InvalidCover,
    #[error("expected {expected} elements, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("input sequence is empty")]
    EmptyInput,
    #[error("duplicate value {0}")]
    DuplicateValue(i64),
    #[error("left and right vertex sets overlap at {0}")]
    SidesOverlap(String),
    #[error("{0} vertex set is empty")]
    EmptySide(&'static str),
    #[error("edge ({0}, {1}) does not run left to right")]
    BadEdge(String, String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn label<T: std::fmt::Debug>(t: &T) -> String {
    format!("{t:?}")
}
