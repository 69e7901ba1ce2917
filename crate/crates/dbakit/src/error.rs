use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("set has width {got}, expected {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),
    #[error("incidence matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error(
        "candidate space 2^{objects} * 2^{attributes} = {candidates} exceeds the cap of {cap}"
    )]
    CandidateCapExceeded {
        objects: usize,
        attributes: usize,
        candidates: u128,
        cap: u64,
    },
    #[error("carrier of {carrier} elements exceeds the operation-table cap of {cap}")]
    CarrierCapExceeded { carrier: usize, cap: usize },
    #[error("map entry {value} at position {position} is out of range for size {size}")]
    MapOutOfRange {
        position: usize,
        value: usize,
        size: usize,
    },
    #[error("map has length {got}, expected {expected}")]
    MapLengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("table entry {value} out of range for carrier of size {size}")]
    TableEntryOutOfRange { value: usize, size: usize },
    #[error("table has {got} entries, expected {expected}")]
    TableSizeMismatch { expected: usize, got: usize },
    #[error("generator set must be non-empty")]
    EmptyGenerator,
    #[error("iterated meet and join are undefined on the empty subset")]
    EmptySubset,
    #[error("filter and ideal must be disjoint")]
    NotDisjoint,
    #[error("subset is not a valid {0}")]
    InvalidSubset(&'static str),
    #[error("subset is not proper")]
    NotProper,
    #[error("carrier is not closed under the operations: {0}")]
    NotClosed(String),
    #[error("not a Boolean algebra: {0}")]
    NotBoolean(String),
    #[error("double Boolean algebra is not fully contextual")]
    NotFullyContextual,
    #[error("double Boolean algebra is not pure")]
    NotPure,
    #[error("map is not an isomorphism between the pure parts: {0}")]
    NotPureIso(String),
    #[error("map is not a dBa homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("relation or its converse is not continuous: {0}")]
    NotCtscr(String),
    #[error("not a Stone context: {0}")]
    NotStone(String),
    #[error("pair of maps is not a CTSCR-homeomorphism: {0}")]
    NotHomeomorphism(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
