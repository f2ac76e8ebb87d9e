use thiserror::Error;

use crate::family::SetFamily;

/// Errors reported by covering construction, table handling, and inversion.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("universe must not be empty")]
    EmptyUniverse,

    #[error("duplicate element name {name:?} in universe")]
    DuplicateElement { name: String },

    #[error(
        "invalid element name {name:?}: names must be nonempty, free of whitespace and ':', \
         and must not start with '#'"
    )]
    InvalidElementName { name: String },

    #[error("unknown element {name:?}")]
    UnknownElement { name: String },

    #[error("block at position {index} is empty")]
    EmptyBlock { index: usize },

    #[error("set family has no blocks")]
    EmptyFamily,

    #[error("blocks do not cover the universe: missing {missing:?}")]
    NotACovering {
        missing: Vec<String>,
        /// The offending family, when one was materialized (e.g. by reconstruction).
        recovered: Option<Box<SetFamily>>,
    },

    #[error("universes differ: {detail}")]
    UniverseMismatch { detail: String },

    #[error("universe of {size} elements exceeds the cap of {cap} for this operation")]
    UniverseTooLarge { size: usize, cap: usize },

    #[error("window size {size} is outside 0..={max}")]
    InvalidWindow { size: usize, max: usize },

    #[error("window mismatch: {left:?} vs {right:?}")]
    WindowMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("degree table is incomplete: {detail}")]
    IncompleteTable { detail: String },

    #[error("duplicate table entry for {{{subset}}}")]
    DuplicateEntry { subset: String },

    #[error("table entry {{{subset}}} has cardinality {size}, not in the declared window")]
    EntryOutsideWindow { subset: String, size: usize },

    #[error("no covering has this degree table: recovered multiplicity {value} for {{{subset}}}")]
    InconsistentTable { subset: String, value: i64 },

    #[error("parity pair requires at least 2 elements, got {size}")]
    InvalidSize { size: usize },

    #[error("lattice cap {cap} is outside 1..={max}")]
    InvalidCap { cap: usize, max: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
