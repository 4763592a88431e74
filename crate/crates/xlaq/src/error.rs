//! Error types shared across the crate.
//!
//! The library reports every recoverable failure through [`Error`]; panics
//! are reserved for internal invariant violations (a table that fails its own
//! construction-time cross-check, for instance), which indicate a bug rather
//! than bad input.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All recoverable failures produced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The requested field order is not one of the supported values.
    #[error("unsupported field order q = {0}; supported orders are 3, 4, 5, 7, 8, 9")]
    UnsupportedField(u8),

    /// Field construction failed an internal consistency check.
    #[error("field construction failed for q = {q}: {reason}")]
    FieldConstruction { q: u8, reason: String },

    /// A code-family parameter tuple is outside its admissible range.
    #[error("invalid parameters: {reason}")]
    InvalidSpec { reason: String },

    /// Two codes that must share a length do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// An operation requiring nested codes was given a non-nested pair.
    #[error("codes are not nested: {detail}")]
    NotNested { detail: String },

    /// An operation requiring a *proper* subcode was given equal codes.
    #[error("codes are equal; a proper subcode is required")]
    EqualCodes,

    /// A derived quantum code would have dimension zero (or less).
    #[error("derived code has dimension {k}; a positive dimension is required")]
    ZeroDimension { k: i64 },

    /// A closed-form dimension formula was invoked outside its hypothesis.
    #[error("hypothesis violated for {theorem}: {condition}")]
    HypothesisViolation { theorem: String, condition: String },

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A data file (bounds table, golden snapshot) failed to parse.
    #[error("parse error in {what}: {detail}")]
    Parse { what: String, detail: String },
}
