use thiserror::Error;

use crate::ring::RingMode;

/// Errors raised by the algebraic operations and the text/JSON front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mode mismatch: {left} vs {right}")]
    RingMismatch { left: RingMode, right: RingMode },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("operation requires rational ring mode, got {0}")]
    RationalRequired(RingMode),

    #[error("factor indices ({i}, {j}) out of range for a word of length {len}")]
    IndexOutOfRange { i: usize, j: usize, len: usize },

    #[error("{op} requires a non-empty word")]
    EmptyWord { op: &'static str },

    #[error("{op} requires a strict phrase (no empty words), got {phrase}")]
    NonStrictPhrase { op: &'static str, phrase: String },

    #[error("letter {0} is not mapped")]
    UnmappedLetter(String),

    #[error("invalid letter {0:?}: letters are non-empty and avoid | ( ) , ~ and whitespace")]
    InvalidLetter(String),

    #[error("word length {len} exceeds the cap of {cap}")]
    LengthCapExceeded { len: usize, cap: usize },

    #[error("pairing has infinite support; restrict it to a finite alphabet")]
    InfiniteSupport,

    #[error("word {word} is not unlaced at position {position}: {reason}")]
    NotUnlaced { word: String, position: usize, reason: String },

    #[error("edge decoration {0} is used twice")]
    DuplicateDecoration(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
