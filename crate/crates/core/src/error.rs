use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a permutation of 1..{n}: {word:?}")]
    InvalidPermutation { word: Vec<u8>, n: usize },

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("letter {letter} outside alphabet 1..{q}")]
    LetterOutOfAlphabet { letter: u8, q: u8 },

    #[error("empty word")]
    EmptyWord,

    #[error("subset element {element} outside 1..{}", .n.saturating_sub(1))]
    SubsetOutOfRange { element: usize, n: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: u8, right: u8 },

    #[error("size {n} too small (need at least {min})")]
    TooSmall { n: usize, min: usize },

    #[error("{what} = {value} outside {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("{0} is not Λ-shaped")]
    NotLambda(String),

    #[error("{0} is not a canonical (Lex) permutation")]
    NotCanonical(String),

    #[error("invalid class key: {0}")]
    InvalidKey(String),

    /// An internal cross-check failed; this indicates a violated invariant.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: i64, range: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            value,
            range: range.into(),
        }
    }

    /// True for errors caused by malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
