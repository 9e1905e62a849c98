use thiserror::Error;

/// A search or construction ran past its configured budget.
///
/// Kept separate from [`Error`] so callers that treat budget exhaustion as an
/// "unknown" verdict can match on it without inspecting other failures.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("resource budget exceeded: more than {budget} {what}")]
pub struct ResourceExceeded {
    pub budget: usize,
    pub what: &'static str,
}

impl ResourceExceeded {
    pub fn new(budget: usize, what: &'static str) -> Self {
        ResourceExceeded { budget, what }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: unknown state `{name}`")]
    UnknownState { line: usize, name: String },

    #[error("unknown symbol `{symbol}`{}", line.map(|l| format!(" on line {l}")).unwrap_or_default())]
    UnknownSymbol { symbol: char, line: Option<usize> },

    #[error("no initial state declared")]
    NoInitialState,

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("word length {len} exceeds the enumeration limit {limit}")]
    EnumerationLimit { len: usize, limit: usize },

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("words are not permutations of each other")]
    NotPermutation,

    #[error("invalid jump sequence: {0}")]
    InvalidJumpSequence(String),

    #[error("cut {m} out of range 0..={n}")]
    CutOutOfRange { m: usize, n: usize },

    #[error("automata have different alphabets")]
    AlphabetMismatch,

    /// Two independent computations of the same quantity differ.
    #[error("disagreement: {0}")]
    Disagreement(String),

    #[error(transparent)]
    Resource(#[from] ResourceExceeded),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
