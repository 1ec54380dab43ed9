use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}: letters are the digits 1-9")]
    InvalidLetter(char),

    #[error("invalid pattern {0:?}")]
    InvalidPattern(String),

    #[error("suffix length {m} out of range for a word of length {len}")]
    SuffixOutOfRange { m: usize, len: usize },

    #[error("parameter n={n} out of range for {what} (minimum {min})")]
    ParameterOutOfRange { what: String, n: usize, min: usize },

    #[error("word {word} is not in the domain of {what}")]
    NotInDomain { what: String, word: String },

    #[error("unknown identifier {0:?}")]
    UnknownId(String),

    #[error("b-file line {line}: {message}")]
    BFileParse { line: usize, message: String },
}
