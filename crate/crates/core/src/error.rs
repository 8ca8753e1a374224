use thiserror::Error;

/// Errors produced by the escape codecs in [`crate::index_space`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("token {0} does not belong to the {1} block")]
    WrongBlock(u16, &'static str),
    #[error("pair or triplet may not begin with padding")]
    LeadingPad,
    #[error("padding must be contiguous at the tail of a triplet")]
    PadBeforeDigit,
    #[error("byte {0:#04x} has no code in this alphabet")]
    NotInAlphabet(u8),
    #[error("run length {count} outside {min}..={max}")]
    RunLength {
        count: usize,
        min: usize,
        max: usize,
    },
    #[error("token {0} is not assigned inside its block")]
    Unassigned(u16),
}

/// Errors raised while parsing or validating a dictionary manifest.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DictionaryError {
    #[error("line {line}: malformed section header {header:?}")]
    MalformedHeader { line: usize, header: String },
    #[error("line {line}: entry appears before any section header")]
    EntryOutsideSection { line: usize },
    #[error("line {line}: invalid entry {entry:?} in [{section}]")]
    InvalidEntry {
        line: usize,
        section: &'static str,
        entry: String,
    },
    #[error("duplicate surface form {0:?}")]
    Duplicate(String),
    #[error("[{section}] holds {count} entries, capacity is {capacity}")]
    CapacityExceeded {
        section: &'static str,
        count: usize,
        capacity: usize,
    },
    #[error("composite {composite:?} references unknown word {word:?}")]
    UnknownCompositeWord { composite: String, word: String },
    #[error("corpus is empty")]
    EmptyCorpus,
}

/// Errors from container parsing and decompression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("bad magic bytes")]
    BadMagic,
    #[error("unsupported container version {0}")]
    UnsupportedVersion(u8),
    #[error("container truncated: {0}")]
    Truncated(&'static str),
    #[error("alias table overruns the container")]
    AliasOverrun,
    #[error("token stream has an odd number of bytes")]
    OddLength,
    #[error(
        "dictionary hash mismatch: container {container:#018x}, dictionary {dictionary:#018x}"
    )]
    HashMismatch { container: u64, dictionary: u64 },
    #[error("malformed chain at token {position}: {reason}")]
    MalformedChain {
        position: usize,
        reason: &'static str,
    },
    #[error("undefined alias {0}")]
    UndefinedAlias(u16),
    #[error("invalid alias definition for {0}")]
    InvalidAlias(u16),
    #[error("token {token} at position {position} is not decodable")]
    InvalidToken { position: usize, token: u16 },
    #[error("decoded length {decoded} differs from header length {expected}")]
    LengthMismatch { decoded: u64, expected: u64 },
}

/// Query compilation errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("query is empty")]
    EmptyQuery,
    #[error("query {0:?} spans more than one word")]
    MultiWord(String),
    #[error("query {0:?} is not a word of [A-Za-z0-9]")]
    InvalidQuery(String),
    #[error(transparent)]
    Codec(#[from] CodecError),
}

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("original size must be positive")]
    ZeroOriginal,
    #[error("word length must be at least 1")]
    ZeroLength,
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Search(#[from] SearchError),
}
