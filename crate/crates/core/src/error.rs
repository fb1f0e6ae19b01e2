use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("malformed structure file (line {line}): {msg}")]
    Format { line: usize, msg: String },

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("unknown model `{0}`")]
    UnknownModel(String),

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("structure `{0}` has no inverse table")]
    MissingInverseTable(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("carrier of {requested} elements exceeds the bound of {bound}")]
    SizeOverflow { requested: u128, bound: u128 },

    #[error("homomorphism search exceeded {0} candidate extensions")]
    SearchBoundExceeded(u64),

    #[error("no finite characteristic found for `{0}` (corrupt tables?)")]
    NoFiniteCharacteristic(String),

    #[error("not a meadow: {0}")]
    NotAMeadow(String),

    #[error("not a commutative ring: axiom {axiom} fails")]
    NotACommutativeRing { axiom: String },

    #[error("not regular: witness {witness}")]
    NotRegular { witness: u32 },

    #[error("pseudo-inverse of {element} is not unique (corrupt tables?)")]
    UniquenessViolated { element: u32 },

    #[error("no field image separates element {element} from zero")]
    DecompositionNotFound { element: u32 },

    #[error("premise `{0}` is a disequation and cannot be encoded")]
    UnsupportedPremise(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("unknown inverse strategy `{0}`")]
    UnknownStrategy(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
