use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity error: expected {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("domain error: unknown element {0}")]
    UnknownElement(String),

    #[error("exponent error: {0} is not a valid exponent")]
    InvalidExponent(usize),

    #[error("identity required: `{0}` needs a declared scalar identity (`one`)")]
    IdentityRequired(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("the hyperideal must be proper (it is the whole carrier)")]
    NotProper,

    #[error(
        "search budget of {cap} nodes exceeded while enumerating endomorphisms; \
         supply endomorphisms explicitly with `endo NAME: a->b ...` lines"
    )]
    Budget { cap: u64 },

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
