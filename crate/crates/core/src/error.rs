use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("unknown vertex or variable `{0}`")]
    UnknownVertex(String),
    #[error("vertex id {0} is outside the ambient set")]
    UnknownVertexId(usize),
    #[error("the void complex has no faces; {0} is undefined")]
    VoidComplex(&'static str),
    #[error("the given set is not a face of the complex")]
    NotAFace,
    #[error("ambient vertex sets overlap on `{0}`")]
    OverlappingLabels(String),
    #[error("dimension {k} is outside the admissible range {lo}..={hi}")]
    DimensionOutOfRange { k: i64, lo: i64, hi: i64 },
    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: &'static str, limit: usize },
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,
    #[error("the ideal is not squarefree; polarize it first")]
    NotSquarefree,
    #[error("unsupported field characteristic {0}; supported primes are 2, 3 and 32003")]
    UnsupportedField(u32),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph edge `{0}` is a loop")]
    Loop(String),
    #[error("cycle graphs need at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// True for errors caused by size limits rather than malformed input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
