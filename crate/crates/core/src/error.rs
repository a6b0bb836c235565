use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not real: {0}")]
    NotReal(String),
    #[error("sign undecided after {bits} bits of refinement (raise CRH_PRECISION_BITS)")]
    PrecisionExhausted { bits: u64 },
    #[error("unknown constant {0:?}")]
    UnknownConstant(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("the point at infinity is not a Heisenberg group element")]
    InfinityOperand,
    #[error("points coincide: {0}")]
    CoincidentPoints(String),
    #[error("vertical chain has no circular parametrization")]
    VerticalChain,
    #[error("matrix is singular")]
    Singular,
    #[error("no isometry exists: {0}")]
    CartanMismatch(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("anti-holomorphic isometry cannot be classified directly; classify its square")]
    AntiHolomorphic,
    #[error("not a unipotent upper-triangular isometry: {0}")]
    NotUnipotent(String),
    #[error("unbound generator {0:?}")]
    UnboundName(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("JSON error: {msg}")]
    Json { line: usize, column: usize, msg: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json { line: e.line(), column: e.column(), msg: e.to_string() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
