use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("matrix is singular")]
    Singular,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0} is not a primitive root of unity of the requested order")]
    NotPrimitiveRoot(String),
    #[error("integral space has dimension {0}, expected 1")]
    IntegralDimensionNotOne(usize),
    #[error("Hopf algebra carries no R-matrix")]
    MissingRMatrix,
    #[error("Hopf algebra carries no ribbon element")]
    MissingRibbon,
    #[error("Hopf algebra is not unimodular")]
    NotUnimodular,
    #[error("neither inverse convention for the distinguished object passes the induction check")]
    ConventionUndetermined,
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("socle of the projective cover is not simple (dimension {0})")]
    SocleNotSimple(usize),
    #[error("pairing is degenerate")]
    Degenerate,
    #[error("factorization through the matrix-coefficient map is inconsistent: {0}")]
    InconsistentFactorization(String),
    #[error("axiom check failed: {0}")]
    AxiomFailure(String),
    #[error("could not decide: {0}")]
    Undecided(String),
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: type error: {message}")]
    Type { line: usize, column: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
