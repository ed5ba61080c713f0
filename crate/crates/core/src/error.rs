use thiserror::Error;

/// Errors shared by every pipeline of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,
    #[error("map is not generically finite: both eliminants vanish identically")]
    NotGenericallyFinite,
    #[error("jacobian determinant is identically zero: map is nowhere submersive")]
    JacobianZero,
    #[error("component has a constant initial form; direction analysis degenerate")]
    DegenerateInitialForm,
    #[error("invalid perversity: {0}")]
    InvalidPerversity(String),
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("perversities are not complementary")]
    NonComplementary,
    #[error("filtrations have different base complexes")]
    BaseMismatch,
    #[error("point does not lie on the component")]
    PointNotOnComponent,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("catalog entry `{0}` not found")]
    UnknownEntry(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
