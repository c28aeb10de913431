use thiserror::Error;

/// Errors produced by constructions, oracles, and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must agree on a dimension do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An operation that requires full row rank was handed a rank-deficient matrix.
    #[error("rank deficient: {0}")]
    RankDeficient(String),

    /// The requested object would be too large to build.
    #[error("size overflow: {0}")]
    SizeOverflow(String),

    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// `p` is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// An adjacency matrix is not symmetric.
    #[error("adjacency matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),

    /// An adjacency matrix has a loop (diagonal one) where loops are not allowed.
    #[error("unexpected loop at vertex {0}")]
    UnexpectedLoop(usize),

    /// The X and Z checks of a would-be CSS pair do not commute.
    #[error("CSS pair is not orthogonal: X row {row_x} and Z row {row_z} overlap oddly")]
    CssOrthogonality { row_x: usize, row_z: usize },

    /// A text input (matrix file, request file) is malformed.
    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
