use thiserror::Error;

/// Crate-wide error type. The CLI maps variants onto exit codes, so every
/// operation reports failures through one of these categories.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation
    /// (e.g. coupling in the stable region, beta <= 0).
    #[error("domain error: {0}")]
    Domain(String),

    /// Index or order outside the stored data (e.g. truncation order
    /// beyond the known coefficients).
    #[error("range error: {0}")]
    Range(String),

    /// A degree/level combination the artifact does not ship.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Configurable resource cap hit (series order, polynomial degree).
    #[error("resource guard: {0}")]
    ResourceGuard(String),

    /// An iterative or adaptive procedure failed to reach its tolerance.
    #[error("did not converge: {0}")]
    NonConverged(String),

    /// Invalid flag combination or malformed input on the CLI surface.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code contract: 0 success, 1 domain error, 2 usage error,
    /// 3 non-convergence. Everything else counts as a domain-class failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Parse(_) => 2,
            Error::NonConverged(_) => 3,
            _ => 1,
        }
    }
}
