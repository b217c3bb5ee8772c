use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A wall with more than two cofacets blocks the geodesic flow.
    #[error("not geodesic-ready: wall {wall} has {cofacets} cofacets")]
    NotGeodesicReady { wall: String, cofacets: usize },

    #[error("not a manifold at bone {0}: facets around it do not form a single cycle")]
    NonManifoldAtBone(Simplex),

    #[error("unknown catalog entry `{name}`; available: {}", available.join(", "))]
    UnknownCatalog {
        name: String,
        available: Vec<String>,
    },

    #[error("{source_name}: {detail}")]
    Parse { source_name: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(
        "undecided: complex with {simplices} simplices exceeds the recognition ceiling of {limit}"
    )]
    TooLarge { simplices: usize, limit: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Short machine-readable tag used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid_input",
            Error::NotGeodesicReady { .. } => "not_geodesic_ready",
            Error::NonManifoldAtBone(_) => "non_manifold_at_bone",
            Error::UnknownCatalog { .. } => "unknown_catalog",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
            Error::TooLarge { .. } => "too_large",
            Error::Verification(_) => "verification",
            Error::Internal(_) => "internal",
        }
    }
}
