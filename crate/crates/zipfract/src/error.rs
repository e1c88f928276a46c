//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

use crate::regression::Transform;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A manuscript with zero countable letters.
    #[error("manuscript has no countable letters")]
    EmptyText,

    #[error("network unavailable while fetching {archive_id:?}: {reason}")]
    NetworkUnavailable { archive_id: String, reason: String },

    /// The archive has no plain-text edition for this id (or the id is
    /// not a valid archive id at all).
    #[error("no plain-text document found for archive id {archive_id:?}")]
    NotFound { archive_id: String },

    #[error("malformed boilerplate markers: {reason}")]
    MalformedMarkers { reason: String },

    /// Fewer than 2 points, or fewer than 2 distinct x values.
    #[error("series {label:?} is degenerate: needs at least 2 points with 2 distinct x values")]
    DegenerateSeries { label: String },

    #[error("no point of series {label:?} survives the {transform} transform")]
    AllPointsDropped { label: String, transform: Transform },

    #[error("duplicate manuscript id {id:?} in comparison")]
    DuplicateManuscript { id: String },

    #[error("unknown plot {name:?}; valid plots: {valid}")]
    UnknownPlot { name: String, valid: String },

    #[error("config: {0}")]
    Config(String),

    #[error("report file {path}: {reason}")]
    BadReportFile { path: PathBuf, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
