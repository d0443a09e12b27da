//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("duplicate task id {0:?}")]
    DuplicateTaskId(String),

    #[error("task {id:?} has an empty summary and an empty description")]
    EmptyTask { id: String },

    #[error("duplicate solution entry for task id {0:?}")]
    DuplicateSolutionId(String),

    #[error("solution entry for task {id:?} lists no files")]
    EmptySolutionSet { id: String },

    #[error("invalid glob pattern {pattern:?}: {source}")]
    BadGlob {
        pattern: String,
        #[source]
        source: globset::Error,
    },

    #[error("no corpus files matched under {root}")]
    NoCorpusMatches { root: PathBuf },

    #[error("corpus contains duplicate document path {0:?}")]
    DuplicateDocumentPath(String),

    #[error("co-occurrence window must be at least 2, got {window}")]
    WindowTooSmall { window: usize },

    #[error("invalid rank configuration: {0}")]
    InvalidRankConfig(String),

    #[error("term {0:?} is not a node of the graph")]
    UnknownTerm(String),

    #[error("direct solver supports at most {max} nodes, graph has {nodes}")]
    GraphTooLarge { nodes: usize, max: usize },

    #[error("fixed-point system is singular")]
    SingularSystem,

    #[error("query length must be at least 1")]
    InvalidQueryLength,

    #[error("solution set for task {id:?} is empty")]
    EmptySolution { id: String },

    #[error("cannot evaluate an empty task set")]
    EmptyTaskSet,

    #[error("tasks without a solution set: {}", .0.join(", "))]
    MissingSolutions(Vec<String>),

    #[error("solution file {path:?} for task {task_id:?} is not in the corpus")]
    SolutionFileNotInCorpus { task_id: String, path: String },

    #[error("unknown task id {0:?}")]
    UnknownTaskId(String),

    #[error("unsupported index snapshot version {found} (expected {expected})")]
    SnapshotVersion { found: u32, expected: u32 },

    #[error("index snapshot {path} has inconsistent document tables")]
    SnapshotCorrupt { path: PathBuf },
}
