//! Search term suggestion for software change tasks.
//!
//! A change task (bug report, feature request) arrives as a natural-language
//! summary plus description. This crate turns that text into a ranked search
//! query and evaluates queries against a source-code corpus:
//!
//! - [`ingest`] — load change tasks, gold solution sets, and corpus files
//! - [`preprocess`] — sentence splitting, tokenization, stopword removal
//! - [`textgraph`] — term co-occurrence graph over preprocessed sentences
//! - [`textrank`] — damped power iteration scoring of graph nodes
//! - [`queryselect`] — summary-first query selection plus two baselines
//! - [`searchengine`] — boolean-filtered tf-idf retrieval over a corpus
//! - [`evaluate`] — per-task and aggregate retrieval metrics

pub mod error;
pub mod evaluate;
pub mod ingest;
pub mod preprocess;
pub mod queryselect;
pub mod searchengine;
pub mod textgraph;
pub mod textrank;

pub use error::Error;
pub use evaluate::{EvalConfig, EvalReport, TaskOutcome};
pub use ingest::{ChangeTask, CorpusDocument, SolutionSet};
pub use preprocess::{SentenceTokens, SourceField, StopwordSet};
pub use queryselect::{HeuristicWeights, Query, QueryMethod, QueryTerm};
pub use searchengine::{Index, SearchHit, SearchResult};
pub use textgraph::TextGraph;
pub use textrank::{RankConfig, RankResult, TermScore};

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
