//! Boolean-filtered tf-idf retrieval over a source-file corpus.
//!
//! Source files are stripped of punctuation before indexing so identifiers
//! index as plain words; stopwords are kept and nothing is stemmed. A search
//! first filters to documents containing at least one query term (boolean OR)
//! and then scores each candidate as
//!
//! ```text
//! score(d) = (1 / sqrt(len(d))) * sum over matching terms t of
//!            sqrt(freq(t, d)) * idf(t)^2,
//! idf(t)   = 1 + ln(doc_count / (df(t) + 1))
//! ```
//!
//! The formula is fixed so ranked output is reproducible byte for byte;
//! ties break by path. Only the top `cutoff` documents are returned.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ingest::CorpusDocument;
use crate::preprocess::{split_dotted, term_key, DEFAULT_MIN_TOKEN_LEN};

/// Default number of results returned by a search.
pub const DEFAULT_CUTOFF: usize = 10;

/// On-disk snapshot format version; the loader rejects anything else.
pub const SNAPSHOT_VERSION: u32 = 1;

/// Inverted index over a corpus. Immutable once built.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Index {
    postings: BTreeMap<String, BTreeMap<u32, u32>>,
    doc_lengths: Vec<u32>,
    paths: Vec<String>,
}

impl Index {
    pub fn doc_count(&self) -> usize {
        self.paths.len()
    }

    /// Number of documents containing `term` (a case-folded key).
    pub fn document_frequency(&self, term: &str) -> usize {
        self.postings.get(term).map_or(0, BTreeMap::len)
    }

    pub fn term_count(&self) -> usize {
        self.postings.len()
    }

    pub fn paths(&self) -> &[String] {
        &self.paths
    }

    pub fn contains_path(&self, path: &str) -> bool {
        self.paths.iter().any(|p| p == path)
    }
}

/// Tokenize source text for indexing: every punctuation character is a
/// separator, tokens are case-folded, shorter-than-two and pure-digit
/// tokens drop, and nothing else is filtered. Dots separate naturally, so
/// `a.b.C` indexes as `a`, `b`, `c` without a dotted-split pass.
pub fn preprocess_source(raw_text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut run = String::new();
    for c in raw_text.chars() {
        if c.is_alphanumeric() || c == '_' {
            run.push(c);
        } else if !run.is_empty() {
            push_source_token(&mut tokens, std::mem::take(&mut run));
        }
    }
    if !run.is_empty() {
        push_source_token(&mut tokens, run);
    }
    tokens
}

fn push_source_token(tokens: &mut Vec<String>, token: String) {
    if token.chars().count() >= DEFAULT_MIN_TOKEN_LEN && !token.chars().all(|c| c.is_ascii_digit())
    {
        tokens.push(term_key(&token));
    }
}

/// Build an inverted index over the documents. Paths must be unique.
pub fn build_index(docs: &[CorpusDocument]) -> Result<Index, Error> {
    let mut index = Index::default();
    for doc in docs {
        if index.paths.contains(&doc.path) {
            return Err(Error::DuplicateDocumentPath(doc.path.clone()));
        }
        let doc_id = index.paths.len() as u32;
        index.paths.push(doc.path.clone());
        let tokens = preprocess_source(&doc.text);
        index.doc_lengths.push(tokens.len() as u32);
        for token in tokens {
            *index
                .postings
                .entry(token)
                .or_default()
                .entry(doc_id)
                .or_insert(0) += 1;
        }
    }
    Ok(index)
}

/// One ranked search hit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchHit {
    pub path: String,
    pub score: f64,
}

/// Ranked results of one search, at most `cutoff` of them with
/// non-increasing scores.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub ranked: Vec<SearchHit>,
    pub cutoff: usize,
}

impl SearchResult {
    pub fn paths(&self) -> Vec<String> {
        self.ranked.iter().map(|h| h.path.clone()).collect()
    }
}

/// Normalize raw query terms into index keys: case-fold, split dotted words,
/// extract word-character runs, drop duplicates while keeping order.
pub fn normalize_query_terms(terms: &[String]) -> Vec<String> {
    let mut keys = Vec::new();
    for term in terms {
        for segment in split_dotted(term) {
            for key in preprocess_source(segment) {
                if !keys.contains(&key) {
                    keys.push(key);
                }
            }
        }
    }
    keys
}

/// Run a query: boolean OR filter, then the pinned tf-idf scoring, then the
/// top `cutoff` documents ordered by descending score with path tie-breaks.
/// No candidates means an empty result.
pub fn search(index: &Index, terms: &[String], cutoff: usize) -> SearchResult {
    let keys = normalize_query_terms(terms);
    let doc_count = index.doc_count() as f64;
    let mut accumulated: HashMap<u32, f64> = HashMap::new();
    for key in &keys {
        if let Some(postings) = index.postings.get(key) {
            let idf = 1.0 + (doc_count / (postings.len() as f64 + 1.0)).ln();
            let weight = idf * idf;
            for (&doc_id, &freq) in postings {
                *accumulated.entry(doc_id).or_insert(0.0) += (freq as f64).sqrt() * weight;
            }
        }
    }

    let mut ranked: Vec<SearchHit> = accumulated
        .into_iter()
        .map(|(doc_id, sum)| SearchHit {
            path: index.paths[doc_id as usize].clone(),
            score: sum / (index.doc_lengths[doc_id as usize] as f64).sqrt(),
        })
        .collect();
    ranked.sort_by(|a, b| {
        b.score
            .partial_cmp(&a.score)
            .expect("scores are finite")
            .then_with(|| a.path.cmp(&b.path))
    });
    ranked.truncate(cutoff);

    SearchResult { ranked, cutoff }
}

#[derive(Serialize, Deserialize)]
struct Snapshot {
    version: u32,
    doc_count: usize,
    paths: Vec<String>,
    doc_lengths: Vec<u32>,
    postings: BTreeMap<String, BTreeMap<u32, u32>>,
}

/// Write the index to a versioned JSON snapshot.
pub fn save_snapshot(index: &Index, path: &Path) -> Result<(), Error> {
    let snapshot = Snapshot {
        version: SNAPSHOT_VERSION,
        doc_count: index.doc_count(),
        paths: index.paths.clone(),
        doc_lengths: index.doc_lengths.clone(),
        postings: index.postings.clone(),
    };
    let body = serde_json::to_string(&snapshot).expect("snapshot serializes");
    std::fs::write(path, body).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Load a snapshot, rejecting unknown format versions.
pub fn load_snapshot(path: &Path) -> Result<Index, Error> {
    let bytes = std::fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let snapshot: Snapshot = serde_json::from_slice(&bytes).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    if snapshot.version != SNAPSHOT_VERSION {
        return Err(Error::SnapshotVersion {
            found: snapshot.version,
            expected: SNAPSHOT_VERSION,
        });
    }
    if snapshot.doc_count != snapshot.paths.len()
        || snapshot.doc_lengths.len() != snapshot.paths.len()
    {
        return Err(Error::SnapshotCorrupt {
            path: path.to_path_buf(),
        });
    }
    Ok(Index {
        postings: snapshot.postings,
        doc_lengths: snapshot.doc_lengths,
        paths: snapshot.paths,
    })
}
