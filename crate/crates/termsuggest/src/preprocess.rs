//! Text preprocessing for change-task descriptions.
//!
//! Each sentence is a logical text unit. The task summary is treated as a
//! single sentence; the description is split on `.`, `!`, `?` and blank
//! lines, except that a dot with a letter or digit on both sides is part of
//! a qualified name (`org.eclipse.ui`) and not a boundary. Dotted words are
//! split into their segments before token extraction so identifiers survive
//! as individual terms. Camel-case words are kept intact and no stemming is
//! applied; both splitting and stemming were found to hurt more than help
//! for code search terms.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ingest::ChangeTask;

/// Tokens shorter than this are dropped.
pub const DEFAULT_MIN_TOKEN_LEN: usize = 2;

/// Bundled stopword list: a standard English list plus a short section of
/// change-request noise words. One word per line, `#` starts a comment.
pub const DEFAULT_STOPWORDS: &str = include_str!("../data/stopwords.txt");

/// Which task field a sentence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceField {
    Summary,
    Description,
}

impl std::fmt::Display for SourceField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SourceField::Summary => write!(f, "summary"),
            SourceField::Description => write!(f, "description"),
        }
    }
}

/// Ordered tokens of one sentence, tagged with the field they came from.
///
/// Tokens keep their original casing for display; graph node identity and
/// stopword matching fold to lowercase (see [`term_key`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceTokens {
    pub source: SourceField,
    pub tokens: Vec<String>,
}

impl SentenceTokens {
    /// Lowercase keys of the tokens, in sentence order.
    pub fn keys(&self) -> impl Iterator<Item = String> + '_ {
        self.tokens.iter().map(|t| term_key(t))
    }
}

/// Case-folded node identity for a term: `Mac` and `mac` are one node.
pub fn term_key(term: &str) -> String {
    term.to_lowercase()
}

/// Case-insensitive stopword membership. Immutable after construction.
#[derive(Debug, Clone)]
pub struct StopwordSet {
    words: HashSet<String>,
}

impl StopwordSet {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        StopwordSet {
            words: words
                .into_iter()
                .map(|w| w.as_ref().to_lowercase())
                .collect(),
        }
    }

    /// The bundled default list.
    pub fn default_list() -> Self {
        Self::parse(DEFAULT_STOPWORDS)
    }

    /// Parse a stopword file body: one word per line, `#` comments, UTF-8.
    pub fn parse(text: &str) -> Self {
        Self::new(
            text.lines()
                .map(|line| line.split('#').next().unwrap_or("").trim())
                .filter(|w| !w.is_empty()),
        )
    }

    pub fn from_file(path: &Path) -> Result<Self, Error> {
        let bytes = std::fs::read(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Self::parse(&String::from_utf8_lossy(&bytes)))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(&word.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Split text into sentences on `.`, `!`, `?` and blank lines.
///
/// A `.` with a letter or digit on both sides is not a boundary, so
/// `PageBookView.createPartControl` reaches the tokenizer whole. Sentences
/// keep their terminator and are trimmed; empty text yields no sentences and
/// text without a terminator is one sentence.
pub fn split_sentences(text: &str) -> Vec<String> {
    let mut sentences = Vec::new();
    for paragraph in split_paragraphs(text) {
        let chars: Vec<char> = paragraph.chars().collect();
        let mut start = 0;
        for i in 0..chars.len() {
            let boundary = match chars[i] {
                '!' | '?' => true,
                '.' => {
                    let prev_word = i > 0 && is_token_char(chars[i - 1]);
                    let next_word = chars.get(i + 1).is_some_and(|&c| is_token_char(c));
                    !(prev_word && next_word)
                }
                _ => false,
            };
            if boundary {
                push_trimmed(&mut sentences, &chars[start..=i]);
                start = i + 1;
            }
        }
        push_trimmed(&mut sentences, &chars[start..]);
    }
    sentences
}

fn split_paragraphs(text: &str) -> Vec<String> {
    let mut paragraphs = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                paragraphs.push(std::mem::take(&mut current));
            }
        } else {
            if !current.is_empty() {
                current.push('\n');
            }
            current.push_str(line);
        }
    }
    if !current.is_empty() {
        paragraphs.push(current);
    }
    paragraphs
}

fn push_trimmed(out: &mut Vec<String>, chars: &[char]) {
    let s: String = chars.iter().collect();
    let s = s.trim();
    if !s.is_empty() {
        out.push(s.to_string());
    }
}

fn is_token_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Split a dotted word into its segments, dropping empty ones:
/// `org.eclipse.ui` becomes `org`, `eclipse`, `ui`.
pub fn split_dotted(token: &str) -> Vec<&str> {
    token.split('.').filter(|s| !s.is_empty()).collect()
}

/// Tokenize one sentence: dotted-split first, then extract maximal runs of
/// letters, digits and underscores; drop stopwords (case-insensitively),
/// tokens shorter than [`DEFAULT_MIN_TOKEN_LEN`], and pure-digit tokens.
/// Original casing and in-sentence order are preserved.
pub fn tokenize_sentence(sentence: &str, stops: &StopwordSet) -> Vec<String> {
    tokenize_with_min_len(sentence, stops, DEFAULT_MIN_TOKEN_LEN)
}

/// [`tokenize_sentence`] with an explicit minimum token length.
pub fn tokenize_with_min_len(sentence: &str, stops: &StopwordSet, min_len: usize) -> Vec<String> {
    let mut tokens = Vec::new();
    for word in sentence.split_whitespace() {
        for segment in split_dotted(word) {
            extract_runs(segment, &mut tokens);
        }
    }
    tokens.retain(|t| {
        t.chars().count() >= min_len && !t.chars().all(|c| c.is_ascii_digit()) && !stops.contains(t)
    });
    tokens
}

fn extract_runs(segment: &str, out: &mut Vec<String>) {
    let mut run = String::new();
    for c in segment.chars() {
        if is_token_char(c) {
            run.push(c);
        } else if !run.is_empty() {
            out.push(std::mem::take(&mut run));
        }
    }
    if !run.is_empty() {
        out.push(run);
    }
}

/// Preprocess a whole task: the summary as one sentence (tagged
/// [`SourceField::Summary`]) followed by each description sentence.
pub fn preprocess_task(task: &ChangeTask, stops: &StopwordSet) -> Vec<SentenceTokens> {
    let mut sentences = Vec::new();
    if !task.summary.trim().is_empty() {
        sentences.push(SentenceTokens {
            source: SourceField::Summary,
            tokens: tokenize_sentence(&task.summary, stops),
        });
    }
    for sentence in split_sentences(&task.description) {
        sentences.push(SentenceTokens {
            source: SourceField::Description,
            tokens: tokenize_sentence(&sentence, stops),
        });
    }
    sentences
}
