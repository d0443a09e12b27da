//! Undirected term co-occurrence graph.
//!
//! Every preprocessed term is a node; two terms are connected when they
//! occur within the co-occurrence window inside one sentence. Windows never
//! cross sentence boundaries and edges are unweighted: repeated
//! co-occurrence changes nothing, and a term never links to itself.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::preprocess::{term_key, SentenceTokens};

/// Default co-occurrence window: two consecutive terms form a unit.
pub const DEFAULT_WINDOW: usize = 2;

/// Immutable undirected term graph keyed by case-folded terms.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TextGraph {
    display: BTreeMap<String, String>,
    adjacency: BTreeMap<String, BTreeSet<String>>,
}

impl TextGraph {
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn contains(&self, term: &str) -> bool {
        self.adjacency.contains_key(term)
    }

    /// Node keys in sorted order.
    pub fn nodes(&self) -> impl Iterator<Item = &str> {
        self.adjacency.keys().map(String::as_str)
    }

    /// First-seen display form of a node.
    pub fn display(&self, term: &str) -> Option<&str> {
        self.display.get(term).map(String::as_str)
    }

    pub fn neighbors(&self, term: &str) -> Option<&BTreeSet<String>> {
        self.adjacency.get(term)
    }

    /// Number of neighbors of `term`; unknown terms are an error.
    pub fn degree(&self, term: &str) -> Result<usize, Error> {
        self.adjacency
            .get(term)
            .map(BTreeSet::len)
            .ok_or_else(|| Error::UnknownTerm(term.to_string()))
    }

    /// All edges as sorted `(a, b)` pairs with `a < b`.
    pub fn edges(&self) -> Vec<(&str, &str)> {
        let mut edges = Vec::new();
        for (a, neighbors) in &self.adjacency {
            for b in neighbors {
                if a < b {
                    edges.push((a.as_str(), b.as_str()));
                }
            }
        }
        edges
    }

    /// Edge-list dump, one `termA<TAB>termB` line per edge, for inspection.
    pub fn dump_edges(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(a);
            out.push('\t');
            out.push_str(b);
            out.push('\n');
        }
        out
    }

    fn add_node(&mut self, key: &str, display: &str) {
        self.adjacency.entry(key.to_string()).or_default();
        self.display
            .entry(key.to_string())
            .or_insert_with(|| display.to_string());
    }

    fn add_edge(&mut self, a: &str, b: &str) {
        if a == b {
            return;
        }
        self.adjacency
            .get_mut(a)
            .expect("node a inserted before edge")
            .insert(b.to_string());
        self.adjacency
            .get_mut(b)
            .expect("node b inserted before edge")
            .insert(a.to_string());
    }
}

/// Build the co-occurrence graph: within each sentence, every pair of
/// distinct terms whose positions differ by less than `window` gets an
/// undirected edge. Requires `window >= 2`.
pub fn build_graph(sentences: &[SentenceTokens], window: usize) -> Result<TextGraph, Error> {
    if window < 2 {
        return Err(Error::WindowTooSmall { window });
    }
    let mut graph = TextGraph::default();
    for sentence in sentences {
        let keys: Vec<String> = sentence.keys().collect();
        for (i, key) in keys.iter().enumerate() {
            graph.add_node(key, &sentence.tokens[i]);
        }
        for (i, key) in keys.iter().enumerate() {
            for other in &keys[(i + 1)..keys.len().min(i + window)] {
                graph.add_edge(key, other);
            }
        }
    }
    Ok(graph)
}

/// Build with the default window of 2.
pub fn build_default_graph(sentences: &[SentenceTokens]) -> Result<TextGraph, Error> {
    build_graph(sentences, DEFAULT_WINDOW)
}

impl TextGraph {
    /// Test/debug constructor from an explicit edge list; names are used as
    /// both key and display after case folding the key.
    pub fn from_edges<'a, I>(nodes: &[&str], edges: I) -> TextGraph
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut graph = TextGraph::default();
        for node in nodes {
            graph.add_node(&term_key(node), node);
        }
        for (a, b) in edges {
            let (ka, kb) = (term_key(a), term_key(b));
            graph.add_node(&ka, a);
            graph.add_node(&kb, b);
            graph.add_edge(&ka, &kb);
        }
        graph
    }
}
