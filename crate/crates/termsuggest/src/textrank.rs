//! Damped power-iteration scoring of co-occurrence graph nodes.
//!
//! Each node's weight satisfies the fixed point
//!
//! ```text
//! S(v) = (1 - d) + d * sum over neighbors u of S(u) / degree(u)
//! ```
//!
//! with every edge bidirectional, so a node's in-set and out-set are both
//! its neighbor set. Iteration is synchronous: every update in a sweep reads
//! the previous vector, which keeps results independent of node order. The
//! sweep stops when the largest per-node change drops below `epsilon` or at
//! `max_iterations`, whichever comes first. Hitting the cap is not an error;
//! the caller gets the last vector with `converged = false`.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::textgraph::TextGraph;

/// Iteration parameters. Defaults: damping 0.85, initial score 0.25,
/// epsilon 1e-4, at most 100 iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct RankConfig {
    pub damping: f64,
    pub init_score: f64,
    pub epsilon: f64,
    pub max_iterations: usize,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig {
            damping: 0.85,
            init_score: 0.25,
            epsilon: 1e-4,
            max_iterations: 100,
        }
    }
}

impl RankConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(0.0..=1.0).contains(&self.damping) {
            return Err(Error::InvalidRankConfig(format!(
                "damping must be in [0, 1], got {}",
                self.damping
            )));
        }
        if !self.epsilon.is_finite() || self.epsilon <= 0.0 {
            return Err(Error::InvalidRankConfig(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidRankConfig(
                "max_iterations must be at least 1".to_string(),
            ));
        }
        Ok(())
    }
}

/// A term with its converged weight, raw and max-normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct TermScore {
    pub term: String,
    pub display: String,
    pub raw: f64,
    /// `raw` divided by the largest raw score in the graph; the top term is
    /// exactly 1.0.
    pub normalized: f64,
}

/// Scores for every node plus how the iteration ended.
#[derive(Debug, Clone, Default)]
pub struct RankResult {
    pub scores: BTreeMap<String, TermScore>,
    pub iterations_used: usize,
    pub converged: bool,
}

impl RankResult {
    /// Scores ordered by descending raw weight, ties broken by term key.
    pub fn ranked(&self) -> Vec<&TermScore> {
        let mut all: Vec<&TermScore> = self.scores.values().collect();
        all.sort_by(|a, b| {
            b.raw
                .partial_cmp(&a.raw)
                .expect("scores are finite")
                .then_with(|| a.term.cmp(&b.term))
        });
        all
    }

    pub fn raw(&self, term: &str) -> Option<f64> {
        self.scores.get(term).map(|s| s.raw)
    }
}

/// Run the damped power iteration over `graph`.
///
/// An empty graph converges trivially to an empty result. Isolated nodes
/// settle at `1 - damping`.
pub fn rank(graph: &TextGraph, config: &RankConfig) -> Result<RankResult, Error> {
    config.validate()?;
    let nodes: Vec<&str> = graph.nodes().collect();
    if nodes.is_empty() {
        return Ok(RankResult {
            converged: true,
            ..RankResult::default()
        });
    }

    let index: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let neighbor_ids: Vec<Vec<usize>> = nodes
        .iter()
        .map(|n| {
            graph
                .neighbors(n)
                .expect("node listed by graph")
                .iter()
                .map(|m| index[m.as_str()])
                .collect()
        })
        .collect();
    let degrees: Vec<f64> = neighbor_ids.iter().map(|n| n.len() as f64).collect();

    let mut scores = vec![config.init_score; nodes.len()];
    let mut next = vec![0.0; nodes.len()];
    let mut iterations_used = 0;
    let mut converged = false;
    let base = 1.0 - config.damping;

    while iterations_used < config.max_iterations {
        for (i, neighbors) in neighbor_ids.iter().enumerate() {
            let votes: f64 = neighbors.iter().map(|&j| scores[j] / degrees[j]).sum();
            next[i] = base + config.damping * votes;
        }
        iterations_used += 1;
        let delta = scores
            .iter()
            .zip(&next)
            .map(|(old, new)| (old - new).abs())
            .fold(0.0_f64, f64::max);
        std::mem::swap(&mut scores, &mut next);
        if delta < config.epsilon {
            converged = true;
            break;
        }
    }

    let max_raw = scores.iter().copied().fold(f64::MIN, f64::max);
    let result = nodes
        .iter()
        .zip(&scores)
        .map(|(&term, &raw)| {
            let display = graph.display(term).unwrap_or(term).to_string();
            let normalized = if max_raw > 0.0 { raw / max_raw } else { 0.0 };
            (
                term.to_string(),
                TermScore {
                    term: term.to_string(),
                    display,
                    raw,
                    normalized,
                },
            )
        })
        .collect();

    Ok(RankResult {
        scores: result,
        iterations_used,
        converged,
    })
}

/// Directly solve the fixed-point system `S = (1-d)*1 + d*M*S`, where
/// `M[i][j] = 1/degree(j)` for each edge `{i, j}`.
///
/// Dense Gaussian elimination, intended as an independent check of [`rank`]
/// on small graphs; capped at 50 nodes.
pub fn solve_exact(graph: &TextGraph, damping: f64) -> Result<BTreeMap<String, f64>, Error> {
    const MAX_NODES: usize = 50;
    let nodes: Vec<&str> = graph.nodes().collect();
    let n = nodes.len();
    if n > MAX_NODES {
        return Err(Error::GraphTooLarge {
            nodes: n,
            max: MAX_NODES,
        });
    }
    if n == 0 {
        return Ok(BTreeMap::new());
    }
    let index: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, &m)| (m, i)).collect();

    // rows of [A | b] for A = I - d*M, b = (1-d)*1
    let mut a = vec![vec![0.0_f64; n + 1]; n];
    for (i, node) in nodes.iter().enumerate() {
        a[i][i] = 1.0;
        a[i][n] = 1.0 - damping;
        for neighbor in graph.neighbors(node).expect("node listed by graph") {
            let j = index[neighbor.as_str()];
            let deg_j = graph.degree(neighbor).expect("neighbor is a node") as f64;
            a[i][j] -= damping / deg_j;
        }
    }

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| {
                a[r1][col]
                    .abs()
                    .partial_cmp(&a[r2][col].abs())
                    .expect("finite matrix entries")
            })
            .expect("non-empty column range");
        if a[pivot_row][col].abs() < 1e-12 {
            return Err(Error::SingularSystem);
        }
        a.swap(col, pivot_row);
        let pivot = a[col].clone();
        for (row, cells) in a.iter_mut().enumerate() {
            if row == col {
                continue;
            }
            let factor = cells[col] / pivot[col];
            if factor == 0.0 {
                continue;
            }
            for (cell, pivot_cell) in cells[col..=n].iter_mut().zip(&pivot[col..=n]) {
                *cell -= factor * pivot_cell;
            }
        }
    }

    Ok(nodes
        .iter()
        .enumerate()
        .map(|(i, &node)| (node.to_string(), a[i][n] / a[i][i]))
        .collect())
}
