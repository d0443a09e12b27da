//! Turning ranked term scores into a search query.
//!
//! The main selector is summary-first: terms that appear in the task title
//! are usually the strongest candidates, so the top-scored title terms are
//! taken first and the remainder, if the title is too short, comes from the
//! description. Two baselines ship alongside it: a configurable linear model
//! over frequency/location/notation features, and uniform random sampling
//! from the summary.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ingest::ChangeTask;
use crate::preprocess::{preprocess_task, term_key, SentenceTokens, SourceField, StopwordSet};
use crate::textrank::RankResult;

/// Default query length for the summary-first selector.
pub const DEFAULT_QUERY_LEN: usize = 5;

/// Default query length for the linear-model baseline.
pub const DEFAULT_HEURISTIC_QUERY_LEN: usize = 3;

/// How a query was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryMethod {
    #[serde(rename = "textrank")]
    TextRank,
    #[serde(rename = "kevic")]
    KevicHeuristic,
    #[serde(rename = "random")]
    RandomSummary,
}

impl std::fmt::Display for QueryMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QueryMethod::TextRank => write!(f, "textrank"),
            QueryMethod::KevicHeuristic => write!(f, "kevic"),
            QueryMethod::RandomSummary => write!(f, "random"),
        }
    }
}

impl std::str::FromStr for QueryMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_lowercase().as_str() {
            "textrank" | "text-rank" => Ok(QueryMethod::TextRank),
            "kevic" | "heuristic" => Ok(QueryMethod::KevicHeuristic),
            "random" | "random-summary" => Ok(QueryMethod::RandomSummary),
            _ => Err(format!(
                "unknown method '{s}', expected one of: textrank, kevic, random"
            )),
        }
    }
}

/// One selected term with its provenance and score.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QueryTerm {
    pub term: String,
    pub source: SourceField,
    pub score: f64,
}

/// An ordered search query for one task. Terms are distinct by case-folded
/// key and there are at most `k` of them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Query {
    pub task_id: String,
    pub method: QueryMethod,
    pub terms: Vec<QueryTerm>,
}

impl Query {
    /// Display forms of the selected terms, in rank order.
    pub fn term_strings(&self) -> Vec<String> {
        self.terms.iter().map(|t| t.term.clone()).collect()
    }
}

/// Pick the top-scored terms that occur in the summary; if fewer than `k`
/// exist, fill the remainder with the top-scored description-only terms.
/// Within each pool the order is by descending raw score, ties broken by
/// term key.
pub fn select_textrank(
    task_id: &str,
    scores: &RankResult,
    sentences: &[SentenceTokens],
    k: usize,
) -> Query {
    let summary_keys: HashSet<String> = sentences
        .iter()
        .filter(|s| s.source == SourceField::Summary)
        .flat_map(|s| s.keys())
        .collect();

    let ranked = scores.ranked();
    let mut terms: Vec<QueryTerm> = ranked
        .iter()
        .filter(|s| summary_keys.contains(&s.term))
        .take(k)
        .map(|s| QueryTerm {
            term: s.display.clone(),
            source: SourceField::Summary,
            score: s.raw,
        })
        .collect();
    if terms.len() < k {
        terms.extend(
            ranked
                .iter()
                .filter(|s| !summary_keys.contains(&s.term))
                .take(k - terms.len())
                .map(|s| QueryTerm {
                    term: s.display.clone(),
                    source: SourceField::Description,
                    score: s.raw,
                }),
        );
    }

    Query {
        task_id: task_id.to_string(),
        method: QueryMethod::TextRank,
        terms,
    }
}

/// Weights of the linear term-scoring baseline. The published model's
/// coefficients are not available, so the default is a transparent
/// unweighted sum; override via a JSON weights file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeuristicWeights {
    #[serde(rename = "w_tfidf")]
    pub tfidf: f64,
    #[serde(rename = "w_inSumAndBody")]
    pub in_sum_and_body: f64,
    #[serde(rename = "w_isInMiddle")]
    pub is_in_middle: f64,
    #[serde(rename = "w_isCamelCase")]
    pub is_camel_case: f64,
    pub bias: f64,
}

impl Default for HeuristicWeights {
    fn default() -> Self {
        HeuristicWeights {
            tfidf: 1.0,
            in_sum_and_body: 1.0,
            is_in_middle: 1.0,
            is_camel_case: 1.0,
            bias: 0.0,
        }
    }
}

/// Document frequencies over a task set, one task = one document.
#[derive(Debug, Clone, Default)]
pub struct TaskDocumentFrequencies {
    task_count: usize,
    df: HashMap<String, usize>,
}

impl TaskDocumentFrequencies {
    pub fn task_count(&self) -> usize {
        self.task_count
    }

    pub fn df(&self, key: &str) -> usize {
        self.df.get(key).copied().unwrap_or(0)
    }
}

/// Build the document-frequency table the linear baseline scores against.
pub fn task_document_frequencies(
    tasks: &[ChangeTask],
    stops: &StopwordSet,
) -> TaskDocumentFrequencies {
    let mut df: HashMap<String, usize> = HashMap::new();
    for task in tasks {
        let keys: HashSet<String> = preprocess_task(task, stops)
            .iter()
            .flat_map(|s| s.keys())
            .collect();
        for key in keys {
            *df.entry(key).or_insert(0) += 1;
        }
    }
    TaskDocumentFrequencies {
        task_count: tasks.len(),
        df,
    }
}

/// `true` when the display form has an internal lowercase-to-uppercase
/// transition, e.g. `PageBookView` but not `JRES` or `pagebookview`.
pub fn is_camel_case(term: &str) -> bool {
    term.chars()
        .zip(term.chars().skip(1))
        .any(|(a, b)| a.is_lowercase() && b.is_uppercase())
}

/// Linear-model baseline: scores every candidate term from the summary and
/// description as
///
/// ```text
/// w_tfidf * tf*idf + w_inSumAndBody * [in both fields]
///   + w_isInMiddle * [strictly inside a sentence]
///   + w_isCamelCase * [camel case] + bias
/// ```
///
/// with `tf` counted over the task's combined text and `idf = ln(N/df)`
/// over the task set. Returns the top `k` by score, ties broken by key.
pub fn select_kevic(
    task: &ChangeTask,
    stats: &TaskDocumentFrequencies,
    stops: &StopwordSet,
    weights: &HeuristicWeights,
    k: usize,
) -> Result<Query, Error> {
    if k == 0 {
        return Err(Error::InvalidQueryLength);
    }
    let sentences = preprocess_task(task, stops);

    let mut displays: BTreeMap<String, String> = BTreeMap::new();
    let mut tf: BTreeMap<String, usize> = BTreeMap::new();
    let mut in_summary: HashSet<String> = HashSet::new();
    let mut in_description: HashSet<String> = HashSet::new();
    let mut in_middle: HashSet<String> = HashSet::new();

    for sentence in &sentences {
        let keys: Vec<String> = sentence.keys().collect();
        for (i, key) in keys.iter().enumerate() {
            displays
                .entry(key.clone())
                .or_insert_with(|| sentence.tokens[i].clone());
            *tf.entry(key.clone()).or_insert(0) += 1;
            match sentence.source {
                SourceField::Summary => in_summary.insert(key.clone()),
                SourceField::Description => in_description.insert(key.clone()),
            };
            if i > 0 && i + 1 < keys.len() {
                in_middle.insert(key.clone());
            }
        }
    }

    let task_count = stats.task_count().max(1) as f64;
    let mut scored: Vec<(String, f64)> = displays
        .keys()
        .map(|key| {
            let df = stats.df(key).max(1) as f64;
            let tfidf = tf[key] as f64 * (task_count / df).ln();
            let both = in_summary.contains(key) && in_description.contains(key);
            let score = weights.tfidf * tfidf
                + weights.in_sum_and_body * f64::from(both)
                + weights.is_in_middle * f64::from(in_middle.contains(key))
                + weights.is_camel_case * f64::from(is_camel_case(&displays[key]))
                + weights.bias;
            (key.clone(), score)
        })
        .collect();
    scored.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .expect("feature scores are finite")
            .then_with(|| a.0.cmp(&b.0))
    });

    let terms = scored
        .into_iter()
        .take(k)
        .map(|(key, score)| QueryTerm {
            term: displays[&key].clone(),
            source: if in_summary.contains(&key) {
                SourceField::Summary
            } else {
                SourceField::Description
            },
            score,
        })
        .collect();

    Ok(Query {
        task_id: task.id.clone(),
        method: QueryMethod::KevicHeuristic,
        terms,
    })
}

/// Deterministic 64-bit generator (splitmix64). Hand-rolled so committed
/// golden outputs never move under dependency upgrades.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` (bound > 0) by rejection sampling.
    fn below(&mut self, bound: u64) -> u64 {
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next();
            if v < zone {
                return v % bound;
            }
        }
    }
}

/// Baseline: `k` distinct non-stopword summary tokens drawn uniformly
/// without replacement from a generator seeded with `seed`. If the summary
/// has at most `k` candidates they are all returned in sentence order.
pub fn select_random_summary(task: &ChangeTask, stops: &StopwordSet, k: usize, seed: u64) -> Query {
    let mut candidates: Vec<String> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    for sentence in preprocess_task(task, stops)
        .iter()
        .filter(|s| s.source == SourceField::Summary)
    {
        for token in &sentence.tokens {
            if seen.insert(term_key(token)) {
                candidates.push(token.clone());
            }
        }
    }

    if candidates.len() > k {
        let mut rng = SplitMix64(seed);
        for i in 0..k {
            let j = i + rng.below((candidates.len() - i) as u64) as usize;
            candidates.swap(i, j);
        }
        candidates.truncate(k);
    }

    Query {
        task_id: task.id.clone(),
        method: QueryMethod::RandomSummary,
        terms: candidates
            .into_iter()
            .map(|term| QueryTerm {
                term,
                source: SourceField::Summary,
                score: 0.0,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textgraph::build_default_graph;
    use crate::textrank::{rank, RankConfig};

    fn task(id: &str, summary: &str, description: &str) -> ChangeTask {
        ChangeTask {
            id: id.into(),
            product: String::new(),
            component: String::new(),
            summary: summary.into(),
            description: description.into(),
        }
    }

    fn rank_task(task: &ChangeTask, stops: &StopwordSet) -> (RankResult, Vec<SentenceTokens>) {
        let sentences = preprocess_task(task, stops);
        let graph = build_default_graph(&sentences).unwrap();
        (rank(&graph, &RankConfig::default()).unwrap(), sentences)
    }

    #[test]
    fn summary_terms_fill_first() {
        let stops = StopwordSet::default_list();
        let t = task(
            "1",
            "wizard error dialog",
            "The wizard shows a duplicate error dialog. Dialog rendering glitches badly.",
        );
        let (scores, sentences) = rank_task(&t, &stops);
        let query = select_textrank("1", &scores, &sentences, 3);
        assert_eq!(query.terms.len(), 3);
        assert!(query.terms.iter().all(|t| t.source == SourceField::Summary));
    }

    #[test]
    fn description_terms_backfill_when_summary_is_short() {
        let stops = StopwordSet::default_list();
        let t = task(
            "2",
            "crash parsing",
            "Crash happens while parsing manifest entries. Manifest loader corrupts state.",
        );
        let (scores, sentences) = rank_task(&t, &stops);
        let query = select_textrank("2", &scores, &sentences, 5);
        assert_eq!(query.terms.len(), 5);
        assert_eq!(query.terms[0].source, SourceField::Summary);
        assert_eq!(query.terms[1].source, SourceField::Summary);
        assert!(query.terms[2..]
            .iter()
            .all(|t| t.source == SourceField::Description));
        // summary pool precedes description pool regardless of score
        let keys: Vec<String> = query.terms.iter().map(|t| term_key(&t.term)).collect();
        assert!(keys.contains(&"crash".to_string()));
        assert!(keys.contains(&"parsing".to_string()));
    }

    #[test]
    fn empty_summary_falls_back_to_description() {
        let stops = StopwordSet::default_list();
        let t = task(
            "3",
            "",
            "Renderer leaks textures. Texture cache never evicts.",
        );
        let (scores, sentences) = rank_task(&t, &stops);
        let query = select_textrank("3", &scores, &sentences, 3);
        assert_eq!(query.terms.len(), 3);
        assert!(query
            .terms
            .iter()
            .all(|t| t.source == SourceField::Description));
    }

    #[test]
    fn empty_scores_make_an_empty_query() {
        let query = select_textrank("4", &RankResult::default(), &[], 5);
        assert!(query.terms.is_empty());
    }

    #[test]
    fn selected_terms_come_from_the_task_tokens() {
        let stops = StopwordSet::default_list();
        let t = task(
            "5",
            "indexer stalls writing segments",
            "Segment merge never finishes.",
        );
        let (scores, sentences) = rank_task(&t, &stops);
        let query = select_textrank("5", &scores, &sentences, 5);
        let token_keys: HashSet<String> = sentences.iter().flat_map(|s| s.keys()).collect();
        for term in &query.terms {
            assert!(token_keys.contains(&term_key(&term.term)));
        }
    }

    #[test]
    fn growing_k_keeps_the_prefix() {
        let stops = StopwordSet::default_list();
        let t = task(
            "6",
            "export wizard mangles unicode filenames",
            "Exporting files with unicode names mangles them. The wizard truncates badly.",
        );
        let (scores, sentences) = rank_task(&t, &stops);
        let small = select_textrank("6", &scores, &sentences, 3);
        let large = select_textrank("6", &scores, &sentences, 5);
        assert_eq!(small.terms, large.terms[..small.terms.len()]);
    }

    #[test]
    fn camel_case_detection() {
        assert!(is_camel_case("PageBookView"));
        assert!(is_camel_case("createPartControl"));
        assert!(!is_camel_case("pagebookview"));
        assert!(!is_camel_case("JRES"));
        assert!(!is_camel_case("Mac"));
    }

    #[test]
    fn both_fields_beat_one_field_when_weighted() {
        let stops = StopwordSet::new(Vec::<&str>::new());
        let tasks = vec![task("7", "alpha beta", "alpha gamma here")];
        let stats = task_document_frequencies(&tasks, &stops);
        let weights = HeuristicWeights {
            tfidf: 0.0,
            in_sum_and_body: 1.0,
            is_in_middle: 0.0,
            is_camel_case: 0.0,
            bias: 0.0,
        };
        let query = select_kevic(&tasks[0], &stats, &stops, &weights, 1).unwrap();
        assert_eq!(term_key(&query.terms[0].term), "alpha");
    }

    #[test]
    fn zero_weights_fall_back_to_key_order() {
        let stops = StopwordSet::new(Vec::<&str>::new());
        let tasks = vec![task("8", "zeta alpha midway", "")];
        let stats = task_document_frequencies(&tasks, &stops);
        let weights = HeuristicWeights {
            tfidf: 0.0,
            in_sum_and_body: 0.0,
            is_in_middle: 0.0,
            is_camel_case: 0.0,
            bias: 0.0,
        };
        let query = select_kevic(&tasks[0], &stats, &stops, &weights, 2).unwrap();
        let keys: Vec<String> = query.terms.iter().map(|t| term_key(&t.term)).collect();
        assert_eq!(keys, vec!["alpha", "midway"]);
    }

    #[test]
    fn kevic_rejects_zero_length() {
        let stops = StopwordSet::default_list();
        let tasks = vec![task("9", "one thing", "")];
        let stats = task_document_frequencies(&tasks, &stops);
        assert!(matches!(
            select_kevic(&tasks[0], &stats, &stops, &HeuristicWeights::default(), 0),
            Err(Error::InvalidQueryLength)
        ));
    }

    #[test]
    fn kevic_ranking_survives_joint_positive_rescaling() {
        let stops = StopwordSet::default_list();
        let tasks = vec![
            task(
                "10",
                "AudioPlayer skips beginning of track",
                "The AudioPlayer skips the first half second. Track buffering starts late.",
            ),
            task("11", "volume slider jumps", "Slider events arrive twice."),
        ];
        let stats = task_document_frequencies(&tasks, &stops);
        let base = HeuristicWeights::default();
        let scaled = HeuristicWeights {
            tfidf: 3.0,
            in_sum_and_body: 3.0,
            is_in_middle: 3.0,
            is_camel_case: 3.0,
            bias: 0.0,
        };
        let q1 = select_kevic(&tasks[0], &stats, &stops, &base, 3).unwrap();
        let q2 = select_kevic(&tasks[0], &stats, &stops, &scaled, 3).unwrap();
        assert_eq!(q1.term_strings(), q2.term_strings());
    }

    #[test]
    fn random_returns_all_candidates_when_few() {
        let stops = StopwordSet::default_list();
        let t = task("12", "parser crash dialog resize glitch", "");
        for seed in [0, 1, 99] {
            let query = select_random_summary(&t, &stops, 5, seed);
            let keys: Vec<String> = query.terms.iter().map(|t| term_key(&t.term)).collect();
            assert_eq!(keys, vec!["parser", "crash", "dialog", "resize", "glitch"]);
        }
    }

    #[test]
    fn random_is_deterministic_per_seed() {
        let stops = StopwordSet::default_list();
        let t = task(
            "13",
            "importer drops metadata rows during batch sync upload retries",
            "",
        );
        let a = select_random_summary(&t, &stops, 3, 42);
        let b = select_random_summary(&t, &stops, 3, 42);
        assert_eq!(a, b);
        let c = select_random_summary(&t, &stops, 3, 43);
        assert_eq!(c.terms.len(), 3);
    }

    #[test]
    fn random_empty_summary_is_empty_query() {
        let stops = StopwordSet::default_list();
        let t = task("14", "", "only a description here.");
        let query = select_random_summary(&t, &stops, 5, 7);
        assert!(query.terms.is_empty());
    }

    #[test]
    fn random_draws_are_distinct() {
        let stops = StopwordSet::default_list();
        let t = task(
            "15",
            "importer drops metadata rows during batch sync upload retries",
            "",
        );
        for seed in 0..20 {
            let query = select_random_summary(&t, &stops, 4, seed);
            let keys: HashSet<String> = query.terms.iter().map(|t| term_key(&t.term)).collect();
            assert_eq!(keys.len(), query.terms.len());
        }
    }
}
