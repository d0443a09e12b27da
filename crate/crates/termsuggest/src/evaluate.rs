//! Retrieval metrics over a task set.
//!
//! For each task the selected query runs against the corpus index and the
//! ranked result is judged against the task's gold solution set. A task is
//! solved when at least one solution file shows up within the cutoff.
//! Alongside solved counts the report carries average precision and recall,
//! with the mean of average precision reported both over all tasks and over
//! solved tasks only, since published figures do not always say which
//! denominator they use.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ingest::{ChangeTask, SolutionSet};
use crate::preprocess::{preprocess_task, StopwordSet};
use crate::queryselect::{
    select_kevic, select_random_summary, select_textrank, task_document_frequencies,
    HeuristicWeights, Query, QueryMethod,
};
use crate::searchengine::{search, Index, SearchHit};
use crate::textgraph::build_default_graph;
use crate::textrank::{rank, RankConfig};

/// Average precision at the cutoff:
/// `sum over relevant ranks r of precision@r, divided by |solution|`.
pub fn average_precision_at_k(
    ranked: &[String],
    solution: &SolutionSet,
    cutoff: usize,
) -> Result<f64, Error> {
    if solution.files.is_empty() {
        return Err(Error::EmptySolution {
            id: solution.task_id.clone(),
        });
    }
    let mut relevant_seen = 0usize;
    let mut precision_sum = 0.0;
    for (i, path) in ranked.iter().take(cutoff).enumerate() {
        if solution.files.contains(path) {
            relevant_seen += 1;
            precision_sum += relevant_seen as f64 / (i + 1) as f64;
        }
    }
    Ok(precision_sum / solution.files.len() as f64)
}

/// Fraction of the solution set retrieved within the cutoff.
pub fn recall_at_k(ranked: &[String], solution: &SolutionSet, cutoff: usize) -> Result<f64, Error> {
    if solution.files.is_empty() {
        return Err(Error::EmptySolution {
            id: solution.task_id.clone(),
        });
    }
    let hits = ranked
        .iter()
        .take(cutoff)
        .filter(|p| solution.files.contains(*p))
        .count();
    Ok(hits as f64 / solution.files.len() as f64)
}

/// A solution file found in the ranked list: 1-based rank plus path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelevantHit {
    pub rank: usize,
    pub path: String,
}

/// One task's evaluation: its query, the ranked results, where the solution
/// files landed, and the per-task metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskOutcome {
    pub task_id: String,
    pub query: Query,
    pub ranked: Vec<SearchHit>,
    pub relevant_hits: Vec<RelevantHit>,
    pub solved: bool,
    pub apk: f64,
    pub recall: f64,
}

/// Everything an evaluation run needs beyond the data itself.
#[derive(Debug, Clone)]
pub struct EvalConfig {
    pub method: QueryMethod,
    pub k: usize,
    pub cutoff: usize,
    pub seed: u64,
    pub rank: RankConfig,
    pub weights: HeuristicWeights,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            method: QueryMethod::TextRank,
            k: crate::queryselect::DEFAULT_QUERY_LEN,
            cutoff: crate::searchengine::DEFAULT_CUTOFF,
            seed: 0,
            rank: RankConfig::default(),
            weights: HeuristicWeights::default(),
        }
    }
}

/// Aggregate report. `mapk_all` averages over every task; `mapk_solved`
/// averages over solved tasks only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub nts: usize,
    pub pts: f64,
    pub mapk_all: f64,
    pub mapk_solved: f64,
    pub mean_recall: f64,
    pub k: usize,
    pub cutoff: usize,
    pub method: QueryMethod,
    pub seed: u64,
    pub outcomes: Vec<TaskOutcome>,
}

/// Build the query for one task under the configured method.
pub fn build_query(
    task: &ChangeTask,
    stops: &StopwordSet,
    stats: &crate::queryselect::TaskDocumentFrequencies,
    config: &EvalConfig,
) -> Result<Query, Error> {
    match config.method {
        QueryMethod::TextRank => {
            let sentences = preprocess_task(task, stops);
            let graph = build_default_graph(&sentences)?;
            let scores = rank(&graph, &config.rank)?;
            Ok(select_textrank(&task.id, &scores, &sentences, config.k))
        }
        QueryMethod::KevicHeuristic => select_kevic(task, stats, stops, &config.weights, config.k),
        QueryMethod::RandomSummary => Ok(select_random_summary(task, stops, config.k, config.seed)),
    }
}

/// Evaluate every task and aggregate. Tasks are processed in id order so the
/// report is deterministic; every task needs a solution set and every
/// solution file must exist in the corpus.
pub fn evaluate_run(
    tasks: &[ChangeTask],
    solutions: &BTreeMap<String, SolutionSet>,
    index: &Index,
    stops: &StopwordSet,
    config: &EvalConfig,
) -> Result<EvalReport, Error> {
    if tasks.is_empty() {
        return Err(Error::EmptyTaskSet);
    }
    let missing: Vec<String> = tasks
        .iter()
        .filter(|t| !solutions.contains_key(&t.id))
        .map(|t| t.id.clone())
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingSolutions(missing));
    }
    for task in tasks {
        for file in &solutions[&task.id].files {
            if !index.contains_path(file) {
                return Err(Error::SolutionFileNotInCorpus {
                    task_id: task.id.clone(),
                    path: file.clone(),
                });
            }
        }
    }

    let stats = task_document_frequencies(tasks, stops);
    let mut ordered: Vec<&ChangeTask> = tasks.iter().collect();
    ordered.sort_by(|a, b| a.id.cmp(&b.id));

    let mut outcomes = Vec::with_capacity(ordered.len());
    for task in ordered {
        let solution = &solutions[&task.id];
        let query = build_query(task, stops, &stats, config)?;
        let result = search(index, &query.term_strings(), config.cutoff);
        let ranked_paths = result.paths();
        let relevant_hits: Vec<RelevantHit> = ranked_paths
            .iter()
            .enumerate()
            .filter(|(_, p)| solution.files.contains(*p))
            .map(|(i, p)| RelevantHit {
                rank: i + 1,
                path: p.clone(),
            })
            .collect();
        let apk = average_precision_at_k(&ranked_paths, solution, config.cutoff)?;
        let recall = recall_at_k(&ranked_paths, solution, config.cutoff)?;
        outcomes.push(TaskOutcome {
            task_id: task.id.clone(),
            query,
            ranked: result.ranked,
            solved: !relevant_hits.is_empty(),
            relevant_hits,
            apk,
            recall,
        });
    }

    let total = outcomes.len() as f64;
    let nts = outcomes.iter().filter(|o| o.solved).count();
    let mapk_all = outcomes.iter().map(|o| o.apk).sum::<f64>() / total;
    let mapk_solved = if nts > 0 {
        outcomes
            .iter()
            .filter(|o| o.solved)
            .map(|o| o.apk)
            .sum::<f64>()
            / nts as f64
    } else {
        0.0
    };
    let mean_recall = outcomes.iter().map(|o| o.recall).sum::<f64>() / total;

    Ok(EvalReport {
        nts,
        pts: nts as f64 / total,
        mapk_all,
        mapk_solved,
        mean_recall,
        k: config.k,
        cutoff: config.cutoff,
        method: config.method,
        seed: config.seed,
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::CorpusDocument;
    use crate::searchengine::build_index;

    fn solution(id: &str, files: &[&str]) -> SolutionSet {
        SolutionSet {
            task_id: id.into(),
            files: files.iter().map(|f| f.to_string()).collect(),
        }
    }

    fn paths(raw: &[&str]) -> Vec<String> {
        raw.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn apk_hand_enumerated_interleaved() {
        // relevant at ranks 1 and 3: (1/1 + 2/3) / 2
        let sol = solution("t", &["d1", "d2"]);
        let apk = average_precision_at_k(&paths(&["d1", "x", "d2", "y"]), &sol, 10).unwrap();
        assert!((apk - (1.0 + 2.0 / 3.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn apk_perfect_ranking_is_one() {
        let sol = solution("t", &["d1", "d2"]);
        let apk = average_precision_at_k(&paths(&["d1", "d2", "x"]), &sol, 10).unwrap();
        assert!((apk - 1.0).abs() < 1e-12);
    }

    #[test]
    fn apk_no_hits_is_zero() {
        let sol = solution("t", &["d1"]);
        let apk = average_precision_at_k(&paths(&["x", "y"]), &sol, 10).unwrap();
        assert_eq!(apk, 0.0);
    }

    #[test]
    fn apk_single_hit_at_rank_two() {
        let sol = solution("t", &["d1"]);
        let apk = average_precision_at_k(&paths(&["x", "d1"]), &sol, 10).unwrap();
        assert!((apk - 0.5).abs() < 1e-12);
    }

    #[test]
    fn apk_three_solutions_partial() {
        // hits at 1 and 3 out of |S| = 3: (1/1 + 2/3) / 3
        let sol = solution("t", &["d1", "d2", "d3"]);
        let apk = average_precision_at_k(&paths(&["d1", "x", "d2"]), &sol, 3).unwrap();
        assert!((apk - (1.0 + 2.0 / 3.0) / 3.0).abs() < 1e-12);
    }

    #[test]
    fn apk_ignores_hits_beyond_cutoff() {
        let sol = solution("t", &["deep"]);
        let mut ranked = paths(&["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"]);
        ranked.push("deep".to_string());
        assert_eq!(average_precision_at_k(&ranked, &sol, 10).unwrap(), 0.0);
    }

    #[test]
    fn apk_empty_solution_is_an_error() {
        let sol = solution("t", &[]);
        assert!(matches!(
            average_precision_at_k(&paths(&["a"]), &sol, 10),
            Err(Error::EmptySolution { .. })
        ));
    }

    #[test]
    fn apk_more_solutions_than_cutoff_caps_below_one() {
        // 11 solution files, perfect top-10: sum of ten 1.0 precisions / 11
        let files: Vec<String> = (0..11).map(|i| format!("f{i:02}")).collect();
        let refs: Vec<&str> = files.iter().map(String::as_str).collect();
        let sol = solution("t", &refs);
        let apk = average_precision_at_k(&paths(&refs[..10]), &sol, 10).unwrap();
        assert!((apk - 10.0 / 11.0).abs() < 1e-12);
    }

    #[test]
    fn recall_half_retrieved() {
        let sol = solution("t", &["d1", "d2"]);
        assert_eq!(recall_at_k(&paths(&["d1", "x"]), &sol, 10).unwrap(), 0.5);
    }

    #[test]
    fn recall_all_retrieved() {
        let sol = solution("t", &["d1", "d2"]);
        assert_eq!(recall_at_k(&paths(&["d2", "d1"]), &sol, 10).unwrap(), 1.0);
    }

    #[test]
    fn recall_none_retrieved() {
        let sol = solution("t", &["d1"]);
        assert_eq!(recall_at_k(&paths(&["x"]), &sol, 10).unwrap(), 0.0);
    }

    #[test]
    fn raising_cutoff_never_lowers_recall() {
        let sol = solution("t", &["k"]);
        let ranked = paths(&["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"]);
        let at_10 = recall_at_k(&ranked, &sol, 10).unwrap();
        let at_11 = recall_at_k(&ranked, &sol, 11).unwrap();
        assert_eq!(at_10, 0.0);
        assert_eq!(at_11, 1.0);
    }

    fn tiny_fixture() -> (Vec<ChangeTask>, BTreeMap<String, SolutionSet>, Index) {
        let tasks = vec![
            ChangeTask {
                id: "1".into(),
                product: String::new(),
                component: String::new(),
                summary: "wizard dialog error".into(),
                description: "The wizard dialog shows an error badly.".into(),
            },
            ChangeTask {
                id: "2".into(),
                product: String::new(),
                component: String::new(),
                summary: "nothing matches here".into(),
                description: "Completely unrelated prose.".into(),
            },
        ];
        let mut solutions = BTreeMap::new();
        solutions.insert("1".to_string(), solution("1", &["Wizard.java"]));
        solutions.insert("2".to_string(), solution("2", &["Other.java"]));
        let index = build_index(&[
            CorpusDocument {
                path: "Wizard.java".into(),
                text: "class Wizard { void dialog() { error(); } }".into(),
            },
            CorpusDocument {
                path: "Other.java".into(),
                text: "class Other { int counter; }".into(),
            },
        ])
        .unwrap();
        (tasks, solutions, index)
    }

    #[test]
    fn mapk_averages_over_all_tasks() {
        let (tasks, solutions, index) = tiny_fixture();
        let stops = StopwordSet::default_list();
        let report =
            evaluate_run(&tasks, &solutions, &index, &stops, &EvalConfig::default()).unwrap();
        assert_eq!(report.nts, 1);
        assert_eq!(report.pts, 0.5);
        // task 1 solves at rank 1 (apk 1.0), task 2 finds nothing (apk 0.0)
        assert!((report.mapk_all - 0.5).abs() < 1e-12);
        assert!((report.mapk_solved - 1.0).abs() < 1e-12);
        assert!((report.mean_recall - 0.5).abs() < 1e-12);
    }

    #[test]
    fn solved_iff_positive_apk_iff_positive_recall() {
        let (tasks, solutions, index) = tiny_fixture();
        let stops = StopwordSet::default_list();
        let report =
            evaluate_run(&tasks, &solutions, &index, &stops, &EvalConfig::default()).unwrap();
        for outcome in &report.outcomes {
            assert_eq!(outcome.solved, outcome.apk > 0.0);
            assert_eq!(outcome.solved, outcome.recall > 0.0);
        }
    }

    #[test]
    fn empty_task_set_is_an_error() {
        let (_, solutions, index) = tiny_fixture();
        let stops = StopwordSet::default_list();
        assert!(matches!(
            evaluate_run(&[], &solutions, &index, &stops, &EvalConfig::default()),
            Err(Error::EmptyTaskSet)
        ));
    }

    #[test]
    fn missing_solution_names_the_task() {
        let (tasks, mut solutions, index) = tiny_fixture();
        solutions.remove("2");
        let stops = StopwordSet::default_list();
        assert!(matches!(
            evaluate_run(&tasks, &solutions, &index, &stops, &EvalConfig::default()),
            Err(Error::MissingSolutions(ids)) if ids == vec!["2".to_string()]
        ));
    }

    #[test]
    fn solution_outside_corpus_is_rejected() {
        let (tasks, mut solutions, index) = tiny_fixture();
        solutions.insert("2".to_string(), solution("2", &["Ghost.java"]));
        let stops = StopwordSet::default_list();
        assert!(matches!(
            evaluate_run(&tasks, &solutions, &index, &stops, &EvalConfig::default()),
            Err(Error::SolutionFileNotInCorpus { path, .. }) if path == "Ghost.java"
        ));
    }

    #[test]
    fn report_is_reorder_invariant() {
        let (mut tasks, solutions, index) = tiny_fixture();
        let stops = StopwordSet::default_list();
        let forward =
            evaluate_run(&tasks, &solutions, &index, &stops, &EvalConfig::default()).unwrap();
        tasks.reverse();
        let backward =
            evaluate_run(&tasks, &solutions, &index, &stops, &EvalConfig::default()).unwrap();
        assert_eq!(forward, backward);
    }
}
