//! Command-line front end: suggest search terms for change tasks, index and
//! search a corpus, and evaluate suggestion methods against gold solutions.
//!
//! Results go to stdout; warnings and errors go to stderr. Machine-readable
//! output (`--json`) is byte-identical across runs for the same inputs and
//! flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use termsuggest::evaluate::{evaluate_run, EvalConfig, EvalReport};
use termsuggest::ingest::{load_corpus, load_solutions, load_tasks, ChangeTask};
use termsuggest::preprocess::{preprocess_task, StopwordSet};
use termsuggest::queryselect::{
    select_kevic, select_random_summary, select_textrank, task_document_frequencies,
    HeuristicWeights, Query, QueryMethod, DEFAULT_HEURISTIC_QUERY_LEN, DEFAULT_QUERY_LEN,
};
use termsuggest::searchengine::{
    build_index, load_snapshot, save_snapshot, search, Index, DEFAULT_CUTOFF,
};
use termsuggest::textgraph::build_default_graph;
use termsuggest::textrank::{rank, RankConfig};

#[derive(Parser)]
#[command(
    name = "termsuggest",
    about = "Suggest and evaluate search terms for software change tasks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Suggest search terms for change tasks
    Suggest(SuggestArgs),
    /// Build a corpus index and save it as a snapshot
    Index(IndexArgs),
    /// Search a corpus or snapshot with explicit terms
    Search(SearchArgs),
    /// Evaluate a suggestion method against gold solution sets
    Evaluate(EvaluateArgs),
    /// Evaluate two methods side by side
    Compare(CompareArgs),
}

#[derive(Args, Clone)]
struct RankFlags {
    /// Damping factor of the score iteration
    #[arg(long, default_value_t = 0.85)]
    damping: f64,
    /// Initial node score
    #[arg(long, default_value_t = 0.25)]
    init: f64,
    /// Convergence threshold on the largest per-node change
    #[arg(long, default_value_t = 1e-4)]
    epsilon: f64,
    /// Iteration cap
    #[arg(long = "max-iters", default_value_t = 100)]
    max_iterations: usize,
}

impl RankFlags {
    fn to_config(&self) -> RankConfig {
        RankConfig {
            damping: self.damping,
            init_score: self.init,
            epsilon: self.epsilon,
            max_iterations: self.max_iterations,
        }
    }
}

#[derive(Args)]
struct SuggestArgs {
    /// Task file (JSON array)
    #[arg(long)]
    tasks: PathBuf,
    /// Only suggest for these task ids (default: all tasks)
    #[arg(long = "task-id")]
    task_ids: Vec<String>,
    /// Stopword file overriding the bundled list
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Suggestion method: textrank, kevic, or random
    #[arg(long, default_value = "textrank")]
    method: QueryMethod,
    /// Query length (default: 5, or 3 for kevic)
    #[arg(long)]
    k: Option<usize>,
    /// Seed for the random baseline
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Weights file for the kevic baseline
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Write the co-occurrence edge list of each task's graph here
    #[arg(long = "dump-graph")]
    dump_graph: Option<PathBuf>,
    #[command(flatten)]
    rank: RankFlags,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct IndexArgs {
    /// Corpus root directory
    #[arg(long)]
    corpus: PathBuf,
    /// Glob patterns selecting corpus files (default: everything)
    #[arg(long = "glob", default_value = "**/*")]
    globs: Vec<String>,
    /// Snapshot file to write
    #[arg(long)]
    out: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Corpus root directory (builds a fresh index)
    #[arg(long, conflicts_with = "snapshot")]
    corpus: Option<PathBuf>,
    /// Glob patterns selecting corpus files
    #[arg(long = "glob", default_value = "**/*")]
    globs: Vec<String>,
    /// Index snapshot produced by `index`
    #[arg(long)]
    snapshot: Option<PathBuf>,
    /// Number of results
    #[arg(long, default_value_t = DEFAULT_CUTOFF as u64, value_parser = clap::value_parser!(u64).range(1..))]
    cutoff: u64,
    /// Query terms
    #[arg(required = true)]
    terms: Vec<String>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvaluateArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Emit the full report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Task file (JSON array)
    #[arg(long)]
    tasks: PathBuf,
    /// Solutions file (JSON array)
    #[arg(long)]
    solutions: PathBuf,
    /// Corpus root directory
    #[arg(long)]
    corpus: PathBuf,
    /// Glob patterns selecting corpus files
    #[arg(long = "glob", default_value = "**/*")]
    globs: Vec<String>,
    /// Stopword file overriding the bundled list
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Suggestion method: textrank, kevic, or random
    #[arg(long, default_value = "textrank")]
    method: QueryMethod,
    /// Query length (default: 5, or 3 for kevic)
    #[arg(long)]
    k: Option<usize>,
    /// Ranked-result cutoff
    #[arg(long, default_value_t = DEFAULT_CUTOFF as u64, value_parser = clap::value_parser!(u64).range(1..))]
    cutoff: u64,
    /// Seed for the random baseline
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Weights file for the kevic baseline
    #[arg(long)]
    weights: Option<PathBuf>,
    #[command(flatten)]
    rank: RankFlags,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Second method for the right-hand column
    #[arg(long = "method-b", default_value = "kevic")]
    method_b: QueryMethod,
    /// Query length for the second method (default: 5, or 3 for kevic)
    #[arg(long = "k-b")]
    k_b: Option<usize>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Suggest(args) => cmd_suggest(args),
        Command::Index(args) => cmd_index(args),
        Command::Search(args) => cmd_search(args),
        Command::Evaluate(args) => cmd_evaluate(args),
        Command::Compare(args) => cmd_compare(args),
    }
}

fn default_k(method: QueryMethod, k: Option<usize>) -> Result<usize> {
    let k = k.unwrap_or(match method {
        QueryMethod::KevicHeuristic => DEFAULT_HEURISTIC_QUERY_LEN,
        _ => DEFAULT_QUERY_LEN,
    });
    if k == 0 {
        bail!("--k must be at least 1");
    }
    Ok(k)
}

fn load_stops(path: &Option<PathBuf>) -> Result<StopwordSet> {
    Ok(match path {
        Some(p) => StopwordSet::from_file(p)?,
        None => StopwordSet::default_list(),
    })
}

fn load_weights(path: &Option<PathBuf>) -> Result<HeuristicWeights> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("failed to read weights file {}", p.display()))?;
            serde_json::from_str(&text)
                .with_context(|| format!("malformed weights file {}", p.display()))
        }
        None => Ok(HeuristicWeights::default()),
    }
}

fn select_tasks(all: Vec<ChangeTask>, ids: &[String]) -> Result<Vec<ChangeTask>> {
    if ids.is_empty() {
        return Ok(all);
    }
    let mut picked = Vec::new();
    for id in ids {
        match all.iter().find(|t| &t.id == id) {
            Some(task) => picked.push(task.clone()),
            None => return Err(termsuggest::Error::UnknownTaskId(id.clone()).into()),
        }
    }
    Ok(picked)
}

fn cmd_suggest(args: SuggestArgs) -> Result<()> {
    let k = default_k(args.method, args.k)?;
    let stops = load_stops(&args.stopwords)?;
    let weights = load_weights(&args.weights)?;
    let tasks = select_tasks(load_tasks(&args.tasks)?, &args.task_ids)?;
    let rank_config = args.rank.to_config();
    let stats = task_document_frequencies(&tasks, &stops);

    let mut queries: Vec<SuggestOutput> = Vec::new();
    for task in &tasks {
        let (query, normalized) = match args.method {
            QueryMethod::TextRank => {
                let sentences = preprocess_task(task, &stops);
                let graph = build_default_graph(&sentences)?;
                if let Some(dump) = &args.dump_graph {
                    std::fs::write(dump, graph.dump_edges())
                        .with_context(|| format!("failed to write {}", dump.display()))?;
                }
                let scores = rank(&graph, &rank_config)?;
                if !scores.converged {
                    eprintln!(
                        "warning: task {} stopped after {} iterations without converging",
                        task.id, scores.iterations_used
                    );
                }
                let query = select_textrank(&task.id, &scores, &sentences, k);
                let normalized = query
                    .terms
                    .iter()
                    .map(|t| {
                        scores
                            .scores
                            .get(&termsuggest::preprocess::term_key(&t.term))
                            .map_or(0.0, |s| s.normalized)
                    })
                    .collect();
                (query, normalized)
            }
            QueryMethod::KevicHeuristic => {
                let query = select_kevic(task, &stats, &stops, &weights, k)?;
                let scores = query.terms.iter().map(|t| t.score).collect();
                (query, scores)
            }
            QueryMethod::RandomSummary => {
                let query = select_random_summary(task, &stops, k, args.seed);
                let scores = query.terms.iter().map(|t| t.score).collect();
                (query, scores)
            }
        };
        queries.push(SuggestOutput { query, normalized });
    }

    if args.json {
        println!("{}", serde_json::to_string_pretty(&queries)?);
    } else {
        for entry in &queries {
            println!(
                "# task {} (method={}, k={})",
                entry.query.task_id, entry.query.method, k
            );
            for (i, term) in entry.query.terms.iter().enumerate() {
                println!(
                    "{}\t{}\t{:.4}\t{}",
                    i + 1,
                    term.term,
                    entry.normalized[i],
                    term.source
                );
            }
        }
    }
    Ok(())
}

/// A suggested query plus the printable per-term scores (normalized weights
/// for textrank, raw linear scores otherwise).
#[derive(Serialize)]
struct SuggestOutput {
    #[serde(flatten)]
    query: Query,
    normalized: Vec<f64>,
}

fn build_corpus_index(root: &Path, globs: &[String]) -> Result<Index> {
    let load = load_corpus(root, globs)?;
    for skipped in &load.skipped {
        eprintln!("warning: skipped {}: {}", skipped.path, skipped.reason);
    }
    Ok(build_index(&load.documents)?)
}

fn cmd_index(args: IndexArgs) -> Result<()> {
    let index = build_corpus_index(&args.corpus, &args.globs)?;
    save_snapshot(&index, &args.out)?;
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "documents": index.doc_count(),
                "terms": index.term_count(),
                "snapshot": args.out.display().to_string(),
            })
        );
    } else {
        println!(
            "indexed {} documents ({} terms) -> {}",
            index.doc_count(),
            index.term_count(),
            args.out.display()
        );
    }
    Ok(())
}

fn cmd_search(args: SearchArgs) -> Result<()> {
    let index = match (&args.snapshot, &args.corpus) {
        (Some(snapshot), _) => load_snapshot(snapshot)?,
        (None, Some(corpus)) => build_corpus_index(corpus, &args.globs)?,
        (None, None) => bail!("either --corpus or --snapshot is required"),
    };
    let result = search(&index, &args.terms, args.cutoff as usize);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&result.ranked)?);
    } else {
        for (i, hit) in result.ranked.iter().enumerate() {
            println!("{}\t{}\t{:.6}", i + 1, hit.path, hit.score);
        }
    }
    Ok(())
}

fn run_evaluation(run: &RunArgs, method: QueryMethod, k: Option<usize>) -> Result<EvalReport> {
    let k = default_k(method, k)?;
    let stops = load_stops(&run.stopwords)?;
    let weights = load_weights(&run.weights)?;
    let tasks = load_tasks(&run.tasks)?;
    let solutions: BTreeMap<_, _> = load_solutions(&run.solutions)?;
    let index = build_corpus_index(&run.corpus, &run.globs)?;
    let config = EvalConfig {
        method,
        k,
        cutoff: run.cutoff as usize,
        seed: run.seed,
        rank: run.rank.to_config(),
        weights,
    };
    Ok(evaluate_run(&tasks, &solutions, &index, &stops, &config)?)
}

fn print_report_text(report: &EvalReport) {
    println!(
        "method={} k={} cutoff={} seed={}",
        report.method, report.k, report.cutoff, report.seed
    );
    println!(
        "tasks={} solved={} ({:.2}%)",
        report.outcomes.len(),
        report.nts,
        report.pts * 100.0
    );
    println!(
        "mapk_all={:.4} mapk_solved={:.4} mean_recall={:.4}",
        report.mapk_all, report.mapk_solved, report.mean_recall
    );
    for outcome in &report.outcomes {
        println!(
            "task {}\tsolved={}\tapk={:.4}\trecall={:.4}\tquery={}",
            outcome.task_id,
            outcome.solved,
            outcome.apk,
            outcome.recall,
            outcome.query.term_strings().join(",")
        );
    }
}

fn cmd_evaluate(args: EvaluateArgs) -> Result<()> {
    let report = run_evaluation(&args.run, args.run.method, args.run.k)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print_report_text(&report);
    }
    Ok(())
}

/// Aggregate column of a comparison, without per-task outcomes.
#[derive(Serialize)]
struct CompareColumn {
    method: QueryMethod,
    k: usize,
    nts: usize,
    total: usize,
    pts: f64,
    mapk_all: f64,
    mapk_solved: f64,
    mean_recall: f64,
}

impl CompareColumn {
    fn from_report(report: &EvalReport) -> Self {
        CompareColumn {
            method: report.method,
            k: report.k,
            nts: report.nts,
            total: report.outcomes.len(),
            pts: report.pts,
            mapk_all: report.mapk_all,
            mapk_solved: report.mapk_solved,
            mean_recall: report.mean_recall,
        }
    }
}

fn cmd_compare(args: CompareArgs) -> Result<()> {
    let left = run_evaluation(&args.run, args.run.method, args.run.k)?;
    let right = run_evaluation(&args.run, args.method_b, args.k_b)?;
    let columns = (
        CompareColumn::from_report(&left),
        CompareColumn::from_report(&right),
    );
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "a": columns.0,
                "b": columns.1,
                "cutoff": left.cutoff,
                "seed": left.seed,
            }))?
        );
    } else {
        let (a, b) = &columns;
        println!(
            "metric      \t{}(k={})\t{}(k={})",
            a.method, a.k, b.method, b.k
        );
        println!(
            "NTS         \t{}({})\t{}({})",
            a.nts, a.total, b.nts, b.total
        );
        println!("PTS         \t{:.2}%\t{:.2}%", a.pts * 100.0, b.pts * 100.0);
        println!("MAP(all)    \t{:.4}\t{:.4}", a.mapk_all, b.mapk_all);
        println!("MAP(solved) \t{:.4}\t{:.4}", a.mapk_solved, b.mapk_solved);
        println!("MeanRecall  \t{:.4}\t{:.4}", a.mean_recall, b.mean_recall);
    }
    Ok(())
}
