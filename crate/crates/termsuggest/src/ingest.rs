//! Loading change tasks, solution sets, and source corpora from disk.
//!
//! Tasks and solutions are JSON arrays (see the repository README for the
//! exact shapes); the corpus is a plain directory tree selected by glob
//! patterns. All input is decoded as UTF-8 with invalid bytes replaced, so
//! stray bytes in real bug reports never abort a run.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use globset::{Glob, GlobSet, GlobSetBuilder};
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::error::Error;

/// One change request: identity fields plus the two text fields the
/// suggestion pipeline actually analyzes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChangeTask {
    pub id: String,
    #[serde(default)]
    pub product: String,
    #[serde(default)]
    pub component: String,
    #[serde(default)]
    pub summary: String,
    #[serde(default)]
    pub description: String,
}

/// Gold solution for a task: the corpus-relative paths of the files its
/// resolving changeset touched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub task_id: String,
    pub files: BTreeSet<String>,
}

/// One indexable corpus file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusDocument {
    /// Corpus-relative path with `/` separators on every platform.
    pub path: String,
    pub text: String,
}

/// A corpus file that could not be read and was skipped with a warning.
#[derive(Debug, Clone)]
pub struct SkippedFile {
    pub path: String,
    pub reason: String,
}

/// Result of [`load_corpus`]: the documents plus a record of skips.
#[derive(Debug, Clone, Default)]
pub struct CorpusLoad {
    pub documents: Vec<CorpusDocument>,
    pub skipped: Vec<SkippedFile>,
}

fn read_lossy(path: &Path) -> Result<String, Error> {
    let bytes = std::fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

/// Load a task file: a JSON array of objects with string fields
/// `id`, `product`, `component`, `summary`, `description`.
///
/// Tasks come back in file order. Duplicate ids and tasks whose summary and
/// description are both empty are rejected.
pub fn load_tasks(path: &Path) -> Result<Vec<ChangeTask>, Error> {
    let text = read_lossy(path)?;
    let tasks: Vec<ChangeTask> = serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    let mut seen = BTreeSet::new();
    for task in &tasks {
        if !seen.insert(task.id.clone()) {
            return Err(Error::DuplicateTaskId(task.id.clone()));
        }
        if task.summary.trim().is_empty() && task.description.trim().is_empty() {
            return Err(Error::EmptyTask {
                id: task.id.clone(),
            });
        }
    }
    Ok(tasks)
}

#[derive(Deserialize)]
struct SolutionRecord {
    id: String,
    files: Vec<String>,
}

/// Load a solutions file: a JSON array of `{"id": ..., "files": [...]}`.
/// Every entry must list at least one file.
pub fn load_solutions(path: &Path) -> Result<BTreeMap<String, SolutionSet>, Error> {
    let text = read_lossy(path)?;
    let records: Vec<SolutionRecord> =
        serde_json::from_str(&text).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        })?;
    let mut solutions = BTreeMap::new();
    for record in records {
        if record.files.is_empty() {
            return Err(Error::EmptySolutionSet { id: record.id });
        }
        let entry = SolutionSet {
            task_id: record.id.clone(),
            files: record
                .files
                .into_iter()
                .map(|f| normalize_separators(&f))
                .collect(),
        };
        if solutions.insert(record.id.clone(), entry).is_some() {
            return Err(Error::DuplicateSolutionId(record.id));
        }
    }
    Ok(solutions)
}

fn normalize_separators(path: &str) -> String {
    path.replace('\\', "/")
}

fn build_globset(patterns: &[String]) -> Result<GlobSet, Error> {
    let mut builder = GlobSetBuilder::new();
    for pattern in patterns {
        let glob = Glob::new(pattern).map_err(|source| Error::BadGlob {
            pattern: pattern.clone(),
            source,
        })?;
        builder.add(glob);
    }
    builder.build().map_err(|source| Error::BadGlob {
        pattern: patterns.join(","),
        source,
    })
}

/// Walk `root` and load every file matching any of the glob patterns.
///
/// Document paths are relative to `root` with `/` separators and the result
/// is sorted by path, so corpora load identically on every platform.
/// Unreadable files are skipped and recorded; matching nothing is an error.
pub fn load_corpus(root: &Path, include_globs: &[String]) -> Result<CorpusLoad, Error> {
    let globs = build_globset(include_globs)?;
    let mut load = CorpusLoad::default();
    let mut matched = 0usize;
    for entry in WalkDir::new(root).follow_links(true).sort_by_file_name() {
        let entry = match entry {
            Ok(e) => e,
            Err(err) => {
                load.skipped.push(SkippedFile {
                    path: err
                        .path()
                        .map(|p| p.display().to_string())
                        .unwrap_or_default(),
                    reason: err.to_string(),
                });
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(root)
            .unwrap_or(entry.path())
            .components()
            .map(|c| c.as_os_str().to_string_lossy())
            .collect::<Vec<_>>()
            .join("/");
        if !globs.is_match(&rel) {
            continue;
        }
        matched += 1;
        match read_lossy(entry.path()) {
            Ok(text) => load.documents.push(CorpusDocument { path: rel, text }),
            Err(err) => load.skipped.push(SkippedFile {
                path: rel,
                reason: err.to_string(),
            }),
        }
    }
    if matched == 0 {
        return Err(Error::NoCorpusMatches {
            root: root.to_path_buf(),
        });
    }
    load.documents.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(load)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    #[test]
    fn loads_single_task() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tasks.json");
        fs::write(
            &path,
            r#"[{"id":"401358","product":"JDT","component":"Debug",
                "summary":"Name selection for Mac VM installs needs improvement",
                "description":"details"}]"#,
        )
        .unwrap();
        let tasks = load_tasks(&path).unwrap();
        assert_eq!(tasks.len(), 1);
        assert_eq!(tasks[0].id, "401358");
        assert_eq!(
            tasks[0].summary,
            "Name selection for Mac VM installs needs improvement"
        );
    }

    #[test]
    fn empty_array_is_empty_list() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tasks.json");
        fs::write(&path, "[]").unwrap();
        assert!(load_tasks(&path).unwrap().is_empty());
    }

    #[test]
    fn duplicate_task_id_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tasks.json");
        fs::write(
            &path,
            r#"[{"id":"7","summary":"a problem","description":""},
                {"id":"7","summary":"another","description":""}]"#,
        )
        .unwrap();
        assert!(matches!(load_tasks(&path), Err(Error::DuplicateTaskId(id)) if id == "7"));
    }

    #[test]
    fn task_with_no_text_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tasks.json");
        fs::write(&path, r#"[{"id":"9","summary":"","description":" "}]"#).unwrap();
        assert!(matches!(load_tasks(&path), Err(Error::EmptyTask { id }) if id == "9"));
    }

    #[test]
    fn missing_task_file_is_io_error() {
        assert!(matches!(
            load_tasks(Path::new("/nonexistent/tasks.json")),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn loads_solution_map() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("solutions.json");
        fs::write(&path, r#"[{"id":"401358","files":["a/B.java"]}]"#).unwrap();
        let solutions = load_solutions(&path).unwrap();
        assert_eq!(solutions.len(), 1);
        assert!(solutions["401358"].files.contains("a/B.java"));
    }

    #[test]
    fn empty_solutions_file_is_empty_map() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("solutions.json");
        fs::write(&path, "[]").unwrap();
        assert!(load_solutions(&path).unwrap().is_empty());
    }

    #[test]
    fn solution_without_files_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("solutions.json");
        fs::write(&path, r#"[{"id":"3","files":[]}]"#).unwrap();
        assert!(matches!(
            load_solutions(&path),
            Err(Error::EmptySolutionSet { id }) if id == "3"
        ));
    }

    #[test]
    fn corpus_load_finds_nested_files() {
        let dir = tempfile::tempdir().unwrap();
        fs::create_dir_all(dir.path().join("a/b")).unwrap();
        fs::write(dir.path().join("Top.java"), "class Top {}").unwrap();
        fs::write(dir.path().join("a/Mid.java"), "class Mid {}").unwrap();
        fs::write(dir.path().join("a/b/C.java"), "class C {}").unwrap();
        fs::write(dir.path().join("a/readme.txt"), "not java").unwrap();
        let load = load_corpus(dir.path(), &["**/*.java".to_string()]).unwrap();
        let paths: Vec<&str> = load.documents.iter().map(|d| d.path.as_str()).collect();
        assert_eq!(paths, vec!["Top.java", "a/Mid.java", "a/b/C.java"]);
        assert!(load.skipped.is_empty());
    }

    #[test]
    fn zero_matches_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("only.txt"), "text").unwrap();
        assert!(matches!(
            load_corpus(dir.path(), &["**/*.scala".to_string()]),
            Err(Error::NoCorpusMatches { .. })
        ));
    }

    #[test]
    fn unreadable_files_are_skipped_and_counted() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("Ok.java"), "class Ok {}").unwrap();
        // a dangling symlink fails to resolve during the walk
        std::os::unix::fs::symlink(dir.path().join("gone"), dir.path().join("Broken.java"))
            .unwrap();

        let load = load_corpus(dir.path(), &["**/*.java".to_string()]).unwrap();
        // documents = matched files minus skips
        assert_eq!(load.documents.len(), 1);
        assert_eq!(load.documents[0].path, "Ok.java");
        assert_eq!(load.skipped.len(), 1);
        assert!(load.skipped[0].path.ends_with("Broken.java"));
    }

    #[test]
    fn solutions_round_trip_through_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("solutions.json");
        fs::write(
            &path,
            r#"[{"id":"1","files":["a/B.java","c/D.java"]},{"id":"2","files":["e/F.java"]}]"#,
        )
        .unwrap();
        let loaded = load_solutions(&path).unwrap();

        let records: Vec<serde_json::Value> = loaded
            .values()
            .map(|s| {
                serde_json::json!({
                    "id": s.task_id,
                    "files": s.files.iter().collect::<Vec<_>>(),
                })
            })
            .collect();
        let reserialized = dir.path().join("again.json");
        fs::write(&reserialized, serde_json::to_string(&records).unwrap()).unwrap();
        assert_eq!(load_solutions(&reserialized).unwrap(), loaded);
    }

    #[test]
    fn tasks_round_trip_through_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tasks.json");
        let tasks = vec![
            ChangeTask {
                id: "1".into(),
                product: "P".into(),
                component: "C".into(),
                summary: "crash in wizard".into(),
                description: "details here.".into(),
            },
            ChangeTask {
                id: "2".into(),
                product: String::new(),
                component: String::new(),
                summary: "slow startup".into(),
                description: String::new(),
            },
        ];
        fs::write(&path, serde_json::to_string(&tasks).unwrap()).unwrap();
        assert_eq!(load_tasks(&path).unwrap(), tasks);
    }
}
