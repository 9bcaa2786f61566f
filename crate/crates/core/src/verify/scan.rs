use std::fs;
use std::ops::Range;
use std::path::PathBuf;
use std::thread;
use std::time::Instant;

use serde::Serialize;

use super::{CheckId, CheckOutcome, Checker, Facts};
use crate::enumerate::{enumerate_range, labeled_count, shard_ranges, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Where graphs come from.
#[derive(Debug, Clone)]
pub enum Source {
    /// Every labeled graph on `n` vertices, by edge mask.
    Enumeration { n: usize },
    /// One graph6 record per line.
    Corpus { path: PathBuf },
    /// In-memory records, named for reports.
    Records { name: String, lines: Vec<String> },
}

impl Source {
    pub fn describe(&self) -> String {
        match self {
            Source::Enumeration { n } => format!("enumeration(n={n})"),
            Source::Corpus { path } => format!("corpus({})", path.display()),
            Source::Records { name, .. } => format!("records({name})"),
        }
    }
}

/// A corpus line that could not be used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseFailure {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub check: CheckId,
    pub source: String,
    pub scanned: u64,
    pub applicable: u64,
    /// graph6 records, sorted and deduplicated.
    pub counterexamples: Vec<String>,
    pub skipped_records: u64,
    pub elapsed_ms: u64,
    pub tool_version: String,
    #[serde(skip)]
    pub parse_failures: Vec<ParseFailure>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

enum Loaded {
    Enumeration(usize),
    Records { graphs: Vec<(u64, Graph)>, failures: Vec<ParseFailure> },
}

impl Loaded {
    fn load(source: &Source) -> Result<Self> {
        let lines = match source {
            Source::Enumeration { n } => {
                if *n > ENUMERATION_CAP {
                    return Err(Error::LimitExceeded { what: "labeled enumeration", limit: ENUMERATION_CAP, n: *n });
                }
                return Ok(Loaded::Enumeration(*n));
            }
            Source::Corpus { path } => fs::read_to_string(path)
                .map_err(|e| Error::Corpus { path: path.display().to_string(), message: e.to_string() })?
                .lines()
                .map(str::to_owned)
                .collect(),
            Source::Records { lines, .. } => lines.clone(),
        };
        let mut graphs = Vec::new();
        let mut failures = Vec::new();
        for (i, raw) in lines.iter().enumerate() {
            let line = i + 1;
            let text = raw.trim_end_matches(['\r', '\n']).trim();
            if text.is_empty() {
                continue;
            }
            match from_graph6(text) {
                Ok(g) => graphs.push((line as u64, g)),
                Err(e) => failures.push(ParseFailure { line, message: e.to_string() }),
            }
        }
        Ok(Loaded::Records { graphs, failures })
    }

    fn max_order(&self) -> usize {
        match self {
            Loaded::Enumeration(n) => *n,
            Loaded::Records { graphs, .. } => graphs.iter().map(|(_, g)| g.order()).max().unwrap_or(0),
        }
    }

    fn len(&self) -> u64 {
        match self {
            Loaded::Enumeration(n) => labeled_count(*n),
            Loaded::Records { graphs, .. } => graphs.len() as u64,
        }
    }

    /// Graphs in positions `range`, each with its scan key (edge mask or
    /// line number).
    fn visit(&self, range: Range<u64>, mut f: impl FnMut(u64, &Graph) -> bool) {
        match self {
            Loaded::Enumeration(n) => {
                let start = range.start;
                for (i, g) in enumerate_range(*n, range).expect("n checked").enumerate() {
                    if !f(start + i as u64, &g) {
                        return;
                    }
                }
            }
            Loaded::Records { graphs, .. } => {
                for (line, g) in &graphs[range.start as usize..range.end as usize] {
                    if !f(*line, g) {
                        return;
                    }
                }
            }
        }
    }
}

fn fan_out<T: Send>(loaded: &Loaded, shards: usize, work: impl Fn(Range<u64>) -> T + Sync) -> Vec<T> {
    let ranges = shard_ranges(loaded.len(), shards);
    if ranges.len() == 1 {
        return vec![work(ranges[0].clone())];
    }
    thread::scope(|s| {
        let handles: Vec<_> = ranges.into_iter().map(|r| s.spawn(|| work(r))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

#[derive(Default)]
struct Tally {
    scanned: u64,
    applicable: u64,
    counterexamples: Vec<String>,
}

/// Evaluates every requested check on every graph of `source`, split over
/// `shards` workers. Output does not depend on `shards` apart from
/// `elapsed_ms`.
pub fn run_suite(source: &Source, checks: &[CheckId], shards: usize) -> Result<Vec<VerifyReport>> {
    let started = Instant::now();
    let loaded = Loaded::load(source)?;
    let checker = Checker::new(loaded.max_order());
    let per_shard = fan_out(&loaded, shards, |range| {
        let mut tallies: Vec<Tally> = checks.iter().map(|_| Tally::default()).collect();
        let mut failures = Vec::new();
        loaded.visit(range, |key, g| {
            let facts = match Facts::new(g) {
                Ok(f) => f,
                Err(e) => {
                    failures.push(ParseFailure { line: key as usize, message: e.to_string() });
                    return true;
                }
            };
            for (tally, &id) in tallies.iter_mut().zip(checks) {
                tally.scanned += 1;
                match checker.check_with(&facts, id) {
                    Ok(CheckOutcome::Pass) => tally.applicable += 1,
                    Ok(CheckOutcome::Fail) => {
                        tally.applicable += 1;
                        tally.counterexamples.push(to_graph6(g));
                    }
                    Ok(CheckOutcome::NotApplicable) => {}
                    Err(e) => failures.push(ParseFailure { line: key as usize, message: e.to_string() }),
                }
            }
            true
        });
        (tallies, failures)
    });

    let mut failures = match &loaded {
        Loaded::Records { failures, .. } => failures.clone(),
        Loaded::Enumeration(_) => Vec::new(),
    };
    let mut merged: Vec<Tally> = checks.iter().map(|_| Tally::default()).collect();
    for (tallies, shard_failures) in per_shard {
        failures.extend(shard_failures);
        for (m, t) in merged.iter_mut().zip(tallies) {
            m.scanned += t.scanned;
            m.applicable += t.applicable;
            m.counterexamples.extend(t.counterexamples);
        }
    }
    failures.sort_by(|a, b| (a.line, &a.message).cmp(&(b.line, &b.message)));
    failures.dedup();
    let skipped_lines = {
        let mut lines: Vec<usize> = failures.iter().map(|f| f.line).collect();
        lines.dedup();
        lines.len() as u64
    };
    let elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(checks
        .iter()
        .zip(merged)
        .map(|(&check, mut t)| {
            t.counterexamples.sort();
            t.counterexamples.dedup();
            VerifyReport {
                check,
                source: source.describe(),
                scanned: t.scanned,
                applicable: t.applicable,
                counterexamples: t.counterexamples,
                skipped_records: skipped_lines,
                elapsed_ms,
                tool_version: TOOL_VERSION.to_string(),
                parse_failures: failures.clone(),
            }
        })
        .collect())
}

/// The first `stop_after` failing graphs in scan order.
pub fn hunt(source: &Source, id: CheckId, stop_after: usize, shards: usize) -> Result<Vec<String>> {
    let loaded = Loaded::load(source)?;
    let checker = Checker::new(loaded.max_order());
    let per_shard = fan_out(&loaded, shards, |range| {
        let mut found: Vec<(u64, String)> = Vec::new();
        let mut error = None;
        loaded.visit(range, |key, g| {
            match checker.check(g, id) {
                Ok(CheckOutcome::Fail) => found.push((key, to_graph6(g))),
                Ok(_) => {}
                Err(Error::LimitExceeded { .. }) => {}
                Err(e) => {
                    error = Some(e);
                    return false;
                }
            }
            found.len() < stop_after
        });
        error.map_or(Ok(found), Err)
    });
    let mut all = Vec::new();
    for shard in per_shard {
        all.extend(shard?);
    }
    all.sort();
    Ok(all.into_iter().take(stop_after).map(|(_, g6)| g6).collect())
}
