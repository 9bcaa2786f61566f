mod input;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};

use reslab::degseq::{hh_trace, residue, residue_seq, DegreeSequence};
use reslab::heuristics::{maxine_all, maxine_run, TieBreak};
use reslab::independence::{all_mis, mdi_vertices};
use reslab::patterns::{cycle, f_catalog, find_induced, gen_f_member, has_p5_star, path, FKind, Variant};
use reslab::verify::{check_one, hunt, run_suite, CheckId, CheckOutcome, Source, VerifyReport};
use reslab::Error;

use input::read_graph;

const DEFAULT_MAX_N: usize = 7;
const HARD_MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "reslab", version, about = "Havel-Hakimi residue, Maxine and MDI structure checks on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Havel-Hakimi residue of a graph or a degree sequence.
    Residue {
        /// graph6 string, @file or - for stdin.
        graph: Option<String>,
        #[arg(long, conflicts_with = "graph")]
        degseq: Option<String>,
    },
    /// Every sequence visited by Havel-Hakimi.
    HhTrace {
        #[arg(long)]
        degseq: String,
    },
    /// Run the Maxine heuristic once, or explore every tie-break.
    Maxine {
        graph: String,
        #[arg(long, conflicts_with_all = ["policy", "seed"])]
        all: bool,
        #[arg(long, value_enum, default_value = "low")]
        policy: Policy,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Independence number, optionally with every maximum independent set.
    Alpha {
        graph: String,
        #[arg(long)]
        enumerate: bool,
    },
    /// Vertices of maximum degree that lie in every maximum independent set.
    Mdi { graph: String },
    /// Look for induced patterns: c4, p5, p5star, f or f:MAXN.
    Detect {
        graph: String,
        #[arg(long, value_delimiter = ',', required = true)]
        patterns: Vec<String>,
    },
    /// Print family members as `graph6<TAB>roles`.
    GenF {
        #[arg(long, value_enum, ignore_case = true)]
        case: Case,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        variant: Option<Side>,
        /// Also print members that fail the MDI check.
        #[arg(long)]
        raw: bool,
    },
    /// Evaluate one claim on one graph.
    Check {
        graph: String,
        #[arg(long)]
        check: String,
    },
    /// Scan an enumeration or a corpus for counterexamples.
    Verify {
        /// Check id, comma-separated ids, or `all`.
        #[arg(long, required = true)]
        check: String,
        #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
        enum_n: Option<usize>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        shards: Option<usize>,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Stop after this many counterexamples and list them.
        #[arg(long)]
        stop_after: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Low,
    High,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    A,
    B,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Same,
    Opposite,
}

/// A run outcome: text for stdout and whether a violation was found.
struct Done {
    out: String,
    violation: bool,
}

impl Done {
    fn ok(out: String) -> Self {
        Done { out, violation: false }
    }
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(done) => {
            print!("{}", done.out);
            if done.violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn graph(arg: &str) -> Result<reslab::Graph, Failure> {
    read_graph(arg).map_err(Failure::Usage)
}

fn degseq(text: &str) -> Result<DegreeSequence, Failure> {
    DegreeSequence::from_str(text).map_err(Failure::from)
}

fn run(command: Command) -> Result<Done, Failure> {
    match command {
        Command::Residue { graph: g, degseq: d } => {
            let r = match (g, d) {
                (Some(g), None) => residue(&graph(&g)?),
                (None, Some(d)) => residue_seq(&degseq(&d)?).map_err(|e| Failure::Violation(e.to_string()))?,
                _ => return Err(Failure::Usage("give a graph or --degseq".into())),
            };
            Ok(Done::ok(format!("R = {r}\n")))
        }
        Command::HhTrace { degseq: d } => {
            let d = degseq(&d)?;
            match hh_trace(&d) {
                Ok(t) => {
                    let mut out = String::new();
                    for s in &t.steps {
                        writeln!(out, "{s}").unwrap();
                    }
                    writeln!(out, "R = {}", t.terminal_zero_count).unwrap();
                    Ok(Done::ok(out))
                }
                Err(e) => Err(Failure::Violation(format!("{d} is not graphic: {e}"))),
            }
        }
        Command::Maxine { graph: g, all, policy, seed } => {
            let g = graph(&g)?;
            if all {
                let s = maxine_all(&g)?;
                let sizes: Vec<String> = s.achievable_sizes.iter().map(|m| m.to_string()).collect();
                return Ok(Done::ok(format!("achievable M: {{{}}}\n", sizes.join(","))));
            }
            let tie = match (policy, seed) {
                (Policy::Low, None) => TieBreak::LowestId,
                (Policy::High, None) => TieBreak::HighestId,
                (Policy::Random, Some(seed)) => TieBreak::Random { seed },
                (Policy::Random, None) => return Err(Failure::Usage("--policy random needs --seed".into())),
                (_, Some(_)) => return Err(Failure::Usage("--seed only applies to --policy random".into())),
            };
            let o = maxine_run(&g, tie);
            let dels: Vec<String> = o.deletions.iter().map(|v| v.to_string()).collect();
            Ok(Done::ok(format!("deleted: {}\nsurvivors: {}\nM = {}\n", dels.join(","), o.survivors, o.size)))
        }
        Command::Alpha { graph: g, enumerate } => {
            let g = graph(&g)?;
            let report = all_mis(&g)?;
            let mut out = format!("alpha = {}\n", report.alpha);
            if enumerate {
                for s in &report.all_mis {
                    writeln!(out, "{s}").unwrap();
                }
                writeln!(out, "count = {}", report.all_mis.len()).unwrap();
            }
            Ok(Done::ok(out))
        }
        Command::Mdi { graph: g } => {
            let g = graph(&g)?;
            let r = mdi_vertices(&g)?;
            Ok(Done::ok(format!("MDI vertices: {}\n", r.mdi_vertices)))
        }
        Command::Detect { graph: g, patterns } => detect(&graph(&g)?, &patterns),
        Command::GenF { case, n, variant, raw } => gen_f(case, n, variant, raw),
        Command::Check { graph: g, check } => {
            let g = graph(&g)?;
            let id = CheckId::from_str(&check)?;
            let outcome = check_one(&g, id)?;
            let word = match outcome {
                CheckOutcome::Pass => "pass",
                CheckOutcome::Fail => "fail",
                CheckOutcome::NotApplicable => "not applicable",
            };
            Ok(Done { out: format!("{id}: {word}\n"), violation: outcome == CheckOutcome::Fail })
        }
        Command::Verify { check, enum_n, corpus, shards, json, stop_after } => {
            verify(&check, enum_n, corpus, shards, json, stop_after)
        }
    }
}

fn detect(g: &reslab::Graph, patterns: &[String]) -> Result<Done, Failure> {
    let mut out = String::new();
    for p in patterns {
        let p = p.trim();
        let found = match p {
            "c4" => find_induced(g, &cycle(4)?, &[])?.map(|e| ("C4".to_string(), e.image())),
            "p5" => find_induced(g, &path(5), &[])?.map(|e| ("P5".to_string(), e.image())),
            "p5star" => {
                if has_p5_star(g)? {
                    let mdi = mdi_vertices(g)?.mdi_vertices;
                    let p5 = path(5);
                    let mut hit = None;
                    for c in mdi {
                        if let Some(e) = find_induced(g, &p5, &[(2, c)])? {
                            hit = Some((format!("P5* centre {c}"), e.image()));
                            break;
                        }
                    }
                    hit
                } else {
                    None
                }
            }
            _ if p == "f" || p.starts_with("f:") => {
                let max = match p.strip_prefix("f:") {
                    Some(m) => m.parse().map_err(|_| Failure::Usage(format!("bad pattern bound in {p:?}")))?,
                    None => g.order(),
                };
                let mut hit = None;
                for m in f_catalog(max, true) {
                    if let Some(e) = find_induced(g, &m.graph, &[])? {
                        hit = Some((m.label(), e.image()));
                        break;
                    }
                }
                hit
            }
            _ => return Err(Failure::Usage(format!("unknown pattern {p:?}"))),
        };
        match found {
            Some((what, at)) => writeln!(out, "{p}\tpresent\t{what}\t{at}").unwrap(),
            None => writeln!(out, "{p}\tabsent").unwrap(),
        }
    }
    Ok(Done::ok(out))
}

fn gen_f(case: Case, n: usize, side: Option<Side>, raw: bool) -> Result<Done, Failure> {
    let kind = match case {
        Case::A => FKind::A,
        Case::B => FKind::B,
        Case::C => FKind::C,
    };
    let variants: Vec<Variant> = match (kind, side) {
        (FKind::C, Some(Side::Same)) => vec![Variant::SameSide],
        (FKind::C, Some(Side::Opposite)) => vec![Variant::OppositeSide],
        (_, Some(_)) => return Err(Failure::Usage("--variant applies to case C only".into())),
        (k, None) => k.variants().to_vec(),
    };
    let mut out = String::new();
    let mut rejected = Vec::new();
    for v in variants {
        let m = gen_f_member(kind, n, v)?;
        if m.mdi_verified || raw {
            writeln!(out, "{}", m.report_line()).unwrap();
        } else {
            rejected.push(m.label());
        }
    }
    if out.is_empty() {
        return Err(Failure::Violation(format!(
            "{} fails the MDI check; use --raw to print it anyway",
            rejected.join(", ")
        )));
    }
    Ok(Done::ok(out))
}

/// Enumeration cap from `RESLAB_MAX_N`.
fn max_n() -> Result<usize, Failure> {
    match std::env::var("RESLAB_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(v) => {
            let n: usize =
                v.trim().parse().map_err(|_| Failure::Usage(format!("RESLAB_MAX_N={v:?} is not a number")))?;
            if n > HARD_MAX_N {
                return Err(Failure::Usage(format!("RESLAB_MAX_N={n} is above the supported {HARD_MAX_N}")));
            }
            Ok(n)
        }
    }
}

fn parse_checks(text: &str) -> Result<Vec<CheckId>, Failure> {
    if text == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    text.split(',').map(|s| CheckId::from_str(s.trim()).map_err(Failure::from)).collect()
}

fn verify(
    check: &str,
    enum_n: Option<usize>,
    corpus: Option<PathBuf>,
    shards: Option<usize>,
    json: Option<PathBuf>,
    stop_after: Option<usize>,
) -> Result<Done, Failure> {
    let checks = parse_checks(check)?;
    let source = match (enum_n, corpus) {
        (Some(n), None) => {
            let cap = max_n()?;
            if n > cap {
                return Err(Failure::Usage(format!("--enum-n {n} exceeds the cap of {cap}; raise RESLAB_MAX_N")));
            }
            if n == HARD_MAX_N {
                eprintln!("warning: enumerating all 2^28 labeled graphs on 8 vertices; this takes a long time");
            }
            Source::Enumeration { n }
        }
        (None, Some(path)) => Source::Corpus { path },
        _ => return Err(Failure::Usage("give exactly one of --enum-n and --corpus".into())),
    };
    let shards = shards.unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get())).max(1);

    if let Some(limit) = stop_after {
        let mut out = String::new();
        let mut violation = false;
        for &id in &checks {
            let found = hunt(&source, id, limit, shards)?;
            writeln!(out, "{id}: {} counterexample(s)", found.len()).unwrap();
            for g6 in &found {
                writeln!(out, "{g6}").unwrap();
            }
            violation |= !found.is_empty();
        }
        return Ok(Done { out, violation });
    }

    let reports = run_suite(&source, &checks, shards)?;
    if let Some(path) = json {
        let doc = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        };
        if path.as_os_str() == "-" {
            println!("{doc}");
        } else {
            fs::write(&path, doc + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(Done { violation: reports.iter().any(|r| !r.counterexamples.is_empty()), out: table(&reports) })
}

fn table(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    if let Some(r) = reports.first() {
        writeln!(out, "source: {}", r.source).unwrap();
    }
    writeln!(out, "{:<32} {:>10} {:>10} {:>15} {:>8}", "check", "scanned", "applicable", "counterexamples", "skipped")
        .unwrap();
    for r in reports {
        writeln!(
            out,
            "{:<32} {:>10} {:>10} {:>15} {:>8}",
            r.check.as_str(),
            r.scanned,
            r.applicable,
            r.counterexamples.len(),
            r.skipped_records
        )
        .unwrap();
    }
    for r in reports {
        for g6 in r.counterexamples.iter().take(20) {
            writeln!(out, "{}\t{g6}", r.check).unwrap();
        }
        if r.counterexamples.len() > 20 {
            writeln!(out, "{}\t... {} more", r.check, r.counterexamples.len() - 20).unwrap();
        }
    }
    if let Some(r) = reports.first() {
        for f in r.parse_failures.iter().take(20) {
            writeln!(out, "skipped line {}: {}", f.line, f.message).unwrap();
        }
    }
    out
}
