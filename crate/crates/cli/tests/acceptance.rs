//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! fails. Built with `harness = false` so the lines always reach the log.

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use reslab::canon::is_canonical_labeling;
use reslab::degseq::{hh_realization, is_graphic, DegreeSequence};
use reslab::enumerate::enumerate_labeled;
use reslab::heuristics::hh_property_vertices;
use reslab::independence::{all_mis, alpha, mdi_vertices};
use reslab::patterns::{complement_cycle, complement_path, cycle, f_catalog, find_induced, path, FKind};
use reslab::verify::{run_suite, CheckId, CheckOutcome, Checker, Source, VerifyReport};
use reslab::{from_graph6, to_graph6, Graph};
use reslab_oracle as oracle;

/// Runs one criterion: verdict and a one-line summary.
type Criterion = fn() -> (bool, String);

/// Single-shard budget for criterion 1, in seconds.
const SANDWICH_BUDGET_S: f64 = 600.0;

fn corpus8() -> Source {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/graphs8.g6");
    Source::Corpus { path }
}

/// Totals over several runs of one check.
#[derive(Default)]
struct Sum {
    scanned: u64,
    applicable: u64,
    counterexamples: Vec<String>,
    skipped: u64,
}

impl Sum {
    fn add(&mut self, r: &VerifyReport) {
        self.scanned += r.scanned;
        self.applicable += r.applicable;
        self.counterexamples.extend(r.counterexamples.iter().cloned());
        self.skipped += r.skipped_records;
    }

    fn clean(&self) -> bool {
        self.counterexamples.is_empty() && self.skipped == 0
    }

    fn describe(&self) -> String {
        let mut s = format!(
            "scanned {}, applicable {}, counterexamples {}",
            self.scanned,
            self.applicable,
            self.counterexamples.len()
        );
        if self.skipped > 0 {
            s += &format!(", skipped {}", self.skipped);
        }
        if let Some(first) = self.counterexamples.first() {
            s += &format!(", first {first}");
        }
        s
    }
}

fn suite(sources: &[Source], id: CheckId) -> Sum {
    let mut sum = Sum::default();
    for src in sources {
        sum.add(&run_suite(src, &[id], 1).expect("scan runs")[0]);
    }
    sum
}

fn enumerations(max_n: usize) -> Vec<Source> {
    (0..=max_n).map(|n| Source::Enumeration { n }).collect()
}

fn with_corpus(max_n: usize) -> Vec<Source> {
    let mut v = enumerations(max_n);
    v.push(corpus8());
    v
}

fn c1_sandwich() -> (bool, String) {
    let started = Instant::now();
    let r = &run_suite(&Source::Enumeration { n: 7 }, &[CheckId::Thm2Sandwich], 1).unwrap()[0];
    let secs = started.elapsed().as_secs_f64();
    let ok =
        r.scanned == 1 << 21 && r.applicable == r.scanned && r.counterexamples.is_empty() && secs < SANDWICH_BUDGET_S;
    (
        ok,
        format!(
            "n=7: scanned {}, counterexamples {}, single shard {secs:.1}s (budget {SANDWICH_BUDGET_S}s)",
            r.scanned,
            r.counterexamples.len()
        ),
    )
}

fn c2_c4_p5_free() -> (bool, String) {
    let s = suite(&enumerations(7), CheckId::ThmBmC4P5);
    (s.clean() && s.applicable > 0, format!("n<=7: {}", s.describe()))
}

fn c3_corollary() -> (bool, String) {
    let s = suite(&with_corpus(7), CheckId::CorollaryFP5);
    (s.clean() && s.applicable > 0, format!("n<=7 + 8-vertex corpus: {}", s.describe()))
}

/// Counts applicable graphs whose anchored and un-anchored verdicts differ.
fn divergences(graphs: impl Iterator<Item = Graph>, checker: &Checker) -> u64 {
    let mut count = 0;
    for g in graphs {
        if checker.check(&g, CheckId::ThmStructureAlpha3).unwrap() != CheckOutcome::NotApplicable
            && checker.structure_finding(&g, true).unwrap().diverges()
        {
            count += 1;
        }
    }
    count
}

fn c4_structure_alpha3() -> (bool, String) {
    let s = suite(&with_corpus(7), CheckId::ThmStructureAlpha3);
    let mut diverged = 0;
    for n in 0..=7 {
        diverged += divergences(enumerate_labeled(n).unwrap(), &Checker::new(n));
    }
    let text = std::fs::read_to_string(match corpus8() {
        Source::Corpus { path } => path,
        _ => unreachable!(),
    })
    .unwrap();
    let corpus: Vec<Graph> = text.lines().map(|l| from_graph6(l).unwrap()).collect();
    diverged += divergences(corpus.into_iter(), &Checker::new(8));
    (
        s.clean() && s.applicable > 0 && diverged == 0,
        format!("n<=7 + 8-vertex corpus: {}, mode divergences {diverged}", s.describe()),
    )
}

fn c5_structure_gt3() -> (bool, String) {
    let s = suite(&with_corpus(7), CheckId::ThmStructureAlphaGt3);
    (s.clean() && s.applicable > 0, format!("n<=7 + 8-vertex corpus: {}", s.describe()))
}

fn c6_hh_property() -> (bool, String) {
    let a = suite(&enumerations(7), CheckId::HhDeletionGivesResidue);
    let mut graphic = 0;
    let mut constructive_misses = Vec::new();
    let mut brute_misses = Vec::new();
    for len in 1..=6 {
        let mut with_hh: HashSet<Vec<usize>> = HashSet::new();
        for g in oracle::all_graphs(len) {
            if !hh_property_vertices(&g).is_empty() {
                with_hh.insert(oracle::degrees(&g));
            }
        }
        for seq in oracle::realizable(len) {
            graphic += 1;
            let h = hh_realization(&DegreeSequence::new(seq.clone())).unwrap();
            if hh_property_vertices(&h).is_empty() {
                constructive_misses.push(seq.clone());
            }
            if !with_hh.contains(&seq) {
                brute_misses.push(seq);
            }
        }
    }
    let ok = a.clean() && a.applicable > 0 && brute_misses.is_empty();
    (
        ok,
        format!(
            "(a) n<=7 all HH choices: {}; (b) {graphic} graphic sequences, {} without an HH realization (Havel-Hakimi construction alone misses {})",
            a.describe(),
            brute_misses.len(),
            constructive_misses.len()
        ),
    )
}

fn c7_catalog() -> (bool, String) {
    let filtered = f_catalog(10, true);
    let mut bad = Vec::new();
    for m in &filtered {
        let report = all_mis(&m.graph).unwrap();
        let mdi = mdi_vertices(&m.graph).unwrap().mdi_vertices;
        let triple: reslab::VertexSet = [m.v(), m.u(), m.w()].into_iter().collect();
        if !(report.is_unique() && report.all_mis[0] == triple && mdi.contains(m.v())) {
            bad.push(m.label());
        }
    }
    let raw = f_catalog(10, false);
    let expected: BTreeSet<String> = raw
        .iter()
        .filter(|m| m.core_size == 3 && matches!(m.kind, FKind::A | FKind::B))
        .map(|m| to_graph6(&m.graph))
        .collect();
    let lines = raw.iter().map(|m| to_graph6(&m.graph)).collect();
    let r =
        &run_suite(&Source::Records { name: "raw catalog".into(), lines }, &[CheckId::FMembersAreMdi], 1).unwrap()[0];
    let flagged: BTreeSet<String> = r.counterexamples.iter().cloned().collect();
    let direct_fail: BTreeSet<String> = raw.iter().filter(|m| !m.mdi_verified).map(|m| to_graph6(&m.graph)).collect();
    let ok = bad.is_empty() && !filtered.is_empty() && flagged == expected && direct_fail == expected;
    (
        ok,
        format!(
            "{} filtered members up to 10 vertices, {} failing; raw catalog {} members, report flags {:?}",
            filtered.len(),
            bad.len(),
            raw.len(),
            flagged
        ),
    )
}

fn c8_oracles() -> (bool, String) {
    let mut alpha_bad = 0u64;
    let mut mis_bad = 0u64;
    let mut graphic_bad = 0u64;
    let mut induced_bad = 0u64;
    for n in 0..=7 {
        for g in enumerate_labeled(n).unwrap() {
            if alpha(&g) != oracle::alpha(&g) {
                alpha_bad += 1;
            }
            if n <= 6 {
                let ours: Vec<Vec<usize>> = all_mis(&g).unwrap().all_mis.iter().map(|s| s.to_vec()).collect();
                if ours != oracle::all_mis(&g) {
                    mis_bad += 1;
                }
            }
        }
    }
    let mut sequences = 0;
    for len in 1..=6 {
        let real = oracle::realizable(len);
        for seq in oracle::non_increasing(len, 5) {
            sequences += 1;
            if is_graphic(&DegreeSequence::new(seq.clone())) != real.contains(&seq) {
                graphic_bad += 1;
            }
        }
    }
    let patterns = [
        cycle(4).unwrap(),
        path(5),
        complement_cycle(4).unwrap(),
        complement_cycle(5).unwrap(),
        complement_path(4).unwrap(),
        complement_path(5).unwrap(),
    ];
    let copies: Vec<HashSet<u64>> = patterns.iter().map(oracle::labelled_copies).collect();
    let mut hosts = 0u64;
    for n in 0..=7 {
        let subs4 = oracle::subsets(n, 4);
        let subs5 = oracle::subsets(n, 5);
        for host in enumerate_labeled(n).unwrap() {
            hosts += 1;
            let m4: Vec<u64> = subs4.iter().map(|s| oracle::induced_mask(&host, s)).collect();
            let m5: Vec<u64> = subs5.iter().map(|s| oracle::induced_mask(&host, s)).collect();
            for (p, c) in patterns.iter().zip(&copies) {
                let masks = if p.order() == 4 { &m4 } else { &m5 };
                let brute = masks.iter().any(|m| c.contains(m));
                if find_induced(&host, p, &[]).unwrap().is_some() != brute {
                    induced_bad += 1;
                }
            }
        }
    }
    let ok = alpha_bad + mis_bad + graphic_bad + induced_bad == 0;
    (
        ok,
        format!(
            "alpha mismatches {alpha_bad} (n<=7), all_mis mismatches {mis_bad} (n<=6), is_graphic mismatches {graphic_bad} of {sequences} sequences, find_induced mismatches {induced_bad} over {hosts} hosts x {} patterns",
            patterns.len()
        ),
    )
}

fn c9_codec() -> (bool, String) {
    let mut round_trip_bad = 0u64;
    for n in 0..=7 {
        for g in enumerate_labeled(n).unwrap() {
            if from_graph6(&to_graph6(&g)).as_ref() != Ok(&g) {
                round_trip_bad += 1;
            }
        }
    }
    let k3 = reslab::patterns::complete(3);
    let bw = from_graph6("Bw").ok() == Some(k3.clone()) && to_graph6(&k3) == "Bw";
    let mut counts = Vec::new();
    let mut orbit_sums = Vec::new();
    for n in 1..=7 {
        let reps: Vec<Graph> = enumerate_labeled(n).unwrap().filter(|g| is_canonical_labeling(g).unwrap()).collect();
        counts.push(reps.len());
        let fact: u64 = (1..=n as u64).product();
        let sum: u64 = reps.iter().map(|g| fact / automorphisms(g)).sum();
        orbit_sums.push(sum == reslab::enumerate::labeled_count(n));
    }
    let ok = round_trip_bad == 0 && bw && counts == [1, 2, 4, 11, 34, 156, 1044] && orbit_sums.iter().all(|&b| b);
    (
        ok,
        format!(
            "round-trip failures {round_trip_bad} (n<=7), Bw<->K3 {bw}, class counts {counts:?}, orbit sums match labeled counts {}",
            orbit_sums.iter().all(|&b| b)
        ),
    )
}

/// Automorphism count by trying every permutation.
fn automorphisms(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute(&mut perm, 0, &mut |p| {
        if g.permuted(p) == *g {
            count += 1;
        }
    });
    count
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_reslab")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).trim().to_string())
}

fn c10_spot_values() -> (bool, String) {
    let p5 = to_graph6(&path(5));
    let cases = [
        (vec!["residue", "Cl"], "R = 2"),
        (vec!["residue", p5.as_str()], "R = 2"),
        (vec!["alpha", p5.as_str()], "alpha = 3"),
        (vec!["maxine", "--all", p5.as_str()], "achievable M: {2,3}"),
        (vec!["mdi", "Cl"], "MDI vertices: {}"),
        (vec!["mdi", p5.as_str()], "MDI vertices: {2}"),
    ];
    let mut misses = Vec::new();
    for (args, want) in &cases {
        let (code, out) = cli(args);
        if code != 0 || out != *want {
            misses.push(format!("`reslab {}` gave {out:?} (exit {code})", args.join(" ")));
        }
    }
    let ok = misses.is_empty();
    let detail = if ok { format!("{} CLI invocations reproduced, all exit 0", cases.len()) } else { misses.join("; ") };
    (ok, detail)
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("sandwich R <= min M, max M <= alpha", c1_sandwich),
        ("{C4,P5}-free graphs: Maxine always optimal", c2_c4_p5_free),
        ("{F,P5}-free graphs: Maxine always optimal", c3_corollary),
        ("alpha = 3 MDI structure, anchored and un-anchored", c4_structure_alpha3),
        ("alpha > 3 MDI structure", c5_structure_gt3),
        ("HH-property deletions and realizations", c6_hh_property),
        ("family catalog MDI soundness", c7_catalog),
        ("oracle equivalences", c8_oracles),
        ("graph6 codec and class counts", c9_codec),
        ("CLI spot values", c10_spot_values),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let (ok, detail) = run();
        if !ok {
            failed += 1;
        }
        println!(
            "acceptance {:>2} {} {name}: {detail} [{:.1}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            started.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
