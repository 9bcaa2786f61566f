use std::io::Write;
use std::process::{Command, Output, Stdio};

fn reslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reslab")).args(args).env_remove("RESLAB_MAX_N").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const P5: &str = "DhC";

#[test]
fn residue_of_graph_and_sequence() {
    let o = reslab(&["residue", "Cl"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "R = 2\n");
    assert_eq!(stdout(&reslab(&["residue", "--degseq", "(3,3,3,3)"])), "R = 1\n");
    assert_eq!(reslab(&["residue", "--degseq", "3,3,1,1"]).status.code(), Some(1));
    assert_eq!(reslab(&["residue", "--degseq", "3,x"]).status.code(), Some(2));
    assert_eq!(reslab(&["residue"]).status.code(), Some(2));
}

#[test]
fn hh_trace_lists_steps() {
    let o = reslab(&["hh-trace", "--degseq", "2,2,2,2"]);
    assert_eq!(stdout(&o), "(2,2,2,2)\n(2,1,1)\n(0,0)\nR = 2\n");
}

#[test]
fn maxine_modes() {
    assert_eq!(stdout(&reslab(&["maxine", "--all", P5])), "achievable M: {2,3}\n");
    assert_eq!(stdout(&reslab(&["maxine", P5])), "deleted: 1,3\nsurvivors: {0,2,4}\nM = 3\n");
    assert_eq!(stdout(&reslab(&["maxine", P5, "--policy", "high"])), "deleted: 3,1\nsurvivors: {0,2,4}\nM = 3\n");
    let a = reslab(&["maxine", P5, "--policy", "random", "--seed", "11"]);
    let b = reslab(&["maxine", P5, "--policy", "random", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(reslab(&["maxine", P5, "--policy", "random"]).status.code(), Some(2));
}

#[test]
fn alpha_and_mdi() {
    assert_eq!(stdout(&reslab(&["alpha", "Cl", "--enumerate"])), "alpha = 2\n{0,2}\n{1,3}\ncount = 2\n");
    assert_eq!(stdout(&reslab(&["mdi", P5])), "MDI vertices: {2}\n");
    assert_eq!(stdout(&reslab(&["mdi", "Cl"])), "MDI vertices: {}\n");
}

#[test]
fn graph_inputs() {
    let dir = std::env::temp_dir().join(format!("reslab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("p5.g6");
    std::fs::write(&file, format!(">>graph6<<{P5}\n")).unwrap();
    let o = reslab(&["alpha", &format!("@{}", file.display())]);
    assert_eq!(stdout(&o), "alpha = 3\n");

    let mut child = Command::new(env!("CARGO_BIN_EXE_reslab"))
        .args(["residue", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "R = 1\n");

    let bad = reslab(&["alpha", "Bx"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("at byte 1"));
}

#[test]
fn detect_patterns() {
    let o = reslab(&["detect", P5, "--patterns", "c4,p5,p5star,f"]);
    assert_eq!(
        stdout(&o),
        "c4\tabsent\np5\tpresent\tP5\t{0,1,2,3,4}\np5star\tpresent\tP5* centre 2\t{0,1,2,3,4}\nf\tabsent\n"
    );
    assert_eq!(reslab(&["detect", P5, "--patterns", "k5"]).status.code(), Some(2));
}

#[test]
fn gen_f_members() {
    let o = reslab(&["gen-f", "--case", "C", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.ends_with("v=0;u=1;w=2;Q'=3,5;N'=4")));

    assert_eq!(reslab(&["gen-f", "--case", "A", "--n", "3"]).status.code(), Some(1));
    let raw = reslab(&["gen-f", "--case", "A", "--n", "3", "--raw"]);
    assert_eq!(stdout(&raw), "EFz_\tv=0;u=1;w=2;Q'=;N'=3,4,5\n");
    assert_eq!(reslab(&["gen-f", "--case", "A", "--n", "4", "--variant", "same"]).status.code(), Some(2));
    assert_eq!(reslab(&["gen-f", "--case", "B", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn verify_enumeration() {
    let o = reslab(&["verify", "--check", "thm2_sandwich", "--enum-n", "6", "--shards", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("thm2_sandwich"));
    let row: Vec<&str> = text.lines().nth(2).unwrap().split_whitespace().collect();
    assert_eq!(row, ["thm2_sandwich", "32768", "32768", "0", "0"]);
}

#[test]
fn verify_json_report() {
    let dir = std::env::temp_dir().join(format!("reslab-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let o = reslab(&["verify", "--check", "thm1_residue_le_alpha", "--enum-n", "4", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v.as_object().unwrap().len(), 8);
    let order = [
        "check",
        "source",
        "scanned",
        "applicable",
        "counterexamples",
        "skipped_records",
        "elapsed_ms",
        "tool_version",
    ];
    let at: Vec<usize> = order.iter().map(|k| text.find(&format!("\"{k}\":")).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{text}");
    assert_eq!(v["scanned"], 64);
    assert_eq!(v["check"], "thm1_residue_le_alpha");
    assert_eq!(v["counterexamples"], serde_json::json!([]));
}

#[test]
fn verify_corpus_with_counterexamples() {
    let dir = std::env::temp_dir().join(format!("reslab-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("raw.g6");
    let raw = stdout(&reslab(&["gen-f", "--case", "A", "--n", "3", "--raw"]));
    let b3 = stdout(&reslab(&["gen-f", "--case", "B", "--n", "3", "--raw"]));
    let c3 = stdout(&reslab(&["gen-f", "--case", "C", "--n", "3"]));
    let mut text = String::new();
    for block in [&raw, &b3, &c3] {
        for line in block.lines() {
            text += line.split('\t').next().unwrap();
            text += "\n";
        }
    }
    text += "not-a-graph\n\n";
    std::fs::write(&corpus, &text).unwrap();
    let o = reslab(&["verify", "--check", "f_members_are_mdi", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("f_members_are_mdi\tEFz_"));
    assert!(out.contains("skipped line 5"));

    let hunted =
        reslab(&["verify", "--check", "f_members_are_mdi", "--corpus", corpus.to_str().unwrap(), "--stop-after", "1"]);
    assert_eq!(hunted.status.code(), Some(1));
    assert_eq!(stdout(&hunted), "f_members_are_mdi: 1 counterexample(s)\nEFz_\n");

    let replay = reslab(&["check", "EFz_", "--check", "f_members_are_mdi"]);
    assert_eq!((replay.status.code(), stdout(&replay)), (Some(1), "f_members_are_mdi: fail\n".to_string()));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(reslab(&["verify", "--check", "residue_equals_alpha", "--enum-n", "5"]).status.code(), Some(2));
    assert_eq!(reslab(&["verify", "--check", "thm1_residue_le_alpha"]).status.code(), Some(2));
    assert_eq!(reslab(&["verify", "--check", "thm1_residue_le_alpha", "--enum-n", "8"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_reslab"))
        .args(["verify", "--check", "thm1_residue_le_alpha", "--enum-n", "9"])
        .env("RESLAB_MAX_N", "9")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(reslab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn identical_invocations_identical_output() {
    let args = ["verify", "--check", "all", "--enum-n", "5", "--shards", "2"];
    let a = reslab(&args);
    let b = reslab(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
