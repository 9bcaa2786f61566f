use std::fs;
use std::io::{self, Read};

use reslab::{from_graph6, Graph};

/// Resolves a graph argument: a graph6 string, `@path` for the first
/// non-blank line of a file, or `-` for the first non-blank line of stdin.
pub fn read_graph(arg: &str) -> Result<Graph, String> {
    let text = if arg == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| format!("stdin: {e}"))?;
        first_record(&buf).ok_or("stdin: no graph6 record")?.to_string()
    } else if let Some(path) = arg.strip_prefix('@') {
        let buf = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        first_record(&buf).ok_or_else(|| format!("{path}: no graph6 record"))?.to_string()
    } else {
        arg.to_string()
    };
    from_graph6(&text).map_err(|e| e.to_string())
}

fn first_record(buf: &str) -> Option<&str> {
    buf.lines().map(str::trim).find(|l| !l.is_empty())
}
