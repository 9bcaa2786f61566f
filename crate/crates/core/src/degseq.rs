//! Havel-Hakimi reduction, graphicality and the residue.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Non-increasing list of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `entries` non-increasingly.
    pub fn new(mut entries: Vec<usize>) -> Self {
        entries.sort_by(|a, b| b.cmp(a));
        DegreeSequence(entries)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// True when no entry is positive.
    pub fn is_terminal(&self) -> bool {
        self.0.first().is_none_or(|&d| d == 0)
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Comma- and/or whitespace-separated non-negative integers; surrounding
/// parentheses are tolerated. The result is sorted.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let entries = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::DegreeSequenceParse(format!("`{tok}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeSequence::new(entries))
    }
}

/// One Havel-Hakimi step: drop `d1`, decrement the next `d1` entries, re-sort.
pub fn hh_step(d: &DegreeSequence) -> Result<DegreeSequence> {
    step_at(d, 1)
}

fn step_at(d: &DegreeSequence, step: usize) -> Result<DegreeSequence> {
    let (&lead, rest) =
        d.0.split_first().ok_or_else(|| Error::Precondition("Havel-Hakimi step on an empty sequence".into()))?;
    if lead == 0 {
        return Err(Error::Precondition("Havel-Hakimi step on a terminal sequence".into()));
    }
    if lead > rest.len() {
        return Err(Error::NonGraphic { step });
    }
    let mut next = rest.to_vec();
    for e in &mut next[..lead] {
        *e = e.checked_sub(1).ok_or(Error::NonGraphic { step })?;
    }
    Ok(DegreeSequence::new(next))
}

/// Every sequence visited by Havel-Hakimi, input first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HHTrace {
    pub steps: Vec<DegreeSequence>,
    pub terminal_zero_count: usize,
}

pub fn hh_trace(d: &DegreeSequence) -> Result<HHTrace> {
    let mut steps = vec![d.clone()];
    loop {
        let last = steps.last().expect("non-empty");
        if last.is_terminal() {
            let terminal_zero_count = last.len();
            return Ok(HHTrace { steps, terminal_zero_count });
        }
        let next = step_at(last, steps.len())?;
        steps.push(next);
    }
}

pub fn is_graphic(d: &DegreeSequence) -> bool {
    hh_trace(d).is_ok()
}

/// Number of zeros Havel-Hakimi terminates with.
pub fn residue_seq(d: &DegreeSequence) -> Result<usize> {
    hh_trace(d).map(|t| t.terminal_zero_count)
}

/// `R(G)`: the residue of `g`'s degree sequence.
pub fn residue(g: &Graph) -> usize {
    residue_seq(&g.degree_sequence()).expect("degree sequences of graphs are graphic")
}

/// Builds a realization of `d` by laying out each Havel-Hakimi step as edges:
/// the leading vertex is joined to the next `d1` vertices of the current
/// order. Vertex `i` receives degree `d[i]`.
pub fn hh_realization(d: &DegreeSequence) -> Result<Graph> {
    let mut g = Graph::new(d.len())?;
    let mut residual: Vec<(usize, usize)> = d.0.iter().copied().zip(0..).collect();
    let mut step = 1;
    while let Some(&(lead, a)) = residual.first() {
        if lead == 0 {
            break;
        }
        residual.remove(0);
        if lead > residual.len() {
            return Err(Error::NonGraphic { step });
        }
        for entry in &mut residual[..lead] {
            entry.0 = entry.0.checked_sub(1).ok_or(Error::NonGraphic { step })?;
            g.add_edge(a, entry.1)?;
        }
        residual.sort_by_key(|e| std::cmp::Reverse(e.0));
        step += 1;
    }
    Ok(g)
}
