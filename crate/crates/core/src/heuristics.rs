//! The Maxine heuristic: repeatedly delete a vertex of maximum degree until
//! the survivors are independent.

use std::collections::{BTreeSet, HashMap};

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for [`maxine_all`].
pub const MAXINE_ALL_LIMIT: usize = 32;

fn max_degree_within(g: &Graph, alive: VertexSet) -> usize {
    alive.iter().map(|v| g.degree_in(v, alive)).max().unwrap_or(0)
}

fn max_degree_set(g: &Graph, alive: VertexSet) -> (usize, VertexSet) {
    let delta = max_degree_within(g, alive);
    let set = alive.iter().filter(|&v| g.degree_in(v, alive) == delta).collect();
    (delta, set)
}

/// Max-degree vertices whose neighbours can be the top entries of the
/// remaining degree order, restricted to the subgraph on `alive`.
fn hh_vertices_within(g: &Graph, alive: VertexSet) -> VertexSet {
    let (_, top) = max_degree_set(g, alive);
    top.iter()
        .filter(|&v| {
            let nbrs = g.neighbors(v).intersection(alive);
            let rest = alive.difference(nbrs).difference(VertexSet::singleton(v));
            let min_in = nbrs.iter().map(|x| g.degree_in(x, alive)).min();
            let max_out = rest.iter().map(|x| g.degree_in(x, alive)).max();
            match (min_in, max_out) {
                (Some(lo), Some(hi)) => lo >= hi,
                _ => true,
            }
        })
        .collect()
}

pub fn max_degree_vertices(g: &Graph) -> Result<VertexSet> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(max_degree_set(g, g.vertices()).1)
}

/// Vertices `v` of maximum degree with `min deg over N(v) >= max deg over
/// V - N[v]`, so that deleting `v` performs one Havel-Hakimi step on the
/// degree sequence. May be empty.
pub fn hh_property_vertices(g: &Graph) -> VertexSet {
    hh_vertices_within(g, g.vertices())
}

/// How a single Maxine run breaks ties among maximum-degree vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    LowestId,
    HighestId,
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxineOutcome {
    /// Deleted vertices in order, as ids of the input graph.
    pub deletions: Vec<usize>,
    pub survivors: VertexSet,
    pub size: usize,
}

pub fn maxine_run(g: &Graph, policy: TieBreak) -> MaxineOutcome {
    let mut rng = match policy {
        TieBreak::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut alive = g.vertices();
    let mut deletions = Vec::new();
    loop {
        let (delta, top) = max_degree_set(g, alive);
        if delta == 0 {
            break;
        }
        let v = match (policy, rng.as_mut()) {
            (TieBreak::LowestId, _) => top.first().expect("non-empty"),
            (TieBreak::HighestId, _) => top.iter().last().expect("non-empty"),
            (TieBreak::Random { .. }, Some(rng)) => top.iter().choose(rng).expect("non-empty"),
            (TieBreak::Random { .. }, None) => unreachable!(),
        };
        alive.remove(v);
        deletions.push(v);
    }
    MaxineOutcome { deletions, survivors: alive, size: alive.len() }
}

/// Every independent-set size reachable by some sequence of tie-break choices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxineSummary {
    pub achievable_sizes: BTreeSet<usize>,
    pub min_size: usize,
    pub max_size: usize,
}

impl MaxineSummary {
    fn from_mask(mask: u64) -> Self {
        let achievable_sizes: BTreeSet<usize> = VertexSet(mask).iter().collect();
        let min_size = *achievable_sizes.first().expect("non-empty");
        let max_size = *achievable_sizes.last().expect("non-empty");
        MaxineSummary { achievable_sizes, min_size, max_size }
    }
}

/// Memo keyed on the surviving-vertex subset. Dense for small graphs.
enum Memo<T> {
    Dense(Vec<Option<T>>),
    Sparse(HashMap<u64, T>),
}

impl<T: Copy> Memo<T> {
    fn for_order(n: usize) -> Self {
        if n <= 12 {
            Memo::Dense(vec![None; 1 << n])
        } else {
            Memo::Sparse(HashMap::new())
        }
    }

    fn get(&self, key: VertexSet) -> Option<T> {
        match self {
            Memo::Dense(v) => v[key.0 as usize],
            Memo::Sparse(m) => m.get(&key.0).copied(),
        }
    }

    fn put(&mut self, key: VertexSet, value: T) {
        match self {
            Memo::Dense(v) => v[key.0 as usize] = Some(value),
            Memo::Sparse(m) => {
                m.insert(key.0, value);
            }
        }
    }
}

pub fn maxine_all(g: &Graph) -> Result<MaxineSummary> {
    maxine_all_with_limit(g, MAXINE_ALL_LIMIT)
}

pub fn maxine_all_with_limit(g: &Graph, limit: usize) -> Result<MaxineSummary> {
    if g.order() > limit {
        return Err(Error::LimitExceeded { what: "maxine_all", limit, n: g.order() });
    }
    fn sizes(g: &Graph, alive: VertexSet, memo: &mut Memo<u64>) -> u64 {
        if let Some(s) = memo.get(alive) {
            return s;
        }
        let (delta, top) = max_degree_set(g, alive);
        let out = if delta == 0 {
            1u64 << alive.len()
        } else {
            top.iter().fold(0, |acc, v| {
                let mut next = alive;
                next.remove(v);
                acc | sizes(g, next, memo)
            })
        };
        memo.put(alive, out);
        out
    }
    let mut memo = Memo::for_order(g.order());
    Ok(MaxineSummary::from_mask(sizes(g, g.vertices(), &mut memo)))
}

/// Maxine run that always deletes the lowest-id Havel-Hakimi-property vertex.
pub fn maxine_hh(g: &Graph) -> Result<MaxineOutcome> {
    let mut alive = g.vertices();
    let mut deletions = Vec::new();
    while max_degree_within(g, alive) > 0 {
        let v = hh_vertices_within(g, alive).first().ok_or(Error::NoHHVertex { step: deletions.len() + 1 })?;
        alive.remove(v);
        deletions.push(v);
    }
    Ok(MaxineOutcome { deletions, survivors: alive, size: alive.len() })
}

/// Result of exploring every Havel-Hakimi-property deletion sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HHExploration {
    /// Sizes reached by sequences that ran to an independent set.
    pub completed_sizes: BTreeSet<usize>,
    /// Whether some sequence got stuck with no Havel-Hakimi-property vertex.
    pub has_dead_end: bool,
}

pub fn maxine_hh_all(g: &Graph) -> Result<HHExploration> {
    if g.order() > MAXINE_ALL_LIMIT {
        return Err(Error::LimitExceeded { what: "maxine_hh_all", limit: MAXINE_ALL_LIMIT, n: g.order() });
    }
    fn explore(g: &Graph, alive: VertexSet, memo: &mut Memo<(u64, bool)>) -> (u64, bool) {
        if let Some(r) = memo.get(alive) {
            return r;
        }
        let out = if max_degree_within(g, alive) == 0 {
            (1u64 << alive.len(), false)
        } else {
            let choices = hh_vertices_within(g, alive);
            if choices.is_empty() {
                (0, true)
            } else {
                choices.iter().fold((0, false), |(m, d), v| {
                    let mut next = alive;
                    next.remove(v);
                    let (m2, d2) = explore(g, next, memo);
                    (m | m2, d || d2)
                })
            }
        };
        memo.put(alive, out);
        out
    }
    let mut memo = Memo::for_order(g.order());
    let (mask, has_dead_end) = explore(g, g.vertices(), &mut memo);
    Ok(HHExploration { completed_sizes: VertexSet(mask).iter().collect(), has_dead_end })
}
