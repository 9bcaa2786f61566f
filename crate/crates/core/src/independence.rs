//! Independence number, maximum independent sets, MDI vertices, and the
//! reductions that shrink an MDI graph to `N(v) ∪ I`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MIS_LIMIT: usize = 32;

/// Greedy independent set taking a minimum-degree vertex each round.
fn greedy_lower_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut size = 0;
    while !cand.is_empty() {
        let v = cand.iter().min_by_key(|&v| g.degree_in(v, cand)).expect("non-empty");
        cand = cand.difference(g.neighbors(v)).difference(VertexSet::singleton(v));
        size += 1;
    }
    size
}

fn branch(g: &Graph, mut cand: VertexSet, mut size: usize, best: &mut usize) {
    // vertices of degree <= 1 inside `cand` belong to some maximum set
    loop {
        let low = cand.iter().find(|&v| g.degree_in(v, cand) <= 1);
        match low {
            Some(v) => {
                cand = cand.difference(g.neighbors(v)).difference(VertexSet::singleton(v));
                size += 1;
            }
            None => break,
        }
    }
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + cand.len() <= *best {
        return;
    }
    let v = cand.iter().max_by_key(|&v| g.degree_in(v, cand)).expect("non-empty");
    branch(g, cand.difference(g.neighbors(v)).difference(VertexSet::singleton(v)), size + 1, best);
    branch(g, cand.difference(VertexSet::singleton(v)), size, best);
}

/// Independence number of the subgraph induced on `within`.
pub fn alpha_within(g: &Graph, within: VertexSet) -> usize {
    let mut best = greedy_lower_bound(g, within);
    branch(g, within, 0, &mut best);
    best
}

/// `α(G)` by branch and bound on a maximum-degree vertex.
pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, g.vertices())
}

/// `α(G)` together with every maximum independent set, sorted
/// lexicographically as ascending vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MISReport {
    pub alpha: usize,
    pub all_mis: Vec<VertexSet>,
}

impl MISReport {
    pub fn is_unique(&self) -> bool {
        self.all_mis.len() == 1
    }

    /// Vertices lying in every maximum independent set.
    pub fn common(&self) -> VertexSet {
        self.all_mis.iter().fold(VertexSet(u64::MAX), |acc, &s| acc.intersection(s))
    }
}

pub fn all_mis(g: &Graph) -> Result<MISReport> {
    if g.order() > MIS_LIMIT {
        return Err(Error::LimitExceeded { what: "all_mis", limit: MIS_LIMIT, n: g.order() });
    }
    Ok(all_mis_unbounded(g))
}

/// [`all_mis`] without the size guard, for graphs known to have few maximum
/// independent sets.
pub(crate) fn all_mis_unbounded(g: &Graph) -> MISReport {
    let alpha = alpha(g);
    let mut out = Vec::new();
    collect(g, g.vertices(), VertexSet::EMPTY, alpha, &mut out);
    out.sort_by_key(|s| s.to_vec());
    MISReport { alpha, all_mis: out }
}

// Include-lowest-first, so sets come out in lexicographic order already.
fn collect(g: &Graph, cand: VertexSet, chosen: VertexSet, target: usize, out: &mut Vec<VertexSet>) {
    if chosen.len() == target {
        out.push(chosen);
        return;
    }
    if chosen.len() + cand.len() < target {
        return;
    }
    let Some(v) = cand.first() else { return };
    let mut with = chosen;
    with.insert(v);
    collect(g, cand.difference(g.neighbors(v)).difference(VertexSet::singleton(v)), with, target, out);
    collect(g, cand.difference(VertexSet::singleton(v)), chosen, target, out);
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MDIReport {
    pub mdi_vertices: VertexSet,
}

/// Vertices of maximum degree lying in every maximum independent set.
pub fn mdi_vertices(g: &Graph) -> Result<MDIReport> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let report = all_mis(g)?;
    Ok(MDIReport { mdi_vertices: mdi_from(g, &report) })
}

pub(crate) fn mdi_from(g: &Graph, report: &MISReport) -> VertexSet {
    let delta = g.max_degree();
    report.common().intersection(g.vertices()).iter().filter(|&v| g.degree(v) == delta).collect()
}

fn require_mdi(g: &Graph, v: usize) -> Result<MISReport> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    let report = all_mis(g)?;
    if !mdi_from(g, &report).contains(v) {
        return Err(Error::NotMdi(v));
    }
    Ok(report)
}

/// An induced subgraph together with where its vertices came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub graph: Graph,
    /// `origin[i]` is the id in the input graph of vertex `i` of `graph`.
    pub origin: Vec<usize>,
    /// The tracked vertex, relabelled.
    pub center: usize,
}

impl Reduced {
    fn new(g: &Graph, keep: VertexSet, v: usize) -> Result<Self> {
        let origin = keep.to_vec();
        let center = origin.iter().position(|&x| x == v).expect("center kept");
        Ok(Reduced { graph: g.induced(keep)?, origin, center })
    }
}

/// Deletes `⋃_{i≥2} I_i \ I_1` with `I_1` the lexicographically least
/// maximum independent set. The result has exactly one maximum independent
/// set and `v` keeps its MDI conditions.
pub fn reduce_to_unique_mis(g: &Graph, v: usize) -> Result<Reduced> {
    let report = require_mdi(g, v)?;
    reduce_keeping(g, v, &report, 0)
}

/// As [`reduce_to_unique_mis`] with `I_1 = report.all_mis[keep]`.
pub fn reduce_to_unique_mis_with(g: &Graph, v: usize, keep: usize) -> Result<Reduced> {
    let report = require_mdi(g, v)?;
    if keep >= report.all_mis.len() {
        return Err(Error::Precondition(format!("no maximum independent set #{keep}")));
    }
    reduce_keeping(g, v, &report, keep)
}

fn reduce_keeping(g: &Graph, v: usize, report: &MISReport, keep: usize) -> Result<Reduced> {
    let kept_mis = report.all_mis[keep];
    let doomed = report.all_mis.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s)).difference(kept_mis);
    Reduced::new(g, g.vertices().difference(doomed), v)
}

fn unique_mis_with_mdi(g: &Graph, v: usize) -> Result<VertexSet> {
    let report = require_mdi(g, v)?;
    if !report.is_unique() {
        return Err(Error::NoUniqueMis);
    }
    Ok(report.all_mis[0])
}

/// Restricts to `N(v) ∪ I`, then repeatedly drops neighbours of `v` with no
/// neighbour in `I \ {v}`.
pub fn prune_outside(g: &Graph, v: usize) -> Result<Reduced> {
    let iset = unique_mis_with_mdi(g, v)?;
    let iprime = iset.difference(VertexSet::singleton(v));
    let mut keep = g.neighbors(v).union(iset);
    loop {
        let lonely: VertexSet = g
            .neighbors(v)
            .intersection(keep)
            .iter()
            .filter(|&x| g.neighbors(x).intersection(iprime).is_empty())
            .collect();
        if lonely.is_empty() {
            break;
        }
        keep = keep.difference(lonely);
    }
    Reduced::new(g, keep, v)
}

/// Applies [`reduce_to_unique_mis`] then [`prune_outside`], composing the
/// vertex origins back to `g`.
pub fn reduction_pipeline(g: &Graph, v: usize) -> Result<Reduced> {
    let first = reduce_to_unique_mis(g, v)?;
    let second = prune_outside(&first.graph, first.center)?;
    let origin = second.origin.iter().map(|&i| first.origin[i]).collect();
    Ok(Reduced { graph: second.graph, origin, center: second.center })
}

/// `N(v)` split by how many members of `I' = I \ {v}` each vertex sees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodPartition {
    pub center: usize,
    pub iset: VertexSet,
    pub iprime: VertexSet,
    /// `classes[i - 1]` is `Q_i`, for `i = 1..=|I'|`.
    pub classes: Vec<VertexSet>,
}

/// The `α = 3` naming of a partition: `I' = {u, w}` with `u < w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaThreeClasses {
    pub u: usize,
    pub w: usize,
    pub q_u: VertexSet,
    pub q_w: VertexSet,
    pub q: VertexSet,
    pub n: VertexSet,
}

impl NeighborhoodPartition {
    pub fn alpha_three(&self, g: &Graph) -> Option<AlphaThreeClasses> {
        if self.iprime.len() != 2 {
            return None;
        }
        let mut it = self.iprime.iter();
        let (u, w) = (it.next()?, it.next()?);
        let q = self.classes[0];
        let q_u = q.intersection(g.neighbors(u));
        let q_w = q.intersection(g.neighbors(w));
        Some(AlphaThreeClasses { u, w, q_u, q_w, q, n: self.classes[1] })
    }
}

/// Partitions `N(v)` of a graph already reduced by [`reduction_pipeline`].
pub fn partition_neighborhood(g: &Graph, v: usize) -> Result<NeighborhoodPartition> {
    let iset = unique_mis_with_mdi(g, v)?;
    let iprime = iset.difference(VertexSet::singleton(v));
    let nbrs = g.neighbors(v);
    if nbrs.union(iset) != g.vertices() {
        return Err(Error::Precondition("graph has vertices outside N(v) ∪ I".into()));
    }
    let mut classes = vec![VertexSet::EMPTY; iprime.len()];
    for x in nbrs {
        let seen = g.neighbors(x).intersection(iprime).len();
        if seen == 0 {
            return Err(Error::Precondition(format!("neighbour {x} has no neighbour in I'")));
        }
        classes[seen - 1].insert(x);
    }
    Ok(NeighborhoodPartition { center: v, iset, iprime, classes })
}
