//! Locating a family member inside an MDI graph, either anywhere in the
//! graph or through the reduction pipeline around a chosen MDI vertex.

use crate::error::Result;
use crate::graph::Graph;
use crate::independence::{partition_neighborhood, reduction_pipeline};
use crate::patterns::{find_induced, Embedding, FMember, Role};

/// Outcome of the two structure-detection modes on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFinding {
    /// First catalog member (by catalog order) induced anywhere in the graph.
    pub unanchored: Option<(String, Embedding)>,
    /// Whether the reduction pipeline located a member for every MDI
    /// vertex; `None` when anchored mode was not run.
    pub anchored: Option<bool>,
}

impl StructureFinding {
    pub fn holds(&self) -> bool {
        self.unanchored.is_some() && self.anchored != Some(false)
    }

    /// Anchored and un-anchored verdicts differ.
    pub fn diverges(&self) -> bool {
        matches!(self.anchored, Some(a) if a != self.unanchored.is_some())
    }
}

pub fn unanchored_member<'c>(g: &Graph, catalog: &'c [FMember]) -> Result<Option<(&'c FMember, Embedding)>> {
    for m in catalog.iter().filter(|m| m.graph.order() <= g.order()) {
        if let Some(e) = find_induced(g, &m.graph, &[])? {
            return Ok(Some((m, e)));
        }
    }
    Ok(None)
}

/// Runs the unique-MIS reduction and the `N(v) ∪ I` pruning for `v`,
/// partitions `N(v)`, and searches for a member with its `v, u, w` on the
/// reduced `v` and `I' = {u, w}` (either orientation), its `N'` inside `N`
/// and its `Q'` inside `Q`. Returns the member and the embedding into `g`.
pub fn anchored_location<'c>(g: &Graph, v: usize, catalog: &'c [FMember]) -> Result<Option<(&'c FMember, Embedding)>> {
    let red = reduction_pipeline(g, v)?;
    let h = &red.graph;
    let part = partition_neighborhood(h, red.center)?;
    let Some(classes) = part.alpha_three(h) else {
        return Ok(None);
    };
    for m in catalog.iter().filter(|m| m.graph.order() <= h.order()) {
        for (u, w) in [(classes.u, classes.w), (classes.w, classes.u)] {
            let anchor = [(m.v(), red.center), (m.u(), u), (m.w(), w)];
            let Some(e) = find_induced(h, &m.graph, &anchor)? else { continue };
            let inside = m.roles.iter().zip(&e.map).all(|(role, &x)| match role {
                Role::N => classes.n.contains(x),
                Role::Q => classes.q.contains(x),
                _ => true,
            });
            if inside {
                let map = e.map.iter().map(|&x| red.origin[x]).collect();
                return Ok(Some((m, Embedding { map })));
            }
        }
    }
    Ok(None)
}
