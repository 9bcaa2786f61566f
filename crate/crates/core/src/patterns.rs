//! Named pattern graphs, the forbidden-structure family built around an
//! independent triple `{u, v, w}`, and induced-subgraph search.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::independence::{all_mis, all_mis_unbounded, mdi_from};

/// Path `0 - 1 - ... - (n-1)`. Panics above 62 vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path order within capacity")
}

/// Cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    let mut g = path(n);
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// `K_n`. Panics above 62 vertices.
pub fn complete(n: usize) -> Graph {
    Graph::new(n).expect("order within capacity").complement()
}

/// Edgeless graph on `n` vertices. Panics above 62 vertices.
pub fn empty(n: usize) -> Graph {
    Graph::new(n).expect("order within capacity")
}

pub fn complement_cycle(n: usize) -> Result<Graph> {
    Ok(cycle(n)?.complement())
}

pub fn complement_path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Precondition(format!("complement of P{n} needs n >= 2")));
    }
    Ok(path(n).complement())
}

/// Which of the three structures a member realizes, by `|Q'|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FKind {
    /// `|Q'| = 0`, `G[N'] ≅ C̄_n`.
    A,
    /// `|Q'| = 1`, `G[N' ∪ Q'] ≅ C̄_n`.
    B,
    /// `|Q'| = 2`, `G[N' ∪ Q'] ≅ P̄_n` with `Q'` the path ends.
    C,
}

/// How the `Q'` vertices attach to `{u, w}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Case A: nothing to attach.
    Plain,
    /// Case B: `q ~ u` (the `w` side is isomorphic).
    USide,
    /// Case C: `q1, q2 ~ u`.
    SameSide,
    /// Case C: `q1 ~ u`, `q2 ~ w`.
    OppositeSide,
}

impl FKind {
    pub fn variants(self) -> &'static [Variant] {
        match self {
            FKind::A => &[Variant::Plain],
            FKind::B => &[Variant::USide],
            FKind::C => &[Variant::SameSide, Variant::OppositeSide],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    V,
    U,
    W,
    Q,
    N,
}

/// One member of the family with its role labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FMember {
    pub kind: FKind,
    pub core_size: usize,
    pub variant: Variant,
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub mdi_verified: bool,
}

// Fixed layout: v = 0, u = 1, w = 2, core vertices 3.. in cycle/path order.
const V: usize = 0;
const U: usize = 1;
const W: usize = 2;
const CORE: usize = 3;

impl FMember {
    pub fn v(&self) -> usize {
        V
    }

    pub fn u(&self) -> usize {
        U
    }

    pub fn w(&self) -> usize {
        W
    }

    pub fn with_role(&self, role: Role) -> VertexSet {
        self.roles.iter().enumerate().filter(|&(_, &r)| r == role).map(|(i, _)| i).collect()
    }

    /// `v=i;u=j;w=k;Q'=..;N'=..`
    pub fn role_string(&self) -> String {
        let list = |s: VertexSet| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("v={};u={};w={};Q'={};N'={}", V, U, W, list(self.with_role(Role::Q)), list(self.with_role(Role::N)))
    }

    /// The graph6 record and role string, tab separated.
    pub fn report_line(&self) -> String {
        format!("{}\t{}", to_graph6(&self.graph), self.role_string())
    }

    pub fn label(&self) -> String {
        let side = match self.variant {
            Variant::Plain | Variant::USide => "",
            Variant::SameSide => "/same",
            Variant::OppositeSide => "/opposite",
        };
        format!("{:?}{}{}", self.kind, self.core_size, side)
    }

    /// Re-derives every structural invariant from the graph and roles.
    pub fn validate(&self) -> Result<()> {
        let g = &self.graph;
        let bad = |m: &str| Err(Error::InvalidMember(format!("{}: {m}", self.label())));
        let q = self.with_role(Role::Q);
        let n = self.with_role(Role::N);
        let want_q = match self.kind {
            FKind::A => 0,
            FKind::B => 1,
            FKind::C => 2,
        };
        if self.roles.len() != g.order() || self.roles[..CORE] != [Role::V, Role::U, Role::W] {
            return bad("roles do not label v, u, w");
        }
        if q.len() != want_q || q.len() + n.len() != self.core_size {
            return bad("wrong |Q'|");
        }
        if !g.is_independent(VertexSet(0b111)) {
            return bad("{u,v,w} not independent");
        }
        let core = q.union(n);
        if g.neighbors(V) != core {
            return bad("v must see exactly the core");
        }
        for x in n {
            if !g.has_edge(x, U) || !g.has_edge(x, W) {
                return bad("N' vertex misses u or w");
            }
        }
        for x in q {
            if g.has_edge(x, U) == g.has_edge(x, W) {
                return bad("Q' vertex must see exactly one of u, w");
            }
        }
        let expected = match self.kind {
            FKind::A | FKind::B => complement_cycle(self.core_size)?,
            FKind::C => complement_path(self.core_size)?,
        };
        if g.induced(core)? != expected {
            return bad("core is not the expected complement");
        }
        if self.kind == FKind::C {
            let ends = VertexSet::singleton(CORE).union(VertexSet::singleton(CORE + self.core_size - 1));
            if q != ends {
                return bad("Q' must be the path ends");
            }
        }
        Ok(())
    }
}

impl fmt::Display for FMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.label(), self.report_line())
    }
}

/// Builds the member of the given kind on `n + 3` vertices.
pub fn gen_f_member(kind: FKind, n: usize, variant: Variant) -> Result<FMember> {
    if n < 3 {
        return Err(Error::InvalidMember(format!("core size {n} below 3")));
    }
    if n + CORE > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices(n + CORE));
    }
    if !kind.variants().contains(&variant) {
        return Err(Error::InvalidMember(format!("variant {variant:?} not valid for case {kind:?}")));
    }
    let core = match kind {
        FKind::A | FKind::B => complement_cycle(n)?,
        FKind::C => complement_path(n)?,
    };
    let mut graph = Graph::new(n + CORE)?;
    let mut roles = vec![Role::V, Role::U, Role::W];
    roles.extend(std::iter::repeat_n(Role::N, n));
    match kind {
        FKind::A => {}
        FKind::B => roles[CORE] = Role::Q,
        FKind::C => {
            roles[CORE] = Role::Q;
            roles[CORE + n - 1] = Role::Q;
        }
    }
    for (a, b) in core.edges() {
        graph.add_edge(CORE + a, CORE + b)?;
    }
    for (x, role) in roles.iter().enumerate().skip(CORE) {
        graph.add_edge(V, x)?;
        if *role == Role::N {
            graph.add_edge(U, x)?;
            graph.add_edge(W, x)?;
        }
    }
    match variant {
        Variant::Plain => {}
        Variant::USide => graph.add_edge(U, CORE)?,
        Variant::SameSide => {
            graph.add_edge(U, CORE)?;
            graph.add_edge(U, CORE + n - 1)?;
        }
        Variant::OppositeSide => {
            graph.add_edge(U, CORE)?;
            graph.add_edge(W, CORE + n - 1)?;
        }
    }
    let report = all_mis_unbounded(&graph);
    let mdi_verified = mdi_from(&graph, &report).contains(V);
    let member = FMember { kind, core_size: n, variant, graph, roles, mdi_verified };
    member.validate()?;
    Ok(member)
}

/// Every member on at most `max_vertices` vertices, ordered by core size,
/// then kind, then variant. With `mdi_filter` only members whose `v` has MDI
/// conditions are kept.
pub fn f_catalog(max_vertices: usize, mdi_filter: bool) -> Vec<FMember> {
    let mut out = Vec::new();
    for n in 3..=max_vertices.min(crate::graph::MAX_VERTICES).saturating_sub(CORE) {
        for kind in [FKind::A, FKind::B, FKind::C] {
            for &variant in kind.variants() {
                let m = gen_f_member(kind, n, variant).expect("catalog parameters are valid");
                if !mdi_filter || m.mdi_verified {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// Injective map from pattern vertices to host vertices preserving both
/// adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

/// Finds the lexicographically least induced embedding of `pattern` into
/// `host` that sends each anchored pattern vertex `(p, h)` to `h`.
pub fn find_induced(host: &Graph, pattern: &Graph, anchor: &[(usize, usize)]) -> Result<Option<Embedding>> {
    let k = pattern.order();
    let mut fixed: Vec<Option<usize>> = vec![None; k];
    let mut used_by_anchor = VertexSet::EMPTY;
    for &(p, h) in anchor {
        if p >= k || h >= host.order() {
            return Err(Error::InconsistentAnchor(format!("({p} -> {h}) out of range")));
        }
        match fixed[p] {
            Some(prev) if prev != h => {
                return Err(Error::InconsistentAnchor(format!("pattern vertex {p} anchored twice")))
            }
            Some(_) => continue,
            None => {}
        }
        if used_by_anchor.contains(h) {
            return Err(Error::InconsistentAnchor(format!("host vertex {h} anchored twice")));
        }
        fixed[p] = Some(h);
        used_by_anchor.insert(h);
    }
    if k > host.order() {
        return Ok(None);
    }

    // host vertices with enough neighbours and enough non-neighbours for p
    let hn = host.order();
    let eligible: Vec<VertexSet> = (0..k)
        .map(|p| {
            let dp = pattern.degree(p);
            let np = k - 1 - dp;
            let mut s: VertexSet = (0..hn).filter(|&h| host.degree(h) >= dp && hn - 1 - host.degree(h) >= np).collect();
            if let Some(h) = fixed[p] {
                s = s.intersection(VertexSet::singleton(h));
            } else {
                s = s.difference(used_by_anchor);
            }
            s
        })
        .collect();

    let mut map = vec![0usize; k];
    if extend(host, pattern, &eligible, &mut map, 0, VertexSet::EMPTY) {
        Ok(Some(Embedding { map }))
    } else {
        Ok(None)
    }
}

fn extend(host: &Graph, pattern: &Graph, eligible: &[VertexSet], map: &mut [usize], p: usize, used: VertexSet) -> bool {
    if p == map.len() {
        return true;
    }
    let mut cand = eligible[p].difference(used);
    for (q, &hq) in map[..p].iter().enumerate() {
        let nq = host.neighbors(hq);
        cand = if pattern.has_edge(p, q) { cand.intersection(nq) } else { cand.difference(nq) };
        if cand.is_empty() {
            return false;
        }
    }
    for h in cand {
        map[p] = h;
        let mut next = used;
        next.insert(h);
        if extend(host, pattern, eligible, map, p + 1, next) {
            return true;
        }
    }
    false
}

/// True iff some induced `P5` of `g` has its centre at an MDI vertex of `g`.
pub fn has_p5_star(g: &Graph) -> Result<bool> {
    if g.order() < 5 {
        return Ok(false);
    }
    let report = all_mis(g)?;
    has_p5_star_given(g, mdi_from(g, &report))
}

pub(crate) fn has_p5_star_given(g: &Graph, mdi: VertexSet) -> Result<bool> {
    let p5 = path(5);
    for c in mdi {
        if find_induced(g, &p5, &[(2, c)])?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True iff no pattern with at most `g.order()` vertices is induced in `g`.
pub fn is_family_free<'a>(g: &Graph, patterns: impl IntoIterator<Item = &'a Graph>) -> bool {
    patterns.into_iter().filter(|p| p.order() <= g.order()).all(|p| matches!(find_induced(g, p, &[]), Ok(None)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::independence::{alpha, mdi_vertices};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn constructors() {
        assert_eq!(path(2), Graph::from_edges(2, &[(0, 1)]).unwrap());
        assert_eq!(cycle(4).unwrap(), Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap());
        assert_eq!(complete(1), empty(1));
        assert_eq!(cycle(2), Err(Error::CycleTooShort(2)));
        assert_eq!(path(0).order(), 0);
    }

    #[test]
    fn complements() {
        assert_eq!(complement_cycle(3).unwrap(), empty(3));
        assert_eq!(complement_cycle(4).unwrap(), Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap());
        assert_eq!(complement_path(3).unwrap(), Graph::from_edges(3, &[(0, 2)]).unwrap());
        assert!(complement_path(1).is_err());
        assert!(complement_cycle(2).is_err());
    }

    #[test]
    fn member_a4() {
        let m = gen_f_member(FKind::A, 4, Variant::Plain).unwrap();
        assert_eq!(m.graph.order(), 7);
        assert!(m.mdi_verified);
        let report = all_mis(&m.graph).unwrap();
        assert_eq!(report.all_mis, vec![set(&[0, 1, 2])]);
        assert_eq!(m.graph.degree(0), 4);
        assert_eq!(m.graph.max_degree(), 4);
        assert_eq!(m.role_string(), "v=0;u=1;w=2;Q'=;N'=3,4,5,6");
    }

    #[test]
    fn member_b3_is_not_mdi() {
        let m = gen_f_member(FKind::B, 3, Variant::USide).unwrap();
        assert!(!m.mdi_verified);
        let report = all_mis(&m.graph).unwrap();
        assert!(report.all_mis.contains(&set(&[3, 4, 5])));
        assert_eq!(m.role_string(), "v=0;u=1;w=2;Q'=3;N'=4,5");
    }

    #[test]
    fn member_c3_opposite() {
        let m = gen_f_member(FKind::C, 3, Variant::OppositeSide).unwrap();
        assert_eq!(m.graph.order(), 6);
        let (q1, x, q2) = (3, 4, 5);
        assert!(m.graph.has_edge(q1, q2));
        assert!(!m.graph.has_edge(x, q1) && !m.graph.has_edge(x, q2));
        assert!(m.graph.has_edge(q1, 1) && m.graph.has_edge(q2, 2));
        assert!(m.mdi_verified);
    }

    #[test]
    fn member_errors() {
        assert!(gen_f_member(FKind::A, 2, Variant::Plain).is_err());
        assert!(gen_f_member(FKind::A, 4, Variant::SameSide).is_err());
        assert!(gen_f_member(FKind::C, 4, Variant::USide).is_err());
        assert!(gen_f_member(FKind::C, 60, Variant::SameSide).is_err());
    }

    #[test]
    fn validate_rejects_tampering() {
        let mut m = gen_f_member(FKind::A, 5, Variant::Plain).unwrap();
        m.graph.add_edge(1, 2).unwrap();
        assert!(m.validate().is_err());
        let mut m = gen_f_member(FKind::B, 5, Variant::USide).unwrap();
        m.graph.add_edge(2, 3).unwrap();
        assert!(m.validate().is_err());
    }

    #[test]
    fn catalog_filtering() {
        let f6 = f_catalog(6, true);
        let labels: Vec<_> = f6.iter().map(|m| m.label()).collect();
        assert_eq!(labels, vec!["C3/same", "C3/opposite"]);
        let raw7 = f_catalog(7, false);
        let f7 = f_catalog(7, true);
        assert!(f7.iter().all(|m| raw7.contains(m)));
        assert_eq!(raw7.len(), 8);
        for m in f_catalog(10, true) {
            let report = all_mis(&m.graph).unwrap();
            assert_eq!(report.alpha, 3, "{}", m.label());
            assert_eq!(report.all_mis, vec![set(&[0, 1, 2])], "{}", m.label());
        }
    }

    #[test]
    fn find_induced_examples() {
        let c5 = cycle(5).unwrap();
        let e = find_induced(&c5, &path(4), &[]).unwrap().unwrap();
        assert_eq!(e.map, vec![0, 1, 2, 3]);
        assert!(find_induced(&complete(4), &path(3), &[]).unwrap().is_none());
        let e = find_induced(&path(5), &path(5), &[(2, 2)]).unwrap().unwrap();
        assert_eq!(e.map[2], 2);
        assert!(find_induced(&path(3), &path(5), &[]).unwrap().is_none());
    }

    #[test]
    fn anchor_errors() {
        let p5 = path(5);
        assert!(matches!(find_induced(&p5, &path(3), &[(0, 1), (1, 1)]), Err(Error::InconsistentAnchor(_))));
        assert!(matches!(find_induced(&p5, &path(3), &[(0, 1), (0, 2)]), Err(Error::InconsistentAnchor(_))));
        assert!(matches!(find_induced(&p5, &path(3), &[(5, 1)]), Err(Error::InconsistentAnchor(_))));
        assert!(matches!(find_induced(&p5, &path(3), &[(0, 9)]), Err(Error::InconsistentAnchor(_))));
        // consistent but impossible: centre of P3 on an end of P5
        assert!(find_induced(&p5, &path(3), &[(1, 0)]).unwrap().is_none());
    }

    #[test]
    fn p5_star() {
        assert!(has_p5_star(&path(5)).unwrap());
        assert!(!has_p5_star(&cycle(4).unwrap()).unwrap());
        let c6 = cycle(6).unwrap();
        assert!(find_induced(&c6, &path(5), &[]).unwrap().is_some());
        assert!(mdi_vertices(&c6).unwrap().mdi_vertices.is_empty());
        assert!(!has_p5_star(&c6).unwrap());
        assert_eq!(alpha(&c6), 3);
    }

    #[test]
    fn family_freeness() {
        let c4 = cycle(4).unwrap();
        let p5 = path(5);
        assert!(!is_family_free(&c4, [&c4, &p5]));
        assert!(is_family_free(&complete(5), [&c4, &p5]));
        // spider: 0-1-2-3-4 with 5, 6 hanging off 2
        let tree = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap();
        assert!(!is_family_free(&tree, [&p5]));
    }

    #[test]
    fn relabelled_host_same_answer() {
        let m = gen_f_member(FKind::C, 4, Variant::SameSide).unwrap();
        let perm = [6, 2, 4, 0, 1, 5, 3];
        let host = m.graph.permuted(&perm);
        assert!(isomorphic(&host, &m.graph));
        let e = find_induced(&host, &m.graph, &[]).unwrap().unwrap();
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(m.graph.has_edge(a, b), host.has_edge(e.map[a], e.map[b]));
            }
        }
    }
}
