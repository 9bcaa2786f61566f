//! Slow, obviously-correct reference computations. Everything here works
//! from adjacency queries alone and shares no code with the algorithms it
//! is compared against.

use std::collections::{BTreeSet, HashSet};

use reslab::Graph;

fn independent(g: &Graph, s: u64) -> bool {
    let n = g.order();
    (0..n).all(|a| s >> a & 1 == 0 || (a + 1..n).all(|b| s >> b & 1 == 0 || !g.has_edge(a, b)))
}

fn members(s: u64) -> Vec<usize> {
    (0..64).filter(|&v| s >> v & 1 == 1).collect()
}

/// Largest independent subset, by checking all `2^n` subsets.
pub fn alpha(g: &Graph) -> usize {
    (0u64..1 << g.order()).filter(|&s| independent(g, s)).map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

/// All maximum independent sets as sorted vertex lists, in lexicographic order.
pub fn all_mis(g: &Graph) -> Vec<Vec<usize>> {
    let a = alpha(g);
    let mut out: Vec<Vec<usize>> =
        (0u64..1 << g.order()).filter(|&s| s.count_ones() as usize == a && independent(g, s)).map(members).collect();
    out.sort();
    out
}

/// Maximum-degree vertices contained in every maximum independent set.
pub fn mdi(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let deg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&x| g.has_edge(v, x)).count()).collect();
    let delta = deg.iter().copied().max().unwrap_or(0);
    let sets = all_mis(g);
    (0..n).filter(|&v| deg[v] == delta && sets.iter().all(|s| s.contains(&v))).collect()
}

/// Havel-Hakimi written out plainly: `None` if the sequence is not graphic,
/// otherwise the number of zeros it ends with.
pub fn residue_of(seq: &[usize]) -> Option<usize> {
    let mut d: Vec<usize> = seq.to_vec();
    loop {
        d.sort_unstable_by(|a, b| b.cmp(a));
        if d.first().is_none_or(|&x| x == 0) {
            return Some(d.len());
        }
        let top = d.remove(0);
        if top > d.len() {
            return None;
        }
        for x in d.iter_mut().take(top) {
            if *x == 0 {
                return None;
            }
            *x -= 1;
        }
    }
}

/// Degree sequence of `g`, non-increasing.
pub fn degrees(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut d: Vec<usize> = (0..n).map(|v| (0..n).filter(|&x| g.has_edge(v, x)).count()).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Graph with edge set given by bit `k` = `k`-th pair in (0,1),(0,2),(1,2),... order.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("small graph")
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |m| from_mask(n, m))
}

/// Degree sequences realized by some labeled graph on `n` vertices.
pub fn realizable(n: usize) -> HashSet<Vec<usize>> {
    all_graphs(n).map(|g| degrees(&g)).collect()
}

/// Non-increasing sequences of length `len` with entries at most `max`.
pub fn non_increasing(len: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in (0..=cap).rev() {
            cur.push(x);
            go(len, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max, &mut Vec::new(), &mut out);
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, k - 1);
            out.push(q);
        }
    }
    out
}

/// Edge mask of the subgraph induced on `verts`, relabelled in list order.
pub fn induced_mask(g: &Graph, verts: &[usize]) -> u64 {
    let mut mask = 0;
    let mut k = 0;
    for j in 1..verts.len() {
        for i in 0..j {
            if g.has_edge(verts[i], verts[j]) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

/// Edge masks of every labelled copy of `p`.
pub fn labelled_copies(p: &Graph) -> HashSet<u64> {
    let k = p.order();
    permutations(k)
        .into_iter()
        .map(|perm| {
            let mut order = vec![0; k];
            for (v, &to) in perm.iter().enumerate() {
                order[to] = v;
            }
            induced_mask(p, &order)
        })
        .collect()
}

/// All `k`-subsets of `0..n` as ascending lists.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n).filter(|s| s.count_ones() as usize == k).map(members).collect()
}

/// Whether some `|p|`-subset of the host induces a copy of `p`.
pub fn has_induced(host: &Graph, p: &Graph) -> bool {
    let copies = labelled_copies(p);
    subsets(host.order(), p.order()).iter().any(|s| copies.contains(&induced_mask(host, s)))
}

/// Whether `a` and `b` are isomorphic, by trying every bijection.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && labelled_copies(a).contains(&induced_mask(b, &(0..b.order()).collect::<Vec<_>>()))
}

/// Every independent-set size Maxine can end with, by plain recursion over
/// all tie-break choices.
pub fn maxine_sizes(g: &Graph) -> BTreeSet<usize> {
    fn go(g: &Graph, alive: u64, out: &mut BTreeSet<usize>) {
        let deg = |v: usize| (0..g.order()).filter(|&x| alive >> x & 1 == 1 && g.has_edge(v, x)).count();
        let live = members(alive);
        let delta = live.iter().map(|&v| deg(v)).max().unwrap_or(0);
        if delta == 0 {
            out.insert(live.len());
            return;
        }
        for &v in live.iter().filter(|&&v| deg(v) == delta) {
            go(g, alive & !(1 << v), out);
        }
    }
    let mut out = BTreeSet::new();
    go(g, (1u64 << g.order()) - 1, &mut out);
    out
}
