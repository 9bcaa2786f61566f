//! Writes one graph6 line per isomorphism class of graphs on `n` vertices
//! (default 8), built by adding a vertex to each class on `n - 1` vertices
//! in every possible way and keeping one representative per class.
//!
//!     cargo run --release -p reslab --example nonisomorphic -- 8 > graphs8.g6

use std::collections::HashSet;
use std::io::{self, BufWriter, Write};

use reslab::{to_graph6, Graph, VertexSet};

/// Vertex invariant: degree, then the sorted degrees of the neighbours.
fn invariant(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|x| g.degree(x)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

fn mask_under(g: &Graph, order: &[usize]) -> u64 {
    // order[i] is the vertex that receives label i
    let mut mask = 0u64;
    let mut k = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

/// Minimum edge mask over the labellings that list vertices by increasing
/// invariant. Isomorphic graphs get the same value.
fn canonical(g: &Graph) -> u64 {
    let mut verts: Vec<usize> = (0..g.order()).collect();
    let keys: Vec<_> = verts.iter().map(|&v| invariant(g, v)).collect();
    verts.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match cells.last_mut() {
            Some(c) if keys[c[0]] == keys[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(g.order());
    search(g, &cells, 0, VertexSet::EMPTY, &mut order, &mut best);
    best
}

fn search(g: &Graph, cells: &[Vec<usize>], cell: usize, used: VertexSet, order: &mut Vec<usize>, best: &mut u64) {
    if cell == cells.len() {
        *best = (*best).min(mask_under(g, order));
        return;
    }
    let members = &cells[cell];
    let placed = members.iter().filter(|&&v| used.contains(v)).count();
    if placed == members.len() {
        return search(g, cells, cell + 1, used, order, best);
    }
    for &v in members {
        if used.contains(v) {
            continue;
        }
        order.push(v);
        let mut next = used;
        next.insert(v);
        search(g, cells, cell, next, order, best);
        order.pop();
    }
}

fn classes(n: usize) -> Vec<Graph> {
    if n <= 1 {
        return vec![Graph::new(n).expect("small")];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in classes(n - 1) {
        for nbrs in 0u64..(1 << (n - 1)) {
            let mut g = Graph::new(n).expect("small");
            for (a, b) in base.edges() {
                g.add_edge(a, b).expect("in range");
            }
            for x in VertexSet(nbrs) {
                g.add_edge(x, n - 1).expect("in range");
            }
            let c = canonical(&g);
            if seen.insert(c) {
                out.push(Graph::from_edge_mask(n, c));
            }
        }
    }
    out
}

fn main() -> io::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(8, |a| a.parse().expect("vertex count"));
    assert!(n <= 9, "too many vertices for this generator");
    let mut graphs = classes(n);
    graphs.sort_by_key(|g| (g.edge_count(), g.edge_mask()));
    let mut out = BufWriter::new(io::stdout().lock());
    for g in &graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    eprintln!("{} graphs on {n} vertices", graphs.len());
    Ok(())
}
