//! Brute-force canonical forms for graphs on at most 8 vertices.
//!
//! The canonical form is the minimum edge mask (graph6 pair order) over all
//! vertex relabellings.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANON_CAP: usize = 8;

/// For each permutation of `0..n`, the image of every pair index.
struct PairMaps {
    pairs: usize,
    maps: Vec<u8>,
}

fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // Heap's algorithm
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    out.push(p.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn pair_maps(n: usize) -> &'static PairMaps {
    static TABLES: [OnceLock<PairMaps>; CANON_CAP + 1] = [const { OnceLock::new() }; CANON_CAP + 1];
    TABLES[n].get_or_init(|| {
        let pairs = n * n.saturating_sub(1) / 2;
        let mut maps = Vec::new();
        for perm in permutations(n) {
            for j in 1..n {
                for i in 0..j {
                    maps.push(pair_index(perm[i], perm[j]) as u8);
                }
            }
        }
        PairMaps { pairs, maps }
    })
}

fn apply(map: &[u8], mut mask: u64) -> u64 {
    let mut out = 0u64;
    while mask != 0 {
        let k = mask.trailing_zeros() as usize;
        out |= 1 << map[k];
        mask &= mask - 1;
    }
    out
}

fn check(g: &Graph) -> Result<()> {
    if g.order() > CANON_CAP {
        return Err(Error::LimitExceeded { what: "canonical form", limit: CANON_CAP, n: g.order() });
    }
    Ok(())
}

/// Minimal edge mask over all relabellings.
pub fn canonical_mask(g: &Graph) -> Result<u64> {
    check(g)?;
    let mask = g.edge_mask();
    let t = pair_maps(g.order());
    if t.pairs == 0 {
        return Ok(0);
    }
    Ok(t.maps.chunks_exact(t.pairs).map(|m| apply(m, mask)).min().unwrap_or(mask))
}

/// Canonical form as bytes: the vertex count followed by the minimal edge
/// mask, big-endian. Equal outputs iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let mask = canonical_mask(g)?;
    let mut out = vec![g.order() as u8];
    out.extend_from_slice(&(mask as u32).to_be_bytes());
    Ok(out)
}

/// True iff `g`'s own edge mask is already its canonical mask. Exactly one
/// labeled graph per isomorphism class satisfies this.
pub fn is_canonical_labeling(g: &Graph) -> Result<bool> {
    check(g)?;
    let mask = g.edge_mask();
    let t = pair_maps(g.order());
    if t.pairs == 0 {
        return Ok(true);
    }
    Ok(t.maps.chunks_exact(t.pairs).all(|m| apply(m, mask) >= mask))
}

/// Isomorphism test: canonical masks up to the cap, a same-order induced
/// embedding search above it.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    if a.order() <= CANON_CAP {
        canonical_mask(a).ok() == canonical_mask(b).ok()
    } else {
        matches!(crate::patterns::find_induced(b, a, &[]), Ok(Some(_)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_labeled;
    use crate::patterns::{complete, cycle, path};
    use std::collections::HashSet;

    #[test]
    fn relabelled_c4_agrees() {
        let a = cycle(4).unwrap();
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn k3_vs_p3() {
        assert_ne!(canonical_form(&complete(3)).unwrap(), canonical_form(&path(3)).unwrap());
    }

    #[test]
    fn cap() {
        assert!(canonical_form(&complete(9)).is_err());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(5).len(), 120);
        let distinct: HashSet<_> = permutations(5).into_iter().collect();
        assert_eq!(distinct.len(), 120);
    }

    #[test]
    fn dedup_small() {
        for (n, classes) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            let forms: HashSet<_> = enumerate_labeled(n).unwrap().map(|g| canonical_form(&g).unwrap()).collect();
            assert_eq!(forms.len(), classes, "n = {n}");
            let reps = enumerate_labeled(n).unwrap().filter(|g| is_canonical_labeling(g).unwrap()).count();
            assert_eq!(reps, classes, "n = {n}");
        }
    }
}
