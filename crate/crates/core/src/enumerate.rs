//! Exhaustive enumeration of labeled graphs in edge-mask counting order.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard ceiling on labeled enumeration; `2^28` graphs at n = 8.
pub const ENUMERATION_CAP: usize = 8;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// Iterator over labeled graphs whose edge masks lie in a range.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_edge_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, each exactly once.
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    enumerate_range(n, 0..labeled_count_checked(n)?)
}

/// The slice of [`enumerate_labeled`] with edge masks in `range`.
pub fn enumerate_range(n: usize, range: Range<u64>) -> Result<LabeledGraphs> {
    let total = labeled_count_checked(n)?;
    let end = range.end.min(total);
    Ok(LabeledGraphs { n, next: range.start.min(end), end })
}

fn labeled_count_checked(n: usize) -> Result<u64> {
    if n > ENUMERATION_CAP {
        return Err(Error::LimitExceeded { what: "labeled enumeration", limit: ENUMERATION_CAP, n });
    }
    Ok(labeled_count(n))
}

/// Splits `0..total` into `shards` contiguous ranges, the first ones taking
/// the remainder.
pub fn shard_ranges(total: u64, shards: usize) -> Vec<Range<u64>> {
    let shards = shards.max(1) as u64;
    let base = total / shards;
    let extra = total % shards;
    let mut start = 0;
    (0..shards)
        .map(|i| {
            let len = base + u64::from(i < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}
