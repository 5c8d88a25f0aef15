use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::ParamValue;
use crate::set::VertexSet;

/// Ceiling for the exhaustive cover searches (2^(n-1) edge subsets).
pub const TREE_SEARCH_LIMIT: usize = 12;

/// A partition of a tree's vertices into vertex-disjoint induced paths.
/// Covers built here list each path in walk order starting from its
/// lower-numbered endpoint, with paths ordered by that endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCover {
    pub paths: Vec<Vec<usize>>,
}

impl PathCover {
    /// Number of paths with at least two vertices.
    pub fn multi_count(&self) -> usize {
        self.paths.iter().filter(|p| p.len() >= 2).count()
    }

    /// Number of singleton paths.
    pub fn singleton_count(&self) -> usize {
        self.paths.iter().filter(|p| p.len() == 1).count()
    }
}

fn check_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

fn check_size(t: &Graph) -> Result<()> {
    if t.order() > TREE_SEARCH_LIMIT {
        Err(Error::SizeLimit {
            order: t.order(),
            limit: TREE_SEARCH_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// In a forest, any spanning subgraph with maximum degree two is a disjoint
/// union of paths, and conversely every path cover arises this way. The
/// cover searches below walk all edge subsets with that degree cap.
struct EdgeSubsets {
    edges: Vec<(usize, usize)>,
    order: usize,
    mask: u64,
}

impl EdgeSubsets {
    fn new(t: &Graph) -> EdgeSubsets {
        EdgeSubsets {
            edges: t.edges(),
            order: t.order(),
            mask: 0,
        }
    }
}

impl Iterator for EdgeSubsets {
    /// (kept edge count, singleton count) per degree-capped subset, plus the
    /// mask to reconstruct it.
    type Item = (u64, usize, usize);

    fn next(&mut self) -> Option<Self::Item> {
        let total = 1u64 << self.edges.len();
        while self.mask < total {
            let mask = self.mask;
            self.mask += 1;
            let mut deg = [0u8; 64];
            let mut ok = true;
            for (i, &(u, v)) in self.edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                    if deg[u] > 2 || deg[v] > 2 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let kept = mask.count_ones() as usize;
                let singles = (0..self.order).filter(|&v| deg[v] == 0).count();
                return Some((mask, kept, singles));
            }
        }
        None
    }
}

/// Rebuilds the explicit cover from a kept-edge mask.
fn cover_from_mask(t: &Graph, mask: u64) -> PathCover {
    let edges = t.edges();
    let mut kept = vec![VertexSet::EMPTY; t.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            kept[u] = kept[u].with(v);
            kept[v] = kept[v].with(u);
        }
    }
    let mut seen = VertexSet::EMPTY;
    let mut paths = Vec::new();
    for start in t.vertices() {
        if seen.contains(start) || kept[start].len() > 1 {
            continue; // walk only from endpoints; interior vertices wait
        }
        let mut path = vec![start];
        seen = seen.with(start);
        let mut prev = start;
        let mut cur = start;
        while let Some(next) = kept[cur].iter().find(|&w| w != prev && !seen.contains(w)) {
            path.push(next);
            seen = seen.with(next);
            prev = cur;
            cur = next;
        }
        paths.push(path);
    }
    PathCover { paths }
}

/// Minimum number of paths in a path cover, with one optimal cover.
pub fn path_cover_number(t: &Graph) -> Result<(usize, PathCover)> {
    check_tree(t)?;
    check_size(t)?;
    // Minimizing path count = maximizing kept edges (paths = n - kept).
    let mut best: Option<(u64, usize)> = None;
    for (mask, kept, _) in EdgeSubsets::new(t) {
        if best.is_none_or(|(_, k)| kept > k) {
            best = Some((mask, kept));
        }
    }
    let (mask, kept) = best.expect("the empty subset is always valid");
    Ok((t.order() - kept, cover_from_mask(t, mask)))
}

/// Cost of the fault tolerant set a cover induces: both endpoints of every
/// multi-vertex path plus every singleton.
fn cover_cost(order: usize, kept: usize, singles: usize) -> usize {
    2 * (order - kept) - singles
}

/// Minimum fault tolerant cover cost over all path covers, with a cover
/// attaining it. Order-1 trees have no fault tolerant set at all.
pub fn ft_path_cover_value(t: &Graph) -> Result<(ParamValue, Option<PathCover>)> {
    check_tree(t)?;
    check_size(t)?;
    if t.order() < 2 {
        return Ok((ParamValue::NotExists, None));
    }
    let mut best: Option<(u64, usize)> = None;
    for (mask, kept, singles) in EdgeSubsets::new(t) {
        let cost = cover_cost(t.order(), kept, singles);
        if best.is_none_or(|(_, c)| cost < c) {
            best = Some((mask, cost));
        }
    }
    let (mask, cost) = best.expect("the empty subset is always valid");
    Ok((ParamValue::Count(cost), Some(cover_from_mask(t, mask))))
}

/// Builds the fault tolerant set a cover induces: both endpoints of each
/// multi-vertex path, plus all singletons.
pub fn ft_set_from_cover(t: &Graph, cover: &PathCover) -> Result<VertexSet> {
    check_tree(t)?;
    if t.order() < 2 {
        return Err(Error::InvalidCover(
            "an order-1 tree has no fault tolerant set".to_string(),
        ));
    }
    let mut seen = VertexSet::EMPTY;
    for path in &cover.paths {
        if path.is_empty() {
            return Err(Error::InvalidCover("empty path".to_string()));
        }
        for &v in path {
            t.check_vertex(v)
                .map_err(|_| Error::InvalidCover(format!("vertex {v} out of range")))?;
            if seen.contains(v) {
                return Err(Error::InvalidCover(format!("vertex {v} appears twice")));
            }
            seen = seen.with(v);
        }
        for pair in path.windows(2) {
            if !t.has_edge(pair[0], pair[1]) {
                return Err(Error::InvalidCover(format!(
                    "consecutive vertices {} and {} are not adjacent",
                    pair[0], pair[1]
                )));
            }
        }
    }
    if seen != t.vertex_set() {
        return Err(Error::InvalidCover(
            "paths do not cover every vertex".to_string(),
        ));
    }
    let mut b = VertexSet::EMPTY;
    for path in &cover.paths {
        b = b.with(path[0]).with(*path.last().unwrap());
    }
    Ok(b)
}

/// Leaf count, and whether the leaf set is 1-fault-tolerant (it always is
/// for trees with at least two vertices; the check is explicit, not assumed).
pub fn leaf_bound_check(t: &Graph) -> Result<(usize, bool)> {
    check_tree(t)?;
    let leaves = t.leaves();
    let cfg = crate::search::SearchConfig {
        size_limit: t.order().max(crate::search::DEFAULT_SIZE_LIMIT),
        ..Default::default()
    };
    let ft = crate::search::is_k_fault_tolerant(t, leaves, 1, &cfg)?;
    Ok((leaves.len(), ft))
}
