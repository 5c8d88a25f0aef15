use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on contiguous vertex ids 0..n-1.
///
/// Adjacency is a bitmask per vertex, so order is capped at 64. The struct is
/// immutable after construction: every operation returns a new graph, which
/// keeps parallel searches free of synchronization.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
}

/// Twin classification: `Independent` means N(u) = N(v) (u, v nonadjacent),
/// `Adjacent` means N[u] = N[v] (u, v adjacent).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    Independent,
    Adjacent,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn build(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if order > MAX_VERTICES {
            return Err(Error::SizeLimit {
                order,
                limit: MAX_VERTICES,
            });
        }
        let mut adjacency = vec![VertexSet::EMPTY; order];
        for &(u, v) in edges {
            if u >= order {
                return Err(Error::InvalidVertex { vertex: u, order });
            }
            if v >= order {
                return Err(Error::InvalidVertex { vertex: v, order });
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            adjacency[u] = adjacency[u].with(v);
            adjacency[v] = adjacency[v].with(u);
        }
        Ok(Graph { adjacency })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// The full vertex set {0, .., n-1}.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Unchecked adjacency access for internal hot paths.
    pub(crate) fn adj(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        Ok(self.neighbors(v)?.with(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].contains(v)
    }

    /// Edges as ordered pairs (u < v), sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.adjacency[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Adds one edge, returning the new graph. Adding an existing edge is a
    /// no-op under set semantics.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopRejected(u));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u] = adjacency[u].with(v);
        adjacency[v] = adjacency[v].with(u);
        Ok(Graph { adjacency })
    }

    /// Removes one edge; the vertex set is unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u] = adjacency[u].without(v);
        adjacency[v] = adjacency[v].without(u);
        Ok(Graph { adjacency })
    }

    /// Deletes a vertex and its incident edges. Remaining ids are compacted
    /// preserving relative order; the map sends old ids to new ids, with
    /// `None` at the deleted vertex.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_vertex(v)?;
        let mut map = vec![None; self.order()];
        let mut next = 0;
        for u in self.vertices() {
            if u != v {
                map[u] = Some(next);
                next += 1;
            }
        }
        let mut adjacency = vec![VertexSet::EMPTY; self.order() - 1];
        for u in self.vertices() {
            let Some(nu) = map[u] else { continue };
            adjacency[nu] = self.adjacency[u]
                .without(v)
                .iter()
                .map(|w| map[w].unwrap())
                .collect();
        }
        Ok((Graph { adjacency }, map))
    }

    /// Contracts edge {u, v}: the endpoints merge into one vertex whose
    /// neighborhood is (N(u) ∪ N(v)) \ {u, v}; loops and parallel edges are
    /// discarded. Ids are compacted; the quotient map sends old ids to new
    /// ids and maps u and v to the same vertex.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        // lo keeps the merged vertex; compaction removes hi.
        let mut map = vec![0; self.order()];
        let mut next = 0;
        for w in self.vertices() {
            if w == hi {
                continue;
            }
            map[w] = next;
            next += 1;
        }
        map[hi] = map[lo];
        let mut adjacency = vec![VertexSet::EMPTY; self.order() - 1];
        for (a, b) in self.edges() {
            let (na, nb) = (map[a], map[b]);
            if na == nb {
                continue; // the contracted edge becomes a loop; drop it
            }
            adjacency[na] = adjacency[na].with(nb);
            adjacency[nb] = adjacency[nb].with(na);
        }
        Ok((Graph { adjacency }, map))
    }

    /// All twin pairs, sorted lexicographically.
    pub fn twins(&self) -> Vec<(usize, usize, TwinKind)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in u + 1..self.order() {
                if self.adjacency[u] == self.adjacency[v] && !self.has_edge(u, v) {
                    out.push((u, v, TwinKind::Independent));
                } else if self.adjacency[u].with(u) == self.adjacency[v].with(v) {
                    out.push((u, v, TwinKind::Adjacent));
                }
            }
        }
        out
    }

    /// Connected components as induced subgraphs. Each component comes with
    /// its sorted original-vertex list: component vertex i corresponds to
    /// original vertex `mapping[i]`.
    pub fn components(&self) -> Vec<(Graph, Vec<usize>)> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(start) {
                continue;
            }
            let comp = self.reach(start);
            seen = seen.union(comp);
            out.push((self.induced(comp), comp.to_vec()));
        }
        out
    }

    /// Vertices reachable from `start`.
    fn reach(&self, start: usize) -> VertexSet {
        let mut frontier = VertexSet::singleton(start);
        let mut seen = frontier;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adjacency[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Induced subgraph on `keep`, ids compacted in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let ids = keep.to_vec();
        let mut map = vec![usize::MAX; self.order()];
        for (new_id, &old) in ids.iter().enumerate() {
            map[old] = new_id;
        }
        let adjacency = ids
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .intersection(keep)
                    .iter()
                    .map(|w| map[w])
                    .collect()
            })
            .collect();
        Graph { adjacency }
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach(0) == self.vertex_set()
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.is_connected() && self.edge_count() == self.order() - 1
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> VertexSet {
        self.vertices()
            .filter(|&v| self.adjacency[v].len() == 1)
            .collect()
    }

    /// True iff swapping u and v everywhere maps the edge set onto itself.
    /// Used to validate reported twin pairs.
    pub fn swap_is_automorphism(&self, u: usize, v: usize) -> bool {
        if u >= self.order() || v >= self.order() {
            return false;
        }
        let swap = |w: usize| {
            if w == u {
                v
            } else if w == v {
                u
            } else {
                w
            }
        };
        self.edges()
            .into_iter()
            .all(|(a, b)| self.has_edge(swap(a), swap(b)))
    }

    /// Internal consistency: symmetric, irreflexive, ids in range.
    #[cfg(test)]
    pub(crate) fn assert_valid(&self) {
        for u in self.vertices() {
            assert!(!self.adjacency[u].contains(u), "loop at {u}");
            for v in self.adjacency[u].iter() {
                assert!(v < self.order(), "neighbor {v} out of range");
                assert!(self.adjacency[v].contains(u), "asymmetric edge ({u},{v})");
            }
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            Graph::build(2, &[(0, 2)]),
            Err(Error::InvalidVertex {
                vertex: 2,
                order: 2
            })
        ));
        assert!(matches!(
            Graph::build(2, &[(1, 1)]),
            Err(Error::LoopRejected(1))
        ));
        assert!(matches!(
            Graph::build(65, &[]),
            Err(Error::SizeLimit {
                order: 65,
                limit: 64
            })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        g.assert_valid();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.degree(2).unwrap(), 0);
    }

    #[test]
    fn structural_queries() {
        let g = path(4);
        assert_eq!(g.degree(0).unwrap(), 1);
        assert_eq!(g.degree(1).unwrap(), 2);
        assert_eq!(g.neighbors(1).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(g.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(g.is_tree());
        assert_eq!(g.leaves().to_vec(), vec![0, 3]);
        assert!(g.neighbors(9).is_err());
    }

    #[test]
    fn delete_edge_then_add_restores() {
        let g = path(5);
        let h = g.delete_edge(2, 3).unwrap();
        h.assert_valid();
        assert_eq!(h.edge_count(), 3);
        assert!(!h.is_connected());
        assert_eq!(h.add_edge(3, 2).unwrap(), g);
        assert!(matches!(g.delete_edge(0, 4), Err(Error::MissingEdge(0, 4))));
    }

    #[test]
    fn delete_vertex_compacts_ids() {
        // Path 0-1-2-3; deleting 1 leaves edge (2,3) renamed to (1,2).
        let g = path(4);
        let (h, map) = g.delete_vertex(1).unwrap();
        h.assert_valid();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert_eq!(map, vec![Some(0), None, Some(1), Some(2)]);
    }

    #[test]
    fn contract_cycle_gives_smaller_cycle() {
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (h, map) = c4.contract_edge(1, 2).unwrap();
        h.assert_valid();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edge_count(), 3); // C_3
        assert_eq!(map[1], map[2]);
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        let (k1, _) = k2.contract_edge(0, 1).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn contraction_merges_neighborhoods() {
        // Star with extra edge: contracting (0,1) keeps 1's private neighbor.
        let g = Graph::build(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let (h, map) = g.contract_edge(0, 1).unwrap();
        h.assert_valid();
        assert_eq!(h.order(), 3);
        let merged = map[0];
        assert_eq!(h.neighbors(merged).unwrap().len(), 2);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn twins_detection() {
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let pairs = k3.twins();
        assert_eq!(pairs.len(), 3);
        assert!(pairs.iter().all(|&(_, _, k)| k == TwinKind::Adjacent));

        // K_4 minus an edge: the nonadjacent pair shares open neighborhoods,
        // the two degree-3 vertices share closed neighborhoods.
        let diamond = Graph::build(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            diamond.twins(),
            vec![(0, 3, TwinKind::Independent), (1, 2, TwinKind::Adjacent)]
        );

        assert!(path(4).twins().is_empty());
        for (u, v, _) in diamond.twins() {
            assert!(diamond.swap_is_automorphism(u, v));
        }
    }

    #[test]
    fn components_partition_vertices() {
        let g = Graph::build(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        let mut all: Vec<usize> = comps.iter().flat_map(|(_, m)| m.clone()).collect();
        all.sort();
        assert_eq!(all, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(comps[1].0.order(), 3);
        assert_eq!(comps[1].0.edges(), vec![(0, 1), (1, 2)]);
        assert!(Graph::build(0, &[]).unwrap().components().is_empty());
    }

    #[test]
    fn connectivity_and_trees() {
        assert!(path(1).is_tree());
        assert!(!Graph::build(2, &[]).unwrap().is_connected());
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_tree());
        assert!(c4.is_connected());
    }
}
