//! Instance pools for the verification suite: every free tree up to a given
//! order, seeded random connected graphs, and seeded (graph, subset) pairs.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::set::VertexSet;

/// Rooted trees on n vertices as level sequences, in the classic
/// reverse-lexicographic successor order. The first sequence is the path
/// (1,2,..,n); the last is the star (1,2,2,..,2).
struct RootedTrees {
    levels: Vec<usize>,
    fresh: bool,
}

impl RootedTrees {
    fn new(n: usize) -> RootedTrees {
        RootedTrees {
            levels: (1..=n).collect(),
            fresh: true,
        }
    }
}

impl Iterator for RootedTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.fresh {
            self.fresh = false;
            return Some(self.levels.clone());
        }
        // Successor rule: find the last level > 2, chop everything from
        // there, and tile the segment starting at its parent.
        let p = self.levels.iter().rposition(|&l| l > 2)?;
        let q = self.levels[..p]
            .iter()
            .rposition(|&l| l == self.levels[p] - 1)
            .expect("a parent level precedes every level > 2");
        for i in p..self.levels.len() {
            self.levels[i] = self.levels[i - (p - q)];
        }
        Some(self.levels.clone())
    }
}

/// Builds the tree a level sequence encodes: each vertex attaches to the
/// nearest earlier vertex one level up.
fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 1..levels.len() {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] == levels[i] - 1)
            .expect("level sequences start at the root");
        edges.push((parent, i));
    }
    Graph::build(levels.len(), &edges).expect("level sequence describes a valid tree")
}

/// Subtree sizes with the tree rooted at 0.
fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n == 1 {
        return vec![0];
    }
    let mut size = vec![0usize; n];
    let mut order_stack = Vec::new();
    let mut stack = vec![(0usize, usize::MAX)];
    let mut parent = vec![usize::MAX; n];
    while let Some((v, p)) = stack.pop() {
        parent[v] = p;
        order_stack.push(v);
        for w in t.adj(v).iter() {
            if w != p {
                stack.push((w, v));
            }
        }
    }
    for &v in order_stack.iter().rev() {
        size[v] = 1 + t
            .adj(v)
            .iter()
            .filter(|&w| w != parent[v])
            .map(|w| size[w])
            .sum::<usize>();
    }
    let heaviest = |v: usize| {
        t.adj(v)
            .iter()
            .map(|w| if w == parent[v] { n - size[v] } else { size[w] })
            .max()
            .unwrap_or(0)
    };
    let best = t.vertices().map(heaviest).min().unwrap();
    t.vertices().filter(|&v| heaviest(v) == best).collect()
}

/// Canonical subtree string: children strings sorted and wrapped.
fn ahu(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .adj(v)
        .iter()
        .filter(|&w| w != parent)
        .map(|w| ahu(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical form of a free tree: root at the centroid, or at the centroid
/// edge when there are two.
fn free_canonical(t: &Graph) -> String {
    let c = centroids(t);
    match c.as_slice() {
        [v] => format!("1{}", ahu(t, *v, usize::MAX)),
        [u, v] => {
            let a = ahu(t, *u, *v);
            let b = ahu(t, *v, *u);
            if a <= b {
                format!("2{a}{b}")
            } else {
                format!("2{b}{a}")
            }
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

/// Every free (unlabeled) tree on exactly n vertices, one representative
/// per isomorphism class.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for levels in RootedTrees::new(n) {
        let t = tree_from_levels(&levels);
        if seen.insert(free_canonical(&t)) {
            out.push(t);
        }
    }
    out
}

/// Every free tree with order in 1..=n_max.
pub fn free_trees_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(free_trees).collect()
}

/// Seeded pool of random connected graphs with orders in 1..=n_max.
/// Identical (seed, count, n_max) always produces the same pool.
pub fn random_connected_graphs(count: usize, n_max: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=n_max);
        let p = rng.gen_range(0.3..0.8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, &edges).expect("generated edges are in range");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Seeded pool of (graph, subset) pairs; graphs need not be connected.
pub fn random_graph_subset_pairs(count: usize, n_max: usize, seed: u64) -> Vec<(Graph, VertexSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=n_max);
        let p = rng.gen_range(0.1..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, &edges).expect("generated edges are in range");
        let b = VertexSet::from_mask(rng.gen::<u64>()).intersection(g.vertex_set());
        out.push((g, b));
    }
    out
}

/// Disjoint union with h's ids shifted past g's.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.order();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
    Graph::build(g.order() + h.order(), &edges).expect("shifted ids stay in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_tree_counts_match_the_classic_table() {
        // Rooted trees on n nodes: 1, 1, 2, 4, 9, 20, 48, 115, 286.
        let expect = [1, 1, 2, 4, 9, 20, 48, 115, 286];
        for (i, &want) in expect.iter().enumerate() {
            assert_eq!(RootedTrees::new(i + 1).count(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn free_tree_counts_match_the_classic_table() {
        // Free trees on n nodes: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106.
        let expect = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &want) in expect.iter().enumerate() {
            let trees = free_trees(i + 1);
            assert_eq!(trees.len(), want, "n = {}", i + 1);
            for t in &trees {
                assert!(t.is_tree());
                assert_eq!(t.order(), i + 1);
            }
        }
        assert_eq!(free_trees_up_to(9).len(), 95);
    }

    #[test]
    fn path_and_star_are_enumerated() {
        let trees = free_trees(5);
        let has_path = trees
            .iter()
            .any(|t| t.vertices().all(|v| t.degree(v).unwrap() <= 2));
        let has_star = trees
            .iter()
            .any(|t| t.vertices().any(|v| t.degree(v).unwrap() == 4));
        assert!(has_path);
        assert!(has_star);
    }

    #[test]
    fn random_pools_are_deterministic_and_connected() {
        let a = random_connected_graphs(50, 7, 0xC0FFEE);
        let b = random_connected_graphs(50, 7, 0xC0FFEE);
        assert_eq!(a.len(), 50);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
            assert!(x.is_connected());
            assert!(x.order() <= 7);
        }
        let c = random_connected_graphs(50, 7, 0xBEEF);
        assert_ne!(a, c);

        let pairs = random_graph_subset_pairs(40, 10, 7);
        let again = random_graph_subset_pairs(40, 10, 7);
        assert_eq!(pairs.len(), 40);
        for ((g, s), (g2, s2)) in pairs.iter().zip(&again) {
            assert_eq!(g, g2);
            assert_eq!(s, s2);
            assert!(s.is_subset(g.vertex_set()));
        }
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let p2 = Graph::build(2, &[(0, 1)]).unwrap();
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let u = disjoint_union(&p2, &p3);
        assert_eq!(u.order(), 5);
        assert_eq!(u.edges(), vec![(0, 1), (2, 3), (3, 4)]);
        assert_eq!(u.components().len(), 2);
    }
}
