//! Randomized invariants of the forcing process and graph operations.
//!
//! Strategies build arbitrary graphs on up to 8 vertices from an edge mask,
//! so shrinking walks toward sparse small counterexamples.

use proptest::prelude::*;

use zf_core::enumerate::random_connected_graphs;
use zf_core::oracle::{closure_in_order, sequential_closure};
use zf_core::{closure, is_zfs, pt_set, Graph, Propagation, VertexSet};

const MAX_N: usize = 8;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=MAX_N)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len() as u32;
            (Just(n), Just(pairs), 0u64..(1u64 << m))
        })
        .prop_map(|(n, pairs, mask)| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::build(n, &edges).expect("mask edges are simple and in range")
        })
}

fn arb_graph_and_set() -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph().prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0u64..(1u64 << n)).prop_map(|(g, mask)| (g, VertexSet::from_mask(mask)))
    })
}

proptest! {
    /// The layered closure equals the sequential closure and any
    /// permutation-ordered greedy closure.
    #[test]
    fn closure_is_order_independent(
        (g, b) in arb_graph_and_set(),
        perm_seed in 0u64..1000,
    ) {
        let layered = closure(&g, b).final_set;
        prop_assert_eq!(layered, sequential_closure(&g, b));

        let mut order: Vec<usize> = g.vertices().collect();
        let mut state = perm_seed;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(layered, closure_in_order(&g, b, &order));
    }

    /// Growing the start set never shrinks the closure.
    #[test]
    fn closure_is_monotone((g, b) in arb_graph_and_set(), extra_mask in any::<u64>()) {
        let bigger = b.union(VertexSet::from_mask(extra_mask & (g.vertex_set().mask())));
        let small = closure(&g, b).final_set;
        let large = closure(&g, bigger).final_set;
        prop_assert!(small.is_subset(large), "closure({}) = {} not within closure({}) = {}", b, small, bigger, large);
    }

    /// Each round forces at least one vertex, so a forcing set needs at most
    /// n - |B| rounds.
    #[test]
    fn rounds_bounded_by_white_count((g, b) in arb_graph_and_set()) {
        if let Propagation::Rounds(r) = pt_set(&g, b) {
            prop_assert!(r <= g.order() - b.len());
        }
    }

    /// Every recorded force is legal at the moment it fires: the forcer is
    /// blue, the target is its only white neighbor, and the layers partition
    /// the newly blue vertices.
    #[test]
    fn trace_replays_step_by_step((g, b) in arb_graph_and_set()) {
        let trace = closure(&g, b);
        prop_assert_eq!(trace.initial, b);
        let mut blue = b;
        let mut seen = 0usize;
        for (round, layer) in trace.layers.iter().enumerate() {
            prop_assert!(!layer.is_empty());
            let mut next = blue;
            for &(forcer, target) in trace.forces.iter().filter(|f| {
                layer.contains(f.1)
            }) {
                prop_assert!(blue.contains(forcer), "round {}: forcer {} not blue", round, forcer);
                prop_assert!(!blue.contains(target));
                let white = g.neighbors(forcer).unwrap().difference(blue);
                prop_assert_eq!(white, VertexSet::singleton(target));
                next = next.with(target);
                seen += 1;
            }
            prop_assert_eq!(next, blue.union(*layer));
            blue = next;
        }
        prop_assert_eq!(seen, trace.forces.len());
        prop_assert_eq!(blue, trace.final_set);
        prop_assert_eq!(is_zfs(&g, b), blue == g.vertex_set());
        prop_assert_eq!(trace.is_forcing(&g), blue == g.vertex_set());
    }

    /// Deleting an edge and adding it back restores the original graph.
    #[test]
    fn delete_then_add_edge_roundtrips(g in arb_graph(), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let back = g.delete_edge(u, v).unwrap().add_edge(u, v).unwrap();
        prop_assert_eq!(g.edges(), back.edges());
        prop_assert_eq!(g.order(), back.order());
    }

    /// Swapping two twins maps the graph to itself.
    #[test]
    fn twin_swap_is_an_automorphism(g in arb_graph()) {
        for (u, v, _) in g.twins() {
            prop_assert!(g.swap_is_automorphism(u, v), "swapping twins {} and {} broke adjacency", u, v);
        }
    }

    /// Components partition the vertex set and preserve all edges.
    #[test]
    fn components_partition_the_graph(g in arb_graph()) {
        let comps = g.components();
        let mut seen = VertexSet::from_mask(0);
        let mut edge_total = 0;
        for (sub, labels) in &comps {
            prop_assert!(sub.is_connected());
            prop_assert_eq!(sub.order(), labels.len());
            for &orig in labels {
                prop_assert!(!seen.contains(orig));
                seen = seen.with(orig);
            }
            for (a, b) in sub.edges() {
                prop_assert!(g.has_edge(labels[a], labels[b]));
                edge_total += 1;
            }
        }
        prop_assert_eq!(seen, g.vertex_set());
        prop_assert_eq!(edge_total, g.edge_count());
    }

    /// Set algebra sanity: union/intersection/difference agree with the
    /// underlying masks and the subset iterator yields sorted members.
    #[test]
    fn vertex_set_algebra(a in any::<u64>(), b in any::<u64>()) {
        let x = VertexSet::from_mask(a);
        let y = VertexSet::from_mask(b);
        prop_assert_eq!(x.union(y).mask(), a | b);
        prop_assert_eq!(x.intersection(y).mask(), a & b);
        prop_assert_eq!(x.difference(y).mask(), a & !b);
        prop_assert_eq!(x.len(), a.count_ones() as usize);
        let members = x.to_vec();
        prop_assert!(members.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(x.intersection(y).is_subset(x));
    }
}

/// Contracting one rim edge of C_n yields a graph isomorphic to C_{n-1};
/// the relabeled result must still be a single cycle.
#[test]
fn contracting_a_cycle_edge_shrinks_the_cycle() {
    for n in 4..=9 {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::build(n, &edges).unwrap();
        let (h, _) = g.contract_edge(0, 1).unwrap();
        assert_eq!(h.order(), n - 1);
        assert_eq!(h.edge_count(), n - 1);
        assert!(h.is_connected());
        assert!(h.vertices().all(|v| h.degree(v).unwrap() == 2));
    }
}

/// Closure memoization inside the searcher must not leak between graphs:
/// fresh searchers on equal graphs give equal answers to the seeded pool.
#[test]
fn repeated_runs_are_deterministic() {
    let pool = random_connected_graphs(40, 7, 99);
    let again = random_connected_graphs(40, 7, 99);
    assert_eq!(pool.len(), again.len());
    for (a, b) in pool.iter().zip(again.iter()) {
        assert_eq!(a.order(), b.order());
        assert_eq!(a.edges(), b.edges());
    }
}
