//! Naive reference implementations used to cross-validate the searcher.
//!
//! Everything here is deliberately written from scratch against the
//! definitions: a sequential one-force-at-a-time closure instead of the
//! layered engine, raw mask scans instead of pruned cardinality stages, and
//! no memoization. Keep this module free of `forcing` and `search` imports
//! so a bug cannot hide in shared code.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::ParamValue;
use crate::set::VertexSet;

/// Hard ceiling for the oracle's 2^n scans.
pub const ORACLE_MAX_ORDER: usize = 12;

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > ORACLE_MAX_ORDER {
        Err(Error::SizeLimit {
            order: g.order(),
            limit: ORACLE_MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Sequential greedy closure: scan vertices in `order`, apply the first
/// valid force, restart. Returns the final colored set.
pub fn closure_in_order(g: &Graph, b: VertexSet, order: &[usize]) -> VertexSet {
    let mut colored = b.intersection(g.vertex_set());
    'scan: loop {
        for &src in order {
            if !colored.contains(src) {
                continue;
            }
            let white = g.adj(src).difference(colored);
            if white.len() == 1 {
                colored = colored.union(white);
                continue 'scan;
            }
        }
        return colored;
    }
}

/// Sequential closure with the default ascending scan order.
pub fn sequential_closure(g: &Graph, b: VertexSet) -> VertexSet {
    let order: Vec<usize> = g.vertices().collect();
    closure_in_order(g, b, &order)
}

fn oracle_is_zfs(g: &Graph, b: VertexSet) -> bool {
    sequential_closure(g, b) == g.vertex_set()
}

/// Round count under simultaneous propagation, recomputed from scratch each
/// round; None when b does not force.
fn oracle_rounds(g: &Graph, b: VertexSet) -> Option<usize> {
    let mut colored = b.intersection(g.vertex_set());
    let mut rounds = 0;
    loop {
        let mut layer = VertexSet::EMPTY;
        for src in g.vertices() {
            if !colored.contains(src) {
                continue;
            }
            let white = g.adj(src).difference(colored);
            if white.len() == 1 {
                layer = layer.union(white);
            }
        }
        if layer.is_empty() {
            break;
        }
        colored = colored.union(layer);
        rounds += 1;
    }
    (colored == g.vertex_set()).then_some(rounds)
}

fn masks_of_size(n: usize, size: usize) -> impl Iterator<Item = VertexSet> {
    let top: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    (0..=top)
        .filter(move |m| m.count_ones() as usize == size)
        .map(VertexSet::from_mask)
}

fn oracle_is_ft(g: &Graph, b: VertexSet, k: usize) -> bool {
    if b.len() < k {
        return false;
    }
    let n = g.order();
    let keep = b.len() - k;
    masks_of_size(n, keep)
        .filter(|s| s.is_subset(b))
        .all(|s| oracle_is_zfs(g, s))
}

/// Minimum zero forcing set size by raw scan.
pub fn oracle_zf(g: &Graph) -> Result<usize> {
    check_order(g)?;
    for size in 0..=g.order() {
        if masks_of_size(g.order(), size).any(|b| oracle_is_zfs(g, b)) {
            return Ok(size);
        }
    }
    unreachable!("the full vertex set forces");
}

/// Minimum k-fault-tolerant set size by raw scan, or NotExists.
pub fn oracle_zt(g: &Graph, k: usize) -> Result<ParamValue> {
    check_order(g)?;
    if k < 1 {
        return Err(Error::InvalidFaultBudget {
            k,
            detail: "fault budget must be at least 1".to_string(),
        });
    }
    for size in k..=g.order() {
        if masks_of_size(g.order(), size).any(|b| oracle_is_ft(g, b, k)) {
            return Ok(ParamValue::Count(size));
        }
    }
    Ok(ParamValue::NotExists)
}

/// Minimum round count over all minimum zero forcing sets.
pub fn oracle_pt(g: &Graph) -> Result<usize> {
    let z = oracle_zf(g)?;
    Ok(masks_of_size(g.order(), z)
        .filter_map(|b| oracle_rounds(g, b))
        .min()
        .expect("some minimum set forces"))
}

/// Minimum worst-fault propagation time over all minimum 1-fault-tolerant
/// sets, or NotExists.
pub fn oracle_fpt(g: &Graph) -> Result<ParamValue> {
    let ParamValue::Count(size) = oracle_zt(g, 1)? else {
        return Ok(ParamValue::NotExists);
    };
    let best = masks_of_size(g.order(), size)
        .filter(|&b| oracle_is_ft(g, b, 1))
        .map(|b| {
            b.iter()
                .map(|v| oracle_rounds(g, b.without(v)).expect("fault tolerant"))
                .max()
                .expect("nonempty")
        })
        .min()
        .expect("a minimum fault tolerant set exists");
    Ok(ParamValue::Count(best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{fixture, generate, FamilySpec};

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn sequential_closure_applies_one_force_at_a_time() {
        let g = fixture("fig1_house").unwrap();
        assert_eq!(sequential_closure(&g, set(&[0, 1])), g.vertex_set());
        assert_eq!(sequential_closure(&g, set(&[1, 2])), set(&[1, 2]));
    }

    #[test]
    fn scan_order_does_not_change_the_closure() {
        let g = fixture("fig2_mummal").unwrap();
        let forward: Vec<usize> = g.vertices().collect();
        let backward: Vec<usize> = g.vertices().rev().collect();
        for mask in 0..1u64 << 6 {
            let b = VertexSet::from_mask(mask);
            assert_eq!(
                closure_in_order(&g, b, &forward),
                closure_in_order(&g, b, &backward),
                "b = {b}"
            );
        }
    }

    #[test]
    fn known_small_values() {
        let k4 = generate(FamilySpec::Complete(4)).unwrap();
        assert_eq!(oracle_zf(&k4).unwrap(), 3);
        assert_eq!(oracle_zt(&k4, 1).unwrap(), ParamValue::Count(4));
        assert_eq!(oracle_zt(&k4, 2).unwrap(), ParamValue::NotExists);

        let c6 = generate(FamilySpec::Cycle(6)).unwrap();
        assert_eq!(oracle_zt(&c6, 1).unwrap(), ParamValue::Count(4));

        let p5 = generate(FamilySpec::Path(5)).unwrap();
        assert_eq!(oracle_zf(&p5).unwrap(), 1);
        assert_eq!(oracle_pt(&p5).unwrap(), 4);
        assert_eq!(oracle_fpt(&p5).unwrap(), ParamValue::Count(4));

        let k1 = generate(FamilySpec::Path(1)).unwrap();
        assert_eq!(oracle_zf(&k1).unwrap(), 1);
        assert_eq!(oracle_pt(&k1).unwrap(), 0);
        assert_eq!(oracle_zt(&k1, 1).unwrap(), ParamValue::NotExists);
        assert_eq!(oracle_fpt(&k1).unwrap(), ParamValue::NotExists);
    }

    #[test]
    fn oracle_rejects_large_graphs() {
        let big = generate(FamilySpec::Path(13)).unwrap();
        assert!(matches!(
            oracle_zf(&big),
            Err(Error::SizeLimit {
                order: 13,
                limit: 12
            })
        ));
    }
}
