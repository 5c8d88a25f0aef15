use serde::Serialize;

use crate::graph::Graph;
use crate::set::VertexSet;

/// Full record of one closure computation.
///
/// Propagation is simultaneous: layer i is every vertex that can be forced
/// from the cumulative blue set after i-1 rounds. Within a layer, forces are
/// listed in ascending target order and each target is credited to its
/// smallest-id valid forcer, so traces are deterministic and diffable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    pub layers: Vec<VertexSet>,
    pub forces: Vec<(usize, usize)>,
    pub final_set: VertexSet,
}

impl ForcingTrace {
    /// Rounds taken; equals `layers.len()`.
    pub fn rounds(&self) -> usize {
        self.layers.len()
    }

    pub fn is_forcing(&self, g: &Graph) -> bool {
        self.final_set == g.vertex_set()
    }
}

/// Outcome of propagation-time queries on a fixed initial set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Propagation {
    Rounds(usize),
    NotForcing,
}

impl Serialize for Propagation {
    /// Rounds serialize as a bare count, the stall marker as "not_forcing".
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Propagation::Rounds(n) => s.serialize_u64(*n as u64),
            Propagation::NotForcing => s.serialize_str("not_forcing"),
        }
    }
}

impl Propagation {
    pub fn rounds(self) -> Option<usize> {
        match self {
            Propagation::Rounds(n) => Some(n),
            Propagation::NotForcing => None,
        }
    }
}

/// One simultaneous round: all vertices forceable from `colored`, plus the
/// smallest-id forcer per target. Targets come out in ascending order.
fn next_layer(g: &Graph, colored: VertexSet) -> Vec<(usize, usize)> {
    let mut forces = Vec::new();
    let mut claimed = VertexSet::EMPTY;
    for src in colored.iter() {
        let white = g.adj(src).difference(colored);
        if white.len() == 1 {
            let target = white.min().unwrap();
            if !claimed.contains(target) {
                claimed = claimed.with(target);
                forces.push((src, target));
            }
        }
    }
    forces.sort_by_key(|&(_, target)| target);
    forces
}

/// Applies the color change rule until it stalls and returns the full trace.
///
/// The uncolored part of `b` outside the graph is ignored. An empty initial
/// set on a nonempty graph simply stalls immediately.
pub fn closure(g: &Graph, b: VertexSet) -> ForcingTrace {
    let initial = b.intersection(g.vertex_set());
    let mut colored = initial;
    let mut layers = Vec::new();
    let mut forces = Vec::new();
    loop {
        let layer_forces = next_layer(g, colored);
        if layer_forces.is_empty() {
            break;
        }
        let layer: VertexSet = layer_forces.iter().map(|&(_, t)| t).collect();
        forces.extend_from_slice(&layer_forces);
        layers.push(layer);
        colored = colored.union(layer);
    }
    ForcingTrace {
        initial,
        layers,
        forces,
        final_set: colored,
    }
}

/// Closure without trace bookkeeping: returns (final set, round count).
/// This is the hot path for subset searches, memoized by the caller.
pub fn closure_set(g: &Graph, b: VertexSet) -> (VertexSet, usize) {
    let mut colored = b.intersection(g.vertex_set());
    let mut rounds = 0;
    loop {
        let mut layer = VertexSet::EMPTY;
        for src in colored.iter() {
            let white = g.adj(src).difference(colored);
            if white.len() == 1 {
                layer = layer.union(white);
            }
        }
        if layer.is_empty() {
            return (colored, rounds);
        }
        colored = colored.union(layer);
        rounds += 1;
    }
}

/// True iff `b` is a zero forcing set of `g`.
pub fn is_zfs(g: &Graph, b: VertexSet) -> bool {
    closure_set(g, b).0 == g.vertex_set()
}

/// Rounds needed for `b` to color all of `g`, or `NotForcing`.
pub fn pt_set(g: &Graph, b: VertexSet) -> Propagation {
    let (final_set, rounds) = closure_set(g, b);
    if final_set == g.vertex_set() {
        Propagation::Rounds(rounds)
    } else {
        Propagation::NotForcing
    }
}
