use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parametrized graph family.
///
/// `Star(n)` is K_{1,n} (center plus n leaves, order n+1). `Wheel(n)` has n
/// vertices total: a hub joined to every vertex of an (n-1)-cycle. `Spider`
/// is a center with `legs` disjoint induced paths of `length` vertices each
/// attached to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Wheel(usize),
    Spider { legs: usize, length: usize },
}

impl FamilySpec {
    fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Star(_) => "star",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Spider { .. } => "spider",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Spider { legs, length } => write!(f, "spider:{legs}x{length}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `kind:n`, or `spider:LEGSxLENGTH` (e.g. `spider:3x2`).
    fn from_str(s: &str) -> Result<FamilySpec> {
        let bad = |detail: &str| Error::InvalidFamilyParameter {
            family: s.to_string(),
            detail: detail.to_string(),
        };
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| bad("expected kind:parameter, e.g. cycle:6"))?;
        let parse_n = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| bad("parameter must be a nonnegative integer"))
        };
        match kind {
            "path" => Ok(FamilySpec::Path(parse_n(arg)?)),
            "cycle" => Ok(FamilySpec::Cycle(parse_n(arg)?)),
            "complete" => Ok(FamilySpec::Complete(parse_n(arg)?)),
            "star" => Ok(FamilySpec::Star(parse_n(arg)?)),
            "wheel" => Ok(FamilySpec::Wheel(parse_n(arg)?)),
            "spider" => {
                let (legs, length) = arg
                    .split_once('x')
                    .ok_or_else(|| bad("spider takes legs x length, e.g. spider:3x2"))?;
                Ok(FamilySpec::Spider {
                    legs: parse_n(legs)?,
                    length: parse_n(length)?,
                })
            }
            _ => Err(bad(
                "unknown family (expected path, cycle, complete, star, wheel, or spider)",
            )),
        }
    }
}

/// Builds the graph described by `spec`.
pub fn generate(spec: FamilySpec) -> Result<Graph> {
    let reject = |detail: &str| Error::InvalidFamilyParameter {
        family: spec.family_name().to_string(),
        detail: format!("{spec}: {detail}"),
    };
    match spec {
        FamilySpec::Path(n) => {
            if n < 1 {
                return Err(reject("path needs n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::build(n, &edges)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(reject("cycle needs n >= 3"));
            }
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((n - 1, 0));
            Graph::build(n, &edges)
        }
        FamilySpec::Complete(n) => {
            if n < 1 {
                return Err(reject("complete graph needs n >= 1"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::build(n, &edges)
        }
        FamilySpec::Star(n) => {
            if n < 1 {
                return Err(reject("star needs at least 1 leaf"));
            }
            let edges: Vec<_> = (1..=n).map(|leaf| (0, leaf)).collect();
            Graph::build(n + 1, &edges)
        }
        FamilySpec::Wheel(n) => {
            if n < 4 {
                return Err(reject("wheel needs n >= 4"));
            }
            let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
            for v in 1..n - 1 {
                edges.push((v, v + 1));
            }
            edges.push((n - 1, 1));
            Graph::build(n, &edges)
        }
        FamilySpec::Spider { legs, length } => {
            if legs < 1 || length < 1 {
                return Err(reject("spider needs legs >= 1 and length >= 1"));
            }
            let mut edges = Vec::new();
            for j in 0..legs {
                let first = 1 + j * length;
                edges.push((0, first));
                for i in 1..length {
                    edges.push((first + i - 1, first + i));
                }
            }
            Graph::build(1 + legs * length, &edges)
        }
    }
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] = &[
    "fig1_house",
    "fig2_mummal",
    "fig3_caterpillar",
    "fig4_ftcover_tree",
    "fig5_gme",
    "fig6a_contract",
    "fig6b_diamond",
    "fig7",
];

/// Returns a bundled example graph by name.
///
/// These small graphs anchor the example checks in the verification suite;
/// each edge list is frozen here and nowhere else. Ids are 0-based; diagrams
/// that label the same graphs 1..n correspond via id = label - 1. `fig7` is
/// an alias for `fig1_house` (the same 5-vertex house graph is used both for
/// the intro example and the vertex-deletion table).
pub fn fixture(name: &str) -> Result<Graph> {
    let (order, edges): (usize, &[(usize, usize)]) = match name {
        // 4-cycle 1,2,4,3 with a pendant roof vertex 5 on 4 (1-based labels).
        "fig1_house" | "fig7" => (5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]),
        // 6 vertices, 8 edges; its four minimum zero forcing sets all avoid
        // the fault tolerant optimum {0,1,4,5}.
        "fig2_mummal" => (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (1, 3),
                (1, 5),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
        ),
        // Caterpillar tree with 5 leaves; leaf bound is strict here.
        "fig3_caterpillar" => (8, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 7), (4, 5), (4, 6)]),
        // 7-vertex tree whose best fault tolerant path cover uses one long
        // path plus two singletons.
        "fig4_ftcover_tree" => (7, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6)]),
        // Triangle with a tail and a fork; edge-deletion delta table subject.
        "fig5_gme" => (7, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)]),
        // 8-vertex graph for the contraction delta table. Vertex 4 is the
        // central hub (degree 6); contracting its edges moves the value in
        // both directions.
        "fig6a_contract" => (
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 6),
                (3, 7),
                (4, 5),
                (4, 6),
                (4, 7),
            ],
        ),
        // K_4 minus one diagonal.
        "fig6b_diamond" => (4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Graph::build(order, edges)
}
