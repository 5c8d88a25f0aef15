//! Text formats: the edge-list file format, DOT export, and the
//! machine-readable JSON records emitted by the CLI.
//!
//! Edge-list format: the first significant line is the vertex count n; every
//! following significant line is one edge `u v` with 0-based ids. Lines that
//! are blank or start with `#` are skipped. Loops are rejected, duplicate
//! edges collapse.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::ForcingTrace;
use crate::graph::Graph;
use crate::search::{DeltaReport, Operand, ParamResult, ParamValue};
use crate::set::VertexSet;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("expected a nonnegative integer, got `{tok}`"),
            })
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match order {
            None => {
                if tokens.len() != 1 {
                    return Err(Error::Parse {
                        line,
                        msg: "first line must be the vertex count".to_string(),
                    });
                }
                order = Some(parse(tokens[0])?);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected `u v`, got {} token(s)", tokens.len()),
                    });
                }
                let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
                if u >= n || v >= n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex {} out of range (n = {n})", u.max(v)),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line,
                        msg: format!("loop edge ({u}, {v}) rejected"),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    let Some(n) = order else {
        return Err(Error::Parse {
            line: 0,
            msg: "empty input: expected a vertex count line".to_string(),
        });
    };
    Graph::build(n, &edges)
}

/// Inverse of [`parse_edge_list`]; output round-trips exactly.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Undirected DOT export; vertices in `filled` get a fill color.
pub fn to_dot(g: &Graph, filled: VertexSet) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        if filled.contains(v) {
            out.push_str(&format!("  {v} [style=filled, fillcolor=lightblue];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// One DOT frame per propagation stage: frame 0 is the initial set, frame i
/// the cumulative blue set after i rounds.
pub fn trace_dot_frames(g: &Graph, trace: &ForcingTrace) -> Vec<String> {
    let mut frames = Vec::with_capacity(trace.layers.len() + 1);
    let mut colored = trace.initial;
    frames.push(to_dot(g, colored));
    for &layer in &trace.layers {
        colored = colored.union(layer);
        frames.push(to_dot(g, colored));
    }
    frames
}

fn ids(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

/// Machine record for a parameter computation. Field order is fixed;
/// `elapsed_ms` appears only when explicitly supplied so that default output
/// is byte-stable across runs.
#[derive(Debug, Serialize)]
pub struct ParamRecord {
    pub parameter: &'static str,
    pub k: Option<usize>,
    pub value: ParamValue,
    pub witnesses: Vec<Vec<usize>>,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ParamRecord {
    pub fn new(r: &ParamResult, elapsed_ms: Option<u64>) -> Self {
        ParamRecord {
            parameter: r.parameter.as_str(),
            k: r.k,
            value: r.value,
            witnesses: r.witnesses.iter().map(|&w| ids(w)).collect(),
            truncated: r.truncated,
            elapsed_ms,
        }
    }
}

/// Machine record for a forcing trace.
#[derive(Debug, Serialize)]
pub struct TraceRecord {
    pub initial: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
    pub forces: Vec<[usize; 2]>,
    #[serde(rename = "final")]
    pub final_set: Vec<usize>,
    pub forcing: bool,
}

impl TraceRecord {
    pub fn new(g: &Graph, trace: &ForcingTrace) -> Self {
        TraceRecord {
            initial: ids(trace.initial),
            layers: trace.layers.iter().map(|&l| ids(l)).collect(),
            forces: trace.forces.iter().map(|&(s, t)| [s, t]).collect(),
            final_set: ids(trace.final_set),
            forcing: trace.is_forcing(g),
        }
    }
}

/// Machine record for a delta table.
#[derive(Debug, Serialize)]
pub struct DeltaRecord {
    pub parameter: &'static str,
    pub base: ParamValue,
    pub rows: Vec<DeltaRowRecord>,
}

#[derive(Debug, Serialize)]
pub struct DeltaRowRecord {
    pub op: &'static str,
    pub operand: serde_json::Value,
    pub value: ParamValue,
    pub delta: Option<i64>,
}

impl DeltaRecord {
    pub fn new(report: &DeltaReport) -> Self {
        DeltaRecord {
            parameter: "zt",
            base: report.base,
            rows: report
                .rows
                .iter()
                .map(|row| DeltaRowRecord {
                    op: row.op.as_str(),
                    operand: match row.operand {
                        Operand::Edge(u, v) => serde_json::json!([u, v]),
                        Operand::Vertex(v) => serde_json::json!(v),
                    },
                    value: row.value,
                    delta: row.delta,
                })
                .collect(),
        }
    }
}
