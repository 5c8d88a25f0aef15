use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::{closure_set, Propagation};
use crate::graph::Graph;
use crate::set::{subsets_of_range, subsets_of_set, VertexSet};

/// Knobs for the exact subset searches.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Largest graph order the exponential searches will accept.
    pub size_limit: usize,
    /// Witness lists are truncated to this many sets.
    pub witness_cap: usize,
    /// Evaluate candidate stages in parallel when true. Results are
    /// identical either way; stages are collected and ranked afterwards.
    pub parallel: bool,
}

pub const DEFAULT_SIZE_LIMIT: usize = 16;
pub const DEFAULT_WITNESS_CAP: usize = 64;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            size_limit: DEFAULT_SIZE_LIMIT,
            witness_cap: DEFAULT_WITNESS_CAP,
            parallel: false,
        }
    }
}

/// A computed parameter value; non-existence is a value, not an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamValue {
    Count(usize),
    NotExists,
}

impl ParamValue {
    pub fn count(self) -> Option<usize> {
        match self {
            ParamValue::Count(n) => Some(n),
            ParamValue::NotExists => None,
        }
    }

    pub fn exists(self) -> bool {
        matches!(self, ParamValue::Count(_))
    }
}

impl Serialize for ParamValue {
    /// Counts serialize as bare integers, non-existence as "not_exists".
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Count(n) => s.serialize_u64(*n as u64),
            ParamValue::NotExists => s.serialize_str("not_exists"),
        }
    }
}

impl std::fmt::Display for ParamValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamValue::Count(n) => write!(f, "{n}"),
            ParamValue::NotExists => write!(f, "not_exists"),
        }
    }
}

/// Which parameter a result reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Zf,
    Zt,
    Pt,
    Fpt,
}

impl ParamKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamKind::Zf => "zf",
            ParamKind::Zt => "zt",
            ParamKind::Pt => "pt",
            ParamKind::Fpt => "fpt",
        }
    }
}

/// Result of one parameter computation, with witness sets.
///
/// Witnesses are the optimal sets themselves: minimum zero forcing sets for
/// `Zf`, minimum fault tolerant sets for `Zt`, and the optimal sets attaining
/// the round count for `Pt`/`Fpt`. The list is sorted lexicographically and
/// truncated at the configured cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamResult {
    pub parameter: ParamKind,
    pub k: Option<usize>,
    pub value: ParamValue,
    pub witnesses: Vec<VertexSet>,
    pub truncated: bool,
}

impl ParamResult {
    fn not_exists(parameter: ParamKind, k: Option<usize>) -> Self {
        ParamResult {
            parameter,
            k,
            value: ParamValue::NotExists,
            witnesses: Vec::new(),
            truncated: false,
        }
    }
}

/// Per-graph search context: a concurrent memo of closures keyed on the
/// initial-set mask. Shared by every stage of one parameter computation.
pub struct Searcher<'g> {
    g: &'g Graph,
    cfg: SearchConfig,
    memo: DashMap<u64, (VertexSet, usize)>,
}

impl<'g> Searcher<'g> {
    pub fn new(g: &'g Graph, cfg: &SearchConfig) -> Searcher<'g> {
        Searcher {
            g,
            cfg: cfg.clone(),
            memo: DashMap::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    fn check_size(&self) -> Result<()> {
        if self.g.order() > self.cfg.size_limit {
            Err(Error::SizeLimit {
                order: self.g.order(),
                limit: self.cfg.size_limit,
            })
        } else {
            Ok(())
        }
    }

    fn closure(&self, b: VertexSet) -> (VertexSet, usize) {
        if let Some(hit) = self.memo.get(&b.mask()) {
            return *hit;
        }
        let out = closure_set(self.g, b);
        self.memo.insert(b.mask(), out);
        out
    }

    pub fn is_zfs(&self, b: VertexSet) -> bool {
        self.closure(b).0 == self.g.vertex_set()
    }

    pub fn pt_set(&self, b: VertexSet) -> Propagation {
        let (final_set, rounds) = self.closure(b);
        if final_set == self.g.vertex_set() {
            Propagation::Rounds(rounds)
        } else {
            Propagation::NotForcing
        }
    }

    /// True iff every (|b|-k)-subset of b forces; rejects on the first
    /// failing fault pattern. Requires k <= |b|.
    pub fn is_k_fault_tolerant(&self, b: VertexSet, k: usize) -> Result<bool> {
        if k > b.len() {
            return Err(Error::InvalidFaultBudget {
                k,
                detail: format!("set has only {} vertices", b.len()),
            });
        }
        // Removing each k-subset of faults is the same as keeping each
        // (|b|-k)-subset; enumerating fault patterns keeps the inner loop
        // small for small k.
        Ok(subsets_of_set(b, k).all(|faults| self.is_zfs(b.difference(faults))))
    }

    /// Runs `test` over all size-`size` subsets of 0..n in lexicographic
    /// order and returns the passing ones (capped, with truncation flag).
    fn stage(
        &self,
        size: usize,
        test: impl Fn(VertexSet) -> bool + Sync,
    ) -> (Vec<VertexSet>, bool) {
        let n = self.g.order();
        let hits: Vec<VertexSet> = if self.cfg.parallel {
            let candidates: Vec<VertexSet> = subsets_of_range(n, size).collect();
            candidates
                .par_iter()
                .map(|&b| if test(b) { Some(b) } else { None })
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        } else {
            // Sequential scan can stop once the cap is exceeded by one:
            // the extra hit only proves truncation.
            let mut hits = Vec::new();
            for b in subsets_of_range(n, size) {
                if test(b) {
                    hits.push(b);
                    if hits.len() > self.cfg.witness_cap {
                        break;
                    }
                }
            }
            hits
        };
        let truncated = hits.len() > self.cfg.witness_cap;
        let mut capped = hits;
        capped.truncate(self.cfg.witness_cap);
        (capped, truncated)
    }

    /// Smallest size in `from..=n` with a passing subset, plus witnesses.
    fn ascend(
        &self,
        from: usize,
        test: impl Fn(VertexSet) -> bool + Sync,
    ) -> Option<(usize, Vec<VertexSet>, bool)> {
        let n = self.g.order();
        for size in from..=n {
            let (hits, truncated) = self.stage(size, &test);
            if !hits.is_empty() {
                return Some((size, hits, truncated));
            }
        }
        None
    }

    /// Minimum size of a zero forcing set, with all minimum witnesses.
    pub fn zf_number(&self) -> Result<ParamResult> {
        self.check_size()?;
        // The empty set forces only the empty graph, so start at 0 there.
        let from = usize::from(self.g.order() > 0);
        let (value, witnesses, truncated) = self
            .ascend(from, |b| self.is_zfs(b))
            .expect("the full vertex set always forces");
        Ok(ParamResult {
            parameter: ParamKind::Zf,
            k: None,
            value: ParamValue::Count(value),
            witnesses,
            truncated,
        })
    }

    /// All minimal zero forcing sets: forcing, but no single-vertex removal
    /// stays forcing. Ordered by cardinality, then lexicographically.
    pub fn enumerate_minimal_zfs(&self) -> Result<Vec<VertexSet>> {
        self.check_size()?;
        let n = self.g.order();
        let mut out = Vec::new();
        for size in usize::from(n > 0)..=n {
            for b in subsets_of_range(n, size) {
                if self.is_zfs(b) && b.iter().all(|v| !self.is_zfs(b.without(v))) {
                    out.push(b);
                }
            }
        }
        Ok(out)
    }

    /// Minimum size of a k-fault-tolerant set, or NotExists.
    ///
    /// Existence is decided first on the full vertex set: fault tolerance is
    /// preserved by adding vertices, so some k-fault-tolerant set exists iff
    /// V is one. The search then ascends from the lower bound
    /// max(Z(G)+k, k+1).
    pub fn zt_number(&self, k: usize) -> Result<ParamResult> {
        self.check_size()?;
        if k < 1 {
            return Err(Error::InvalidFaultBudget {
                k,
                detail: "fault budget must be at least 1".to_string(),
            });
        }
        let n = self.g.order();
        if k > n || !self.is_k_fault_tolerant(self.g.vertex_set(), k)? {
            return Ok(ParamResult::not_exists(ParamKind::Zt, Some(k)));
        }
        let z = self
            .zf_number()?
            .value
            .count()
            .expect("zero forcing number always exists");
        let from = (z + k).max(k + 1).min(n);
        let (value, witnesses, truncated) = self
            .ascend(from, |b| self.is_k_fault_tolerant(b, k).unwrap_or(false))
            .expect("existence pre-check guarantees a hit");
        Ok(ParamResult {
            parameter: ParamKind::Zt,
            k: Some(k),
            value: ParamValue::Count(value),
            witnesses,
            truncated,
        })
    }

    /// Minimum round count over all minimum zero forcing sets. Witnesses are
    /// the minimum sets attaining it. Scans every minimum set regardless of
    /// the witness cap so the minimum is never missed.
    pub fn pt_number(&self) -> Result<ParamResult> {
        self.check_size()?;
        let z = self
            .zf_number()?
            .value
            .count()
            .expect("zero forcing number always exists");
        let n = self.g.order();
        let mut best: Option<usize> = None;
        let mut witnesses = Vec::new();
        let mut truncated = false;
        for b in subsets_of_range(n, z) {
            let Propagation::Rounds(rounds) = self.pt_set(b) else {
                continue;
            };
            if best.is_none_or(|m| rounds < m) {
                best = Some(rounds);
                witnesses.clear();
                truncated = false;
            }
            if best == Some(rounds) {
                if witnesses.len() < self.cfg.witness_cap {
                    witnesses.push(b);
                } else {
                    truncated = true;
                }
            }
        }
        Ok(ParamResult {
            parameter: ParamKind::Pt,
            k: None,
            value: ParamValue::Count(best.expect("a minimum zero forcing set exists")),
            witnesses,
            truncated,
        })
    }

    /// Worst single-fault propagation time of a 1-fault-tolerant set.
    pub fn fpt_set(&self, b: VertexSet) -> Result<usize> {
        if !self.is_k_fault_tolerant(b, 1)? {
            return Err(Error::NotFaultTolerant { set: b.to_string() });
        }
        Ok(b.iter()
            .map(|v| {
                self.pt_set(b.without(v))
                    .rounds()
                    .expect("every single-fault subset of a fault tolerant set forces")
            })
            .max()
            .expect("fault tolerant sets are nonempty"))
    }

    /// Minimum of `fpt_set` over all minimum 1-fault-tolerant sets, or
    /// NotExists when no fault tolerant set exists. Scans every minimum
    /// fault tolerant set regardless of the witness cap.
    pub fn fpt_number(&self) -> Result<ParamResult> {
        self.check_size()?;
        let zt = self.zt_number(1)?;
        let Some(size) = zt.value.count() else {
            return Ok(ParamResult::not_exists(ParamKind::Fpt, None));
        };
        let n = self.g.order();
        let mut best: Option<usize> = None;
        let mut witnesses = Vec::new();
        let mut truncated = false;
        for b in subsets_of_range(n, size) {
            if !self.is_k_fault_tolerant(b, 1)? {
                continue;
            }
            let worst = self.fpt_set(b)?;
            if best.is_none_or(|m| worst < m) {
                best = Some(worst);
                witnesses.clear();
                truncated = false;
            }
            if best == Some(worst) {
                if witnesses.len() < self.cfg.witness_cap {
                    witnesses.push(b);
                } else {
                    truncated = true;
                }
            }
        }
        Ok(ParamResult {
            parameter: ParamKind::Fpt,
            k: None,
            value: ParamValue::Count(best.expect("a minimum fault tolerant set exists")),
            witnesses,
            truncated,
        })
    }
}

/// Convenience wrappers building a fresh per-graph context.
pub fn zf_number(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult> {
    Searcher::new(g, cfg).zf_number()
}

pub fn enumerate_minimal_zfs(g: &Graph, cfg: &SearchConfig) -> Result<Vec<VertexSet>> {
    Searcher::new(g, cfg).enumerate_minimal_zfs()
}

pub fn is_k_fault_tolerant(g: &Graph, b: VertexSet, k: usize, cfg: &SearchConfig) -> Result<bool> {
    Searcher::new(g, cfg).is_k_fault_tolerant(b, k)
}

pub fn zt_number(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<ParamResult> {
    Searcher::new(g, cfg).zt_number(k)
}

pub fn pt_number(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult> {
    Searcher::new(g, cfg).pt_number()
}

pub fn fpt_set(g: &Graph, b: VertexSet, cfg: &SearchConfig) -> Result<usize> {
    Searcher::new(g, cfg).fpt_set(b)
}

pub fn fpt_number(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult> {
    Searcher::new(g, cfg).fpt_number()
}

/// One row of a delta report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaRow {
    pub op: DeltaOp,
    /// The deleted/contracted edge, or the deleted vertex.
    pub operand: Operand,
    pub value: ParamValue,
    /// base - value, when both exist.
    pub delta: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaOp {
    DeleteEdge,
    ContractEdge,
    DeleteVertex,
}

impl DeltaOp {
    pub fn as_str(self) -> &'static str {
        match self {
            DeltaOp::DeleteEdge => "delete_edge",
            DeltaOp::ContractEdge => "contract_edge",
            DeltaOp::DeleteVertex => "delete_vertex",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    Edge(usize, usize),
    Vertex(usize),
}

impl std::fmt::Display for Operand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Operand::Edge(u, v) => write!(f, "({u},{v})"),
            Operand::Vertex(v) => write!(f, "{v}"),
        }
    }
}

/// How the fault tolerant number moves under every single-edge or
/// single-vertex operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    pub base: ParamValue,
    pub rows: Vec<DeltaRow>,
}

/// Computes Z_t for each requested operation applied to every edge/vertex.
/// Rows where the operation kills existence report NotExists and no delta;
/// the bound checks downstream only apply when both sides exist.
pub fn delta_table(g: &Graph, ops: &[DeltaOp], cfg: &SearchConfig) -> Result<DeltaReport> {
    let base = zt_number(g, 1, cfg)?.value;
    let delta_of = |value: ParamValue| match (base, value) {
        (ParamValue::Count(b), ParamValue::Count(v)) => Some(b as i64 - v as i64),
        _ => None,
    };
    let mut rows = Vec::new();
    for &op in ops {
        match op {
            DeltaOp::DeleteEdge => {
                for (u, v) in g.edges() {
                    let value = zt_number(&g.delete_edge(u, v)?, 1, cfg)?.value;
                    rows.push(DeltaRow {
                        op,
                        operand: Operand::Edge(u, v),
                        value,
                        delta: delta_of(value),
                    });
                }
            }
            DeltaOp::ContractEdge => {
                for (u, v) in g.edges() {
                    let (h, _) = g.contract_edge(u, v)?;
                    let value = zt_number(&h, 1, cfg)?.value;
                    rows.push(DeltaRow {
                        op,
                        operand: Operand::Edge(u, v),
                        value,
                        delta: delta_of(value),
                    });
                }
            }
            DeltaOp::DeleteVertex => {
                for v in g.vertices() {
                    let (h, _) = g.delete_vertex(v)?;
                    let value = zt_number(&h, 1, cfg)?.value;
                    rows.push(DeltaRow {
                        op,
                        operand: Operand::Vertex(v),
                        value,
                        delta: delta_of(value),
                    });
                }
            }
        }
    }
    Ok(DeltaReport { base, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{fixture, generate, FamilySpec};

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn zf_of_paths_and_cliques() {
        let p7 = generate(FamilySpec::Path(7)).unwrap();
        let r = zf_number(&p7, &cfg()).unwrap();
        assert_eq!(r.value, ParamValue::Count(1));
        assert_eq!(r.witnesses, vec![set(&[0]), set(&[6])]);
        assert!(!r.truncated);

        let k4 = generate(FamilySpec::Complete(4)).unwrap();
        assert_eq!(zf_number(&k4, &cfg()).unwrap().value, ParamValue::Count(3));

        let k1 = generate(FamilySpec::Path(1)).unwrap();
        assert_eq!(zf_number(&k1, &cfg()).unwrap().value, ParamValue::Count(1));
    }

    #[test]
    fn wheel_zero_forcing_number_is_three() {
        for n in 5..=9 {
            let w = generate(FamilySpec::Wheel(n)).unwrap();
            assert_eq!(
                zf_number(&w, &cfg()).unwrap().value,
                ParamValue::Count(3),
                "W_{n}"
            );
        }
    }

    #[test]
    fn minimal_zfs_of_p7_matches_known_list() {
        let p7 = generate(FamilySpec::Path(7)).unwrap();
        let sets = enumerate_minimal_zfs(&p7, &cfg()).unwrap();
        let expect = [
            set(&[0]),
            set(&[6]),
            set(&[1, 2]),
            set(&[2, 3]),
            set(&[3, 4]),
            set(&[4, 5]),
        ];
        assert_eq!(sets, expect);
    }

    #[test]
    fn minimal_zfs_of_cycles_are_adjacent_pairs() {
        for n in 4..=8 {
            let c = generate(FamilySpec::Cycle(n)).unwrap();
            let sets = enumerate_minimal_zfs(&c, &cfg()).unwrap();
            assert_eq!(sets.len(), n, "C_{n}");
            for b in sets {
                let v: Vec<usize> = b.to_vec();
                assert_eq!(v.len(), 2);
                assert!(c.has_edge(v[0], v[1]), "C_{n}: {b} not an adjacent pair");
            }
        }
    }

    #[test]
    fn fault_tolerance_checks() {
        let mummal = fixture("fig2_mummal").unwrap();
        assert!(is_k_fault_tolerant(&mummal, set(&[0, 1, 4, 5]), 1, &cfg()).unwrap());
        // Dropping 0 from {0,1,2,5} leaves {1,2,5}, whose closure stalls with
        // every blue vertex seeing two white neighbors.
        assert!(!is_k_fault_tolerant(&mummal, set(&[0, 1, 2, 5]), 1, &cfg()).unwrap());

        let k5 = generate(FamilySpec::Complete(5)).unwrap();
        assert!(is_k_fault_tolerant(&k5, k5.vertex_set(), 1, &cfg()).unwrap());
        // k = 0 degenerates to plain forcing.
        assert!(is_k_fault_tolerant(&k5, set(&[0, 1, 2, 3]), 0, &cfg()).unwrap());
        assert!(!is_k_fault_tolerant(&k5, set(&[0, 1, 2]), 0, &cfg()).unwrap());
        assert!(is_k_fault_tolerant(&k5, set(&[0]), 2, &cfg()).is_err());
    }

    #[test]
    fn zt_families_spot_checks() {
        let c6 = generate(FamilySpec::Cycle(6)).unwrap();
        assert_eq!(
            zt_number(&c6, 1, &cfg()).unwrap().value,
            ParamValue::Count(4)
        );

        let p2 = generate(FamilySpec::Path(2)).unwrap();
        assert_eq!(
            zt_number(&p2, 2, &cfg()).unwrap().value,
            ParamValue::NotExists
        );

        let k1 = generate(FamilySpec::Path(1)).unwrap();
        assert_eq!(
            zt_number(&k1, 1, &cfg()).unwrap().value,
            ParamValue::NotExists
        );

        let k4 = generate(FamilySpec::Complete(4)).unwrap();
        assert_eq!(
            zt_number(&k4, 2, &cfg()).unwrap().value,
            ParamValue::NotExists
        );
        assert!(zt_number(&k4, 0, &cfg()).is_err());
    }

    #[test]
    fn caterpillar_fault_tolerant_number() {
        let cat = fixture("fig3_caterpillar").unwrap();
        let r = zt_number(&cat, 1, &cfg()).unwrap();
        assert_eq!(r.value, ParamValue::Count(4));
        assert!(is_k_fault_tolerant(&cat, set(&[0, 1, 5, 6]), 1, &cfg()).unwrap());
    }

    #[test]
    fn propagation_parameters() {
        let p5 = generate(FamilySpec::Path(5)).unwrap();
        assert_eq!(pt_number(&p5, &cfg()).unwrap().value, ParamValue::Count(4));

        let k1 = generate(FamilySpec::Path(1)).unwrap();
        assert_eq!(pt_number(&k1, &cfg()).unwrap().value, ParamValue::Count(0));

        let p4 = generate(FamilySpec::Path(4)).unwrap();
        assert_eq!(fpt_set(&p4, set(&[0, 3]), &cfg()).unwrap(), 3);
        assert!(fpt_set(&p4, set(&[0, 1]), &cfg()).is_err());

        let k5 = generate(FamilySpec::Complete(5)).unwrap();
        assert_eq!(fpt_set(&k5, k5.vertex_set(), &cfg()).unwrap(), 1);

        let c7 = generate(FamilySpec::Cycle(7)).unwrap();
        assert_eq!(fpt_number(&c7, &cfg()).unwrap().value, ParamValue::Count(2));

        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        assert_eq!(fpt_number(&c4, &cfg()).unwrap().value, ParamValue::Count(1));

        assert_eq!(
            fpt_number(&k1, &cfg()).unwrap().value,
            ParamValue::NotExists
        );
    }

    #[test]
    fn star_fpt_needs_two_rounds() {
        let star4 = generate(FamilySpec::Star(4)).unwrap();
        let r = fpt_number(&star4, &cfg()).unwrap();
        assert_eq!(r.value, ParamValue::Count(2));
        // Leaves only: faulting a leaf leaves the center to force first,
        // then the faulted leaf, so two rounds.
        assert_eq!(fpt_set(&star4, set(&[1, 2, 3, 4]), &cfg()).unwrap(), 2);
    }

    #[test]
    fn size_limit_and_overrides() {
        let big = generate(FamilySpec::Path(20)).unwrap();
        assert!(matches!(
            zf_number(&big, &cfg()),
            Err(Error::SizeLimit {
                order: 20,
                limit: 16
            })
        ));
        let loose = SearchConfig {
            size_limit: 20,
            ..SearchConfig::default()
        };
        assert_eq!(zf_number(&big, &loose).unwrap().value, ParamValue::Count(1));
    }

    #[test]
    fn witness_cap_truncates() {
        let k8 = generate(FamilySpec::Complete(8)).unwrap();
        let tight = SearchConfig {
            witness_cap: 3,
            ..SearchConfig::default()
        };
        let r = zf_number(&k8, &tight).unwrap();
        assert_eq!(r.value, ParamValue::Count(7));
        assert_eq!(r.witnesses.len(), 3);
        assert!(r.truncated);
        // C(8,7) = 8 witnesses fit under the default cap.
        let r = zf_number(&k8, &cfg()).unwrap();
        assert_eq!(r.witnesses.len(), 8);
        assert!(!r.truncated);
    }

    #[test]
    fn parallel_matches_sequential() {
        let par = SearchConfig {
            parallel: true,
            ..SearchConfig::default()
        };
        for name in ["fig2_mummal", "fig5_gme", "fig6b_diamond"] {
            let g = fixture(name).unwrap();
            assert_eq!(
                zt_number(&g, 1, &cfg()).unwrap(),
                zt_number(&g, 1, &par).unwrap(),
                "{name}"
            );
            assert_eq!(
                zf_number(&g, &cfg()).unwrap(),
                zf_number(&g, &par).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn delta_table_shapes() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        let report =
            delta_table(&c4, &[DeltaOp::DeleteEdge, DeltaOp::ContractEdge], &cfg()).unwrap();
        assert_eq!(report.base, ParamValue::Count(4));
        assert_eq!(report.rows.len(), 8);
        for row in &report.rows {
            match row.op {
                // C_4 - e = P_4 with Z_t = 2.
                DeltaOp::DeleteEdge => assert_eq!(row.delta, Some(2)),
                // C_4 / e = C_3 = K_3 with Z_t = 3.
                DeltaOp::ContractEdge => assert_eq!(row.delta, Some(1)),
                DeltaOp::DeleteVertex => unreachable!(),
            }
        }

        let k2 = generate(FamilySpec::Path(2)).unwrap();
        let report = delta_table(&k2, &[DeltaOp::DeleteVertex], &cfg()).unwrap();
        assert_eq!(report.base, ParamValue::Count(2));
        // K_2 - v = K_1: no fault tolerant set, so no delta.
        assert!(report
            .rows
            .iter()
            .all(|r| r.value == ParamValue::NotExists && r.delta.is_none()));
    }
}
