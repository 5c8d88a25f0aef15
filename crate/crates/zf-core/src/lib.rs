//! Exact computation of zero forcing parameters on small graphs.
//!
//! Zero forcing is an iterative coloring game: a blue vertex with exactly
//! one white neighbor forces that neighbor blue. A zero forcing set colors
//! the whole graph; Z(G) is the smallest size of one. A set is k-fault
//! tolerant when it keeps forcing after any k of its vertices are removed,
//! and Z_t^k(G) is the smallest size of such a set (it may not exist, which
//! is a value here, not an error). Propagation time counts simultaneous
//! forcing rounds; the fault tolerant variant takes the worst single fault.
//!
//! The crate computes all of these exactly by pruned subset search with
//! memoized closures ([`search`]), cross-checked by a deliberately naive
//! oracle ([`oracle`]), and ships a claim-by-claim verification suite
//! ([`verify`]) covering family formulas, operation bounds, tree path-cover
//! identities, and a catalog of worked examples ([`family::fixture`]).
//!
//! Everything is exponential by nature; the intended scale is n <= 16 for
//! the main search and n <= 12 for the oracle.

pub mod enumerate;
pub mod error;
pub mod family;
pub mod forcing;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod search;
pub mod set;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use family::{fixture, generate, FamilySpec, FIXTURE_NAMES};
pub use forcing::{closure, is_zfs, pt_set, ForcingTrace, Propagation};
pub use graph::{Graph, TwinKind};
pub use search::{
    delta_table, enumerate_minimal_zfs, fpt_number, fpt_set, is_k_fault_tolerant, pt_number,
    zf_number, zt_number, DeltaOp, DeltaReport, DeltaRow, Operand, ParamKind, ParamResult,
    ParamValue, SearchConfig, Searcher,
};
pub use set::VertexSet;
pub use verify::{claim_ids, run_suite, ClaimReport, ClaimStatus, SuiteConfig};
