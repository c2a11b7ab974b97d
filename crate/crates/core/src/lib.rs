//! Exact computation of g-extra connectivity and mechanical verification of
//! its behavior under the Mycielskian transform.
//!
//! The crate provides:
//!
//! * a small immutable graph type with bitset adjacency ([`graph`]);
//! * named families, seeded random graphs and exhaustive enumeration of
//!   labeled connected graphs on up to six vertices ([`generate`]);
//! * graph6 and plain edge-list codecs ([`graph6`], [`edgelist`]);
//! * the Mycielskian transform with twin and root bookkeeping
//!   ([`mycielskian`]);
//! * exact classical and g-extra connectivity solvers with certificates
//!   ([`connectivity`]);
//! * law checkers, monotonicity audits and batch verification with
//!   deterministic JSON/CSV reports ([`verify`], [`report`]).

#![forbid(unsafe_code)]

pub mod connectivity;
pub mod edgelist;
mod flow;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod mycielskian;
pub mod report;
pub mod verify;

pub use connectivity::{
    extra_connectivity, extra_connectivity_budgeted, is_g_extra_cut, vertex_connectivity,
    vertex_connectivity_with_cut, ExtraCutCertificate, Method, SolveError, SolveOutcome,
};
pub use generate::{connected_graphs, random_graph, FamilyError, FamilySpec};
pub use graph::{are_isomorphic, Graph, GraphError, VertexSet};
pub use mycielskian::{mycielskian, MycielskiError, MycielskiLabel, Role};
pub use report::{emit_report, ReportFormat};
pub use verify::{
    check_extra_law, check_kappa_law, lift_extra_cut, monotonicity_audit, run_batch, BatchOptions,
    BatchResult, BatchSummary, MonotonicityAudit, RecordStatus, VerificationRecord, VerifyError,
};
