//! Enumeration of all minimal s-t edge cuts of an undirected connected graph.
//!
//! A minimal cut is identified by the node set `U` on the source side: `U`
//! holds `s`, excludes `t`, and both `U` and `V - U` induce connected
//! subgraphs. Such a `U` is called an MCV and its cut is the set of edges
//! crossing from `U` to `V - U`.
//!
//! * [`graph`]: the graph type, node sets, cuts, connectivity and pruning.
//! * [`enumerate`]: the corrected backtracking enumerator and a replica of
//!   the original defective procedure.
//! * [`oracle`]: brute-force ground truth, diffing, random corpora and
//!   counterexample shrinking.

#![forbid(unsafe_code)]

pub mod enumerate;
pub mod graph;
pub mod oracle;

pub use enumerate::{
    enumerate_mcvs, replay, run_yeh_original, BPolicy, EnumerationOptions, EnumerationReport, OnDisconnected,
    SelectionOrder, Stats, Status, StepKind, TraceEvent, YehPolicy,
};
pub use graph::{Cut, Edge, EmptyOrFullSet, Graph, GraphError, NodeSet, PruneReport};
pub use oracle::{
    brute_force_mcvs, diff, generate_corpus, shrink_counterexample, CorpusGraph, CorpusSpec, DiffReport,
    OracleResult,
};
