//! Ground truth and differential tooling.
//!
//! The brute-force oracle checks every candidate node set directly against
//! the MCV definition. [`diff`] compares an enumerator's output to it, the
//! corpus generator supplies seeded random inputs, and the shrinker reduces
//! a failing input to a locally minimal one.

mod brute;
mod corpus;
mod diff;
mod shrink;

pub use brute::{brute_force_mcvs, OracleError, OracleResult, ORACLE_NODE_LIMIT};
pub use corpus::{generate_corpus, CorpusError, CorpusGraph, CorpusSpec, MAX_CORPUS_NODES};
pub use diff::{diff, DiffReport};
pub use shrink::{shrink_counterexample, ShrinkError};
