use std::collections::BTreeSet;

use crate::enumerate::EnumerationReport;
use crate::graph::{Graph, NodeSet};

use super::OracleResult;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    /// In the oracle output but not the candidate's.
    pub missing: BTreeSet<NodeSet>,
    /// In the candidate output but not the oracle's.
    pub spurious: BTreeSet<NodeSet>,
    /// The members of `spurious` that fail the MCV test outright.
    pub non_mcv: BTreeSet<NodeSet>,
    pub agree: bool,
}

/// Set comparison of an enumeration run against the oracle on the same graph.
/// Discovery order and repeated entries in the candidate do not matter.
pub fn diff(candidate: &EnumerationReport, oracle: &OracleResult, g: &Graph) -> DiffReport {
    let produced: BTreeSet<NodeSet> = candidate.mcvs.iter().cloned().collect();
    let missing: BTreeSet<NodeSet> = oracle.mcvs.difference(&produced).cloned().collect();
    let spurious: BTreeSet<NodeSet> = produced.difference(&oracle.mcvs).cloned().collect();
    let non_mcv = spurious.iter().filter(|u| !g.is_mcv(u)).cloned().collect();
    DiffReport {
        agree: missing.is_empty() && spurious.is_empty(),
        missing,
        spurious,
        non_mcv,
    }
}
