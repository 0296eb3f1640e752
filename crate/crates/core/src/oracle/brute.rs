use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Cut, Graph, NodeSet};

/// Largest graph the oracle accepts; it visits `2^(n-2)` subsets.
pub const ORACLE_NODE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {nodes} nodes; the brute-force oracle accepts at most {limit}")]
    TooLarge { nodes: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub mcvs: BTreeSet<NodeSet>,
    pub cuts: BTreeSet<Cut>,
    pub subsets_checked: u64,
}

/// Every MCV of `g`, found by testing each subset that holds the source and
/// excludes the sink.
pub fn brute_force_mcvs(g: &Graph) -> Result<OracleResult, OracleError> {
    let n = g.node_count();
    if n > ORACLE_NODE_LIMIT {
        return Err(OracleError::TooLarge {
            nodes: n,
            limit: ORACLE_NODE_LIMIT,
        });
    }
    let inner: Vec<usize> = (0..n).filter(|&v| v != g.source() && v != g.sink()).collect();
    let mut mcvs = BTreeSet::new();
    let total = 1u64 << inner.len();
    for mask in 0..total {
        let mut u = NodeSet::singleton(n, g.source());
        for (bit, &v) in inner.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                u.insert(v);
            }
        }
        if g.is_mcv(&u) {
            mcvs.insert(u);
        }
    }
    let cuts = mcvs
        .iter()
        .map(|u| g.cut_edges(u).expect("candidates hold s and exclude t"))
        .collect();
    Ok(OracleResult {
        mcvs,
        cuts,
        subsets_checked: total,
    })
}
