use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

pub const MAX_CORPUS_NODES: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub graph_count: usize,
    pub node_range: RangeInclusive<usize>,
    /// Erdős–Rényi edge probability, in `(0, 1]`.
    pub edge_probability: f64,
    pub seed: u64,
    pub prune: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("invalid corpus spec: {0}")]
    InvalidSpec(&'static str),
}

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    /// Seed that regenerates this graph on its own.
    pub seed: u64,
    /// The graph before pruning.
    pub original: Graph,
    /// The graph handed to consumers; pruned when the spec asks for it.
    pub graph: Graph,
}

impl CorpusSpec {
    fn validate(&self) -> Result<(), CorpusError> {
        if self.graph_count == 0 {
            return Err(CorpusError::InvalidSpec("graph_count must be positive"));
        }
        let (lo, hi) = (*self.node_range.start(), *self.node_range.end());
        if lo < 2 || lo > hi {
            return Err(CorpusError::InvalidSpec("node range must satisfy 2 <= min <= max"));
        }
        if hi > MAX_CORPUS_NODES {
            return Err(CorpusError::InvalidSpec("node range max exceeds 12"));
        }
        if !(self.edge_probability > 0.0 && self.edge_probability <= 1.0) {
            return Err(CorpusError::InvalidSpec("edge probability must lie in (0, 1]"));
        }
        Ok(())
    }
}

/// Seeded random connected graphs. Each graph draws its own seed from the
/// master seed, picks a node count and distinct terminals, then samples
/// edges independently until the result is connected.
///
/// Terminals are labelled `s` and `t`; the remaining nodes `1..=n-2`.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusGraph>, CorpusError> {
    spec.validate()?;
    let mut master = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok((0..spec.graph_count)
        .map(|_| {
            let seed = master.random::<u64>();
            let original = random_connected_graph(seed, &spec.node_range, spec.edge_probability);
            let graph = if spec.prune {
                original.prune_irrelevant().pruned_graph
            } else {
                original.clone()
            };
            CorpusGraph { seed, original, graph }
        })
        .collect())
}

pub(crate) fn random_connected_graph(seed: u64, nodes: &RangeInclusive<usize>, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(nodes.clone());
    let source = rng.random_range(0..n);
    let sink = (source + rng.random_range(1..n)) % n;

    let mut names = Vec::with_capacity(n);
    let mut next = 1;
    for v in 0..n {
        if v == source {
            names.push("s".to_string());
        } else if v == sink {
            names.push("t".to_string());
        } else {
            names.push(next.to_string());
            next += 1;
        }
    }

    loop {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        if let Ok(g) = Graph::from_parts(names.clone(), edges, source, sink) {
            return g;
        }
    }
}
