use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ShrinkError {
    #[error("the input graph does not satisfy the check, nothing to shrink")]
    PreconditionViolated,
}

/// Greedily reduces `g` while `check` keeps holding.
///
/// Each round tries, in order, deleting a single edge, deleting a non-terminal
/// node, and contracting an edge; the first candidate that is still a valid
/// connected graph and still satisfies `check` is taken and the round
/// restarts. The result is locally minimal under those moves.
pub fn shrink_counterexample<F>(g: &Graph, check: F) -> Result<Graph, ShrinkError>
where
    F: Fn(&Graph) -> bool,
{
    if !check(g) {
        return Err(ShrinkError::PreconditionViolated);
    }
    let mut current = g.clone();
    loop {
        let next = candidates(&current).find(|h| check(h));
        match next {
            Some(smaller) => current = smaller,
            None => break,
        }
    }
    Ok(current)
}

fn candidates(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let edge_deletions = g.edges().iter().filter_map(move |&e| delete_edge(g, e));
    let node_deletions = (0..g.node_count())
        .filter(move |&v| v != g.source() && v != g.sink())
        .filter_map(move |v| g.induced(&g.all_nodes().without(v)).ok());
    let contractions = g.edges().iter().filter_map(move |&e| contract(g, e));
    edge_deletions.chain(node_deletions).chain(contractions)
}

fn delete_edge(g: &Graph, removed: Edge) -> Option<Graph> {
    let edges = g
        .edges()
        .iter()
        .filter(|&&e| e != removed)
        .map(|e| (e.lo(), e.hi()));
    Graph::from_parts(g.names().to_vec(), edges, g.source(), g.sink()).ok()
}

/// Merges the endpoints of `e`, keeping a terminal if one is involved.
fn contract(g: &Graph, e: Edge) -> Option<Graph> {
    let terminal = |v| v == g.source() || v == g.sink();
    let (keep, gone) = match (terminal(e.lo()), terminal(e.hi())) {
        (true, true) => return None,
        (false, true) => (e.hi(), e.lo()),
        _ => (e.lo(), e.hi()),
    };
    let remap = |v: usize| {
        let v = if v == gone { keep } else { v };
        if v > gone {
            v - 1
        } else {
            v
        }
    };
    let mut names = g.names().to_vec();
    names.remove(gone);
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (remap(e.lo()), remap(e.hi())))
        .filter(|(a, b)| a != b)
        .collect();
    Graph::from_parts(names, edges, remap(g.source()), remap(g.sink())).ok()
}
