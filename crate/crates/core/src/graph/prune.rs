//! Removal of nodes that lie on no simple s-t path.
//!
//! A node is relevant exactly when it belongs to a block (biconnected
//! component) on the block-cut-tree path between the source and the sink.
//! Anything else hangs off that path through a single articulation point
//! and cannot appear on a simple s-t path, whether it is a tree-like
//! appendage or a whole pendant biconnected blob.

use std::collections::VecDeque;

use super::{Edge, Graph, NodeSet};

#[derive(Debug, Clone)]
pub struct PruneReport {
    /// Indices into the original graph.
    pub removed_nodes: NodeSet,
    /// Edges of the original graph with at least one removed endpoint.
    pub removed_edges: Vec<Edge>,
    pub pruned_graph: Graph,
}

impl PruneReport {
    pub fn is_noop(&self) -> bool {
        self.removed_nodes.is_empty()
    }
}

impl Graph {
    /// Nodes lying on at least one simple path from source to sink.
    pub fn relevant_nodes(&self) -> NodeSet {
        let blocks = biconnected_components(self);
        let n = self.node_count();

        let mut blocks_of: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                blocks_of[v].push(b);
            }
        }

        // Block-cut tree: ids 0..blocks.len() are blocks, the rest articulation points.
        let nb = blocks.len();
        let mut tree_id = vec![usize::MAX; n];
        let mut next = nb;
        for v in 0..n {
            if blocks_of[v].len() > 1 {
                tree_id[v] = next;
                next += 1;
            }
        }
        let mut tree: Vec<Vec<usize>> = vec![Vec::new(); next];
        for v in 0..n {
            if tree_id[v] != usize::MAX {
                for &b in &blocks_of[v] {
                    tree[tree_id[v]].push(b);
                    tree[b].push(tree_id[v]);
                }
            }
        }
        let anchor = |v: usize| {
            if tree_id[v] != usize::MAX {
                tree_id[v]
            } else {
                blocks_of[v][0]
            }
        };
        let (from, to) = (anchor(self.source()), anchor(self.sink()));

        let mut parent = vec![usize::MAX; next];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &y in &tree[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }

        let mut relevant = self.empty_set();
        let mut x = to;
        loop {
            if x < nb {
                for &v in &blocks[x] {
                    relevant.insert(v);
                }
            }
            if x == from {
                break;
            }
            x = parent[x];
        }
        // Terminals may be articulation points whose anchor is not a block.
        relevant.insert(self.source());
        relevant.insert(self.sink());
        relevant
    }

    /// Drops every node that lies on no simple s-t path. Idempotent.
    pub fn prune_irrelevant(&self) -> PruneReport {
        let relevant = self.relevant_nodes();
        let removed_nodes = relevant.complement();
        let removed_edges = self
            .edges()
            .iter()
            .copied()
            .filter(|e| removed_nodes.contains(e.lo()) || removed_nodes.contains(e.hi()))
            .collect();
        let pruned_graph = if removed_nodes.is_empty() {
            self.clone()
        } else {
            self.induced(&relevant)
                .expect("relevant nodes induce a connected graph holding both terminals")
        };
        PruneReport {
            removed_nodes,
            removed_edges,
            pruned_graph,
        }
    }
}

/// Node lists of the biconnected components of a connected graph, found by an
/// iterative Hopcroft-Tarjan search with an edge stack.
pub(crate) fn biconnected_components(g: &Graph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.node_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut marker = vec![usize::MAX; n];

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (node, parent, next neighbor position)
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];

        while let Some(frame) = frames.last_mut() {
            let (v, parent, pos) = *frame;
            if let Some(&w) = g.neighbors(v).get(pos) {
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let id = blocks.len();
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    for x in [a, b] {
                        if marker[x] != id {
                            marker[x] = id;
                            block.push(x);
                        }
                    }
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                block.sort_unstable();
                blocks.push(block);
            }
        }
    }
    blocks
}
