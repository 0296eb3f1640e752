#![allow(dead_code)]

use std::collections::BTreeSet;

use mcv_core::{Edge, Graph, NodeSet};
use proptest::prelude::*;

pub const FIG1_EDGES: [(&str, &str); 9] = [
    ("s", "1"),
    ("s", "2"),
    ("1", "2"),
    ("1", "3"),
    ("1", "4"),
    ("2", "3"),
    ("3", "4"),
    ("3", "t"),
    ("4", "t"),
];

pub fn fig1() -> Graph {
    Graph::from_labeled_edges(FIG1_EDGES, "s", "t").unwrap()
}

pub fn graph(edges: &[(&str, &str)]) -> Graph {
    Graph::from_labeled_edges(edges.iter().copied(), "s", "t").unwrap()
}

pub fn complete(n: usize) -> Graph {
    let names = labels_for(n);
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_parts(names, edges, 0, n - 1).unwrap()
}

pub fn path(n: usize) -> Graph {
    let names = labels_for(n);
    Graph::from_parts(names, (0..n - 1).map(|a| (a, a + 1)), 0, n - 1).unwrap()
}

/// `s, 1, .., n-2, t`
fn labels_for(n: usize) -> Vec<String> {
    let mut names = vec!["s".to_string()];
    names.extend((1..n - 1).map(|i| i.to_string()));
    names.push("t".to_string());
    names
}

pub fn set(g: &Graph, labels: &[&str]) -> NodeSet {
    g.node_set(labels).unwrap()
}

pub fn label_sets<'a, I: IntoIterator<Item = &'a NodeSet>>(g: &Graph, sets: I) -> BTreeSet<String> {
    sets.into_iter().map(|u| g.format_set(u)).collect()
}

/// Cut as a set of label pairs, each pair sorted.
pub fn label_cut(g: &Graph, edges: &[Edge]) -> BTreeSet<(String, String)> {
    edges
        .iter()
        .map(|e| {
            let (a, b) = (g.name(e.lo()).to_string(), g.name(e.hi()).to_string());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// Nodes on some simple s-t path, by exhaustive depth-first path search.
pub fn relevant_by_paths(g: &Graph) -> NodeSet {
    fn walk(g: &Graph, v: usize, on_path: &mut Vec<usize>, seen: &mut NodeSet, relevant: &mut NodeSet) {
        if v == g.sink() {
            for &x in on_path.iter() {
                relevant.insert(x);
            }
            return;
        }
        for &w in g.neighbors(v) {
            if !seen.contains(w) {
                seen.insert(w);
                on_path.push(w);
                walk(g, w, on_path, seen, relevant);
                on_path.pop();
                seen.remove(w);
            }
        }
    }
    let mut relevant = g.empty_set();
    let mut seen = NodeSet::singleton(g.node_count(), g.source());
    walk(g, g.source(), &mut vec![g.source()], &mut seen, &mut relevant);
    relevant
}

/// Every subset holding the source and not the sink.
pub fn candidate_sets(g: &Graph) -> Vec<NodeSet> {
    let inner: Vec<usize> = (0..g.node_count())
        .filter(|&v| v != g.source() && v != g.sink())
        .collect();
    (0u64..1 << inner.len())
        .map(|mask| {
            let mut u = NodeSet::singleton(g.node_count(), g.source());
            for (bit, &v) in inner.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    u.insert(v);
                }
            }
            u
        })
        .collect()
}

/// Random connected graph: a random spanning tree plus random extra edges,
/// with the edge list in random order.
pub fn arb_graph(max_nodes: usize) -> impl Strategy<Value = Graph> {
    (2..=max_nodes)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), parents, extra, 0..n, 1..n, any::<u64>())
        })
        .prop_map(|(n, parents, extra, s, dt, shuffle)| {
            let t = (s + dt) % n;
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (i + 1, p)).collect();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if extra[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            // deterministic shuffle keyed by `shuffle`
            edges.sort_by_key(|&(a, b)| (a as u64 * 31 + b as u64).wrapping_mul(shuffle | 1).rotate_left(17));
            let name = |v: usize| {
                if v == s {
                    "s".to_string()
                } else if v == t {
                    "t".to_string()
                } else {
                    format!("v{v}")
                }
            };
            let labelled: Vec<(String, String)> = edges.iter().map(|&(a, b)| (name(a), name(b))).collect();
            Graph::from_labeled_edges(labelled, "s", "t").unwrap()
        })
}
