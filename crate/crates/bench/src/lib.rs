//! Graph workloads shared by the benchmarks.

use mcv_core::{generate_corpus, CorpusSpec, Graph};

pub fn fig1() -> Graph {
    Graph::from_labeled_edges(
        [
            ("s", "1"),
            ("s", "2"),
            ("1", "2"),
            ("1", "3"),
            ("1", "4"),
            ("2", "3"),
            ("3", "4"),
            ("3", "t"),
            ("4", "t"),
        ],
        "s",
        "t",
    )
    .expect("valid graph")
}

/// K_n with source 0 and sink n-1.
pub fn complete(n: usize) -> Graph {
    let names = (0..n).map(|i| i.to_string()).collect();
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_parts(names, edges, 0, n - 1).expect("valid graph")
}

/// A 2-wide grid of `len` columns, source and sink at opposite corners.
pub fn ladder(len: usize) -> Graph {
    let names = (0..2 * len).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for c in 0..len {
        edges.push((2 * c, 2 * c + 1));
        if c + 1 < len {
            edges.push((2 * c, 2 * c + 2));
            edges.push((2 * c + 1, 2 * c + 3));
        }
    }
    Graph::from_parts(names, edges, 0, 2 * len - 1).expect("valid graph")
}

/// Pruned random graphs with 8 to 10 nodes.
pub fn corpus_sample(count: usize) -> Vec<Graph> {
    let spec = CorpusSpec {
        graph_count: count,
        node_range: 8..=10,
        edge_probability: 0.35,
        seed: 7,
        prune: true,
    };
    generate_corpus(&spec)
        .expect("valid spec")
        .into_iter()
        .map(|c| c.graph)
        .collect()
}
