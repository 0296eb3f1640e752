//! Undirected simple graphs with a designated source and sink.
//!
//! Nodes carry text labels and are addressed by dense indices assigned in
//! order of first appearance in the edge list. A [`Graph`] is validated at
//! construction (connected, no self-loops, `source != sink`) and immutable
//! afterwards, so it can be shared freely across threads.

mod cut;
mod nodeset;
mod prune;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use cut::{Cut, Edge};
pub use nodeset::NodeSet;
pub use prune::PruneReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge list is empty")]
    EmptyEdgeList,
    #[error("source and sink are the same node `{0}`")]
    SourceEqualsSink(String),
    #[error("node `{0}` does not appear in the edge list")]
    UnknownNode(String),
    #[error("self-loop on node `{0}`")]
    SelfLoop(String),
    #[error("graph is not connected")]
    DisconnectedInput,
}

/// Returned by operations that need a proper, non-empty node set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("node set must be non-empty and must not contain every node")]
pub struct EmptyOrFullSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    source: usize,
    sink: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    merged_parallel: usize,
}

impl Graph {
    /// Builds a graph from labelled edges.
    ///
    /// Parallel edges are merged and counted (see
    /// [`Graph::merged_parallel_edges`]); self-loops are rejected.
    pub fn from_labeled_edges<I, A, B>(edges: I, source: &str, sink: &str) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |label: &str| -> usize {
            if let Some(&i) = index.get(label) {
                return i;
            }
            names.push(label.to_string());
            index.insert(label.to_string(), names.len() - 1);
            names.len() - 1
        };

        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            if a == b {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            pairs.push((intern(a), intern(b)));
        }
        if pairs.is_empty() {
            return Err(GraphError::EmptyEdgeList);
        }
        if source == sink {
            return Err(GraphError::SourceEqualsSink(source.to_string()));
        }
        let s = *index
            .get(source)
            .ok_or_else(|| GraphError::UnknownNode(source.to_string()))?;
        let t = *index
            .get(sink)
            .ok_or_else(|| GraphError::UnknownNode(sink.to_string()))?;
        Graph::from_parts(names, pairs, s, t)
    }

    /// Builds a graph over already-indexed nodes. Every index in `0..names.len()`
    /// is a node, whether or not it has edges.
    pub fn from_parts<I>(names: Vec<String>, edges: I, source: usize, sink: usize) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = names.len();
        assert!(source < n && sink < n, "terminal index out of range");
        if source == sink {
            return Err(GraphError::SourceEqualsSink(names[source].clone()));
        }
        let mut set = BTreeSet::new();
        let mut total = 0usize;
        for (a, b) in edges {
            assert!(a < n && b < n, "edge endpoint out of range");
            if a == b {
                return Err(GraphError::SelfLoop(names[a].clone()));
            }
            total += 1;
            set.insert(Edge::new(a, b));
        }
        if set.is_empty() {
            return Err(GraphError::EmptyEdgeList);
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.lo()].push(e.hi());
            adjacency[e.hi()].push(e.lo());
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let index = names.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let graph = Graph {
            merged_parallel: total - edges.len(),
            names,
            index,
            source,
            sink,
            edges,
            adjacency,
        };
        if !graph.is_connected(&graph.all_nodes()) {
            return Err(GraphError::DisconnectedInput);
        }
        Ok(graph)
    }

    /// Same nodes and edges with different terminals.
    pub fn with_terminals(&self, source: usize, sink: usize) -> Result<Graph, GraphError> {
        if source == sink {
            return Err(GraphError::SourceEqualsSink(self.names[source].clone()));
        }
        let mut g = self.clone();
        g.source = source;
        g.sink = sink;
        Ok(g)
    }

    /// The subgraph induced by `keep`, with node order preserved.
    pub fn induced(&self, keep: &NodeSet) -> Result<Graph, GraphError> {
        if !keep.contains(self.source) || !keep.contains(self.sink) {
            return Err(GraphError::UnknownNode(
                self.names[if keep.contains(self.source) { self.sink } else { self.source }].clone(),
            ));
        }
        let mut remap = vec![usize::MAX; self.node_count()];
        let mut names = Vec::with_capacity(keep.len());
        for v in keep.iter() {
            remap[v] = names.len();
            names.push(self.names[v].clone());
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep.contains(e.lo()) && keep.contains(e.hi()))
            .map(|e| (remap[e.lo()], remap[e.hi()]));
        Graph::from_parts(names, edges, remap[self.source], remap[self.sink])
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Number of duplicate edges dropped while building.
    pub fn merged_parallel_edges(&self) -> usize {
        self.merged_parallel
    }

    pub fn name(&self, node: usize) -> &str {
        &self.names[node]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Edges in canonical order, lower endpoint first.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `node` in ascending index order.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.node_count())
    }

    pub fn empty_set(&self) -> NodeSet {
        NodeSet::empty(self.node_count())
    }

    /// Resolves labels into a node set. Returns the first unknown label on failure.
    pub fn node_set<I, L>(&self, labels: I) -> Result<NodeSet, GraphError>
    where
        I: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        let mut set = self.empty_set();
        for label in labels {
            let label = label.as_ref();
            let v = self
                .index_of(label)
                .ok_or_else(|| GraphError::UnknownNode(label.to_string()))?;
            set.insert(v);
        }
        Ok(set)
    }

    /// Formats a node set as `{s,1,2}`, members in index order.
    pub fn format_set(&self, set: &NodeSet) -> String {
        let labels: Vec<&str> = set.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", labels.join(","))
    }

    /// Whether the subgraph induced by `nodes` is connected. The empty set and
    /// singletons count as connected.
    pub fn is_connected(&self, nodes: &NodeSet) -> bool {
        let Some(start) = nodes.first() else {
            return true;
        };
        self.reachable_within(start, nodes).len() == nodes.len()
    }

    /// Nodes of `within` reachable from `start` without leaving `within`.
    pub fn reachable_within(&self, start: usize, within: &NodeSet) -> NodeSet {
        let mut seen = self.empty_set();
        if !within.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if within.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Whether some edge joins `node` to a member of `set`.
    pub fn is_adjacent_to_set(&self, node: usize, set: &NodeSet) -> bool {
        self.neighbors(node).iter().any(|&w| set.contains(w))
    }

    /// `MC(U)`: the edges with exactly one endpoint in `nodes`.
    pub fn cut_edges(&self, nodes: &NodeSet) -> Result<Cut, EmptyOrFullSet> {
        if nodes.is_empty() || nodes.is_full() {
            return Err(EmptyOrFullSet);
        }
        Ok(Cut::from_edges(
            self.edges
                .iter()
                .copied()
                .filter(|e| nodes.contains(e.lo()) != nodes.contains(e.hi())),
        ))
    }

    /// Whether `nodes` is an MCV: it holds the source but not the sink, and
    /// both it and its complement induce connected subgraphs. Equivalently,
    /// `cut_edges(nodes)` is a minimal s-t cut.
    pub fn is_mcv(&self, nodes: &NodeSet) -> bool {
        nodes.contains(self.source)
            && !nodes.contains(self.sink)
            && self.is_connected(nodes)
            && self.is_connected(&nodes.complement())
    }

    /// Members of `nodes` incident to at least one crossing edge.
    pub fn boundary_nodes(&self, nodes: &NodeSet) -> Result<NodeSet, EmptyOrFullSet> {
        if nodes.is_empty() || nodes.is_full() {
            return Err(EmptyOrFullSet);
        }
        let mut boundary = self.empty_set();
        for v in nodes.iter() {
            if self.neighbors(v).iter().any(|&w| !nodes.contains(w)) {
                boundary.insert(v);
            }
        }
        Ok(boundary)
    }

    /// Whether source and sink stay connected once `removed` is deleted.
    pub fn connects_terminals_without(&self, removed: &Cut) -> bool {
        let mut seen = self.empty_set();
        seen.insert(self.source);
        let mut stack = vec![self.source];
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !removed.contains(Edge::new(v, w)) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.contains(self.sink)
    }

    /// Renders the graph in the edge-list text format with a header comment.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!(
            "# source {} sink {}\n",
            self.name(self.source),
            self.name(self.sink)
        );
        for e in &self.edges {
            out.push_str(self.name(e.lo()));
            out.push(' ');
            out.push_str(self.name(e.hi()));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| format!("{}-{}", self.name(e.lo()), self.name(e.hi())))
            .collect();
        f.debug_struct("Graph")
            .field("source", &self.name(self.source))
            .field("sink", &self.name(self.sink))
            .field("edges", &edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig1() -> Graph {
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
        .unwrap()
    }

    fn set(g: &Graph, labels: &[&str]) -> NodeSet {
        g.node_set(labels).unwrap()
    }

    fn cut_labels(g: &Graph, cut: &Cut) -> Vec<(String, String)> {
        cut.edges()
            .iter()
            .map(|e| (g.name(e.lo()).to_string(), g.name(e.hi()).to_string()))
            .collect()
    }

    #[test]
    fn fig1_shape() {
        let g = fig1();
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.names(), &["s", "1", "2", "3", "4", "t"]);
        assert!(!g.has_edge(2, 4));
        assert!(!g.has_edge(2, 5));
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_labeled_edges([("s", "t")], "s", "t").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (2, 1));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::from_labeled_edges([("s", "a"), ("a", "b")], "s", "t"),
            Err(GraphError::UnknownNode("t".into()))
        );
        assert_eq!(
            Graph::from_labeled_edges([("s", "t")], "s", "s"),
            Err(GraphError::SourceEqualsSink("s".into()))
        );
        assert_eq!(
            Graph::from_labeled_edges([("s", "t"), ("a", "a")], "s", "t"),
            Err(GraphError::SelfLoop("a".into()))
        );
        assert_eq!(
            Graph::from_labeled_edges([("s", "a"), ("b", "t")], "s", "t"),
            Err(GraphError::DisconnectedInput)
        );
        assert_eq!(
            Graph::from_labeled_edges(Vec::<(&str, &str)>::new(), "s", "t"),
            Err(GraphError::EmptyEdgeList)
        );
    }

    #[test]
    fn parallel_edges_merged_and_counted() {
        let g = Graph::from_labeled_edges([("s", "t"), ("t", "s"), ("s", "t")], "s", "t").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.merged_parallel_edges(), 2);
    }

    #[test]
    fn connectivity_examples() {
        let g = fig1();
        assert!(!g.is_connected(&set(&g, &["2", "4", "t"])));
        assert!(g.is_connected(&set(&g, &["t"])));
        assert!(g.is_connected(&g.all_nodes()));
        assert!(g.is_connected(&g.empty_set()));
        assert!(g.is_connected(&set(&g, &["2", "3", "t"])));
    }

    #[test]
    fn adjacency_to_set() {
        let g = fig1();
        let s = set(&g, &["s"]);
        assert!(!g.is_adjacent_to_set(3, &s));
        assert!(g.is_adjacent_to_set(1, &s));
        for v in 0..g.node_count() {
            assert!(g.is_adjacent_to_set(v, &g.all_nodes().without(v)));
        }
    }

    #[test]
    fn cut_edges_examples() {
        let g = fig1();
        let pairs = |v: &[(&str, &str)]| -> Vec<(String, String)> {
            v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
        };
        assert_eq!(
            cut_labels(&g, &g.cut_edges(&set(&g, &["s"])).unwrap()),
            pairs(&[("s", "1"), ("s", "2")])
        );
        assert_eq!(
            cut_labels(&g, &g.cut_edges(&set(&g, &["s", "1", "2", "3", "4"])).unwrap()),
            pairs(&[("3", "t"), ("4", "t")])
        );
        assert_eq!(
            cut_labels(&g, &g.cut_edges(&set(&g, &["s", "2"])).unwrap()),
            pairs(&[("s", "1"), ("1", "2"), ("2", "3")])
        );
        assert_eq!(g.cut_edges(&g.empty_set()), Err(EmptyOrFullSet));
        assert_eq!(g.cut_edges(&g.all_nodes()), Err(EmptyOrFullSet));
    }

    #[test]
    fn mcv_examples() {
        let g = fig1();
        assert!(g.is_mcv(&set(&g, &["s", "1", "2", "3"])));
        assert!(g.is_mcv(&set(&g, &["s", "1", "2", "3", "4"])));
        assert!(!g.is_mcv(&set(&g, &["s", "1", "3"])));
        assert!(!g.is_mcv(&set(&g, &["s", "3"])));
        assert!(!g.is_mcv(&set(&g, &["1", "2"])));
        assert!(!g.is_mcv(&set(&g, &["s", "1", "t"])));
    }

    #[test]
    fn boundary_examples() {
        let g = fig1();
        assert_eq!(
            g.boundary_nodes(&set(&g, &["s", "1", "2", "3", "4"])).unwrap(),
            set(&g, &["3", "4"])
        );
        assert_eq!(g.boundary_nodes(&set(&g, &["s"])).unwrap(), set(&g, &["s"]));
        assert_eq!(
            g.boundary_nodes(&set(&g, &["s", "1", "2"])).unwrap(),
            set(&g, &["1", "2"])
        );
        assert_eq!(g.boundary_nodes(&g.all_nodes()), Err(EmptyOrFullSet));
    }

    #[test]
    fn induced_keeps_order_and_labels() {
        let g = fig1();
        let h = g.induced(&set(&g, &["s", "1", "3", "t"])).unwrap();
        assert_eq!(h.names(), &["s", "1", "3", "t"]);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.name(h.source()), "s");
        assert_eq!(h.name(h.sink()), "t");
    }

    #[test]
    fn edge_list_rendering_rebuilds() {
        let g = fig1();
        let text = g.to_edge_list();
        let pairs: Vec<(&str, &str)> = text
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| {
                let mut it = l.split_whitespace();
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect();
        assert_eq!(Graph::from_labeled_edges(pairs, "s", "t").unwrap(), g);
    }
}
