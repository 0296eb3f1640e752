use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the nodes of one graph.
///
/// The universe size is fixed at construction and every set operation
/// requires both operands to share it. Ordering is lexicographic over the
/// ascending member list, so `{0} < {0,1} < {0,2} < {1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    bits: FixedBitSet,
}

impl NodeSet {
    pub fn empty(universe: usize) -> Self {
        NodeSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        NodeSet { bits }
    }

    pub fn singleton(universe: usize, node: usize) -> Self {
        let mut set = NodeSet::empty(universe);
        set.insert(node);
        set
    }

    /// Panics if any member is outside the universe.
    pub fn from_nodes<I: IntoIterator<Item = usize>>(universe: usize, nodes: I) -> Self {
        let mut set = NodeSet::empty(universe);
        for node in nodes {
            set.insert(node);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.bits.contains(node)
    }

    /// Returns `true` if the node was not already present.
    pub fn insert(&mut self, node: usize) -> bool {
        assert!(node < self.universe(), "node {node} outside universe");
        !self.bits.put(node)
    }

    /// Returns `true` if the node was present.
    pub fn remove(&mut self, node: usize) -> bool {
        if node >= self.universe() || !self.bits.contains(node) {
            return false;
        }
        self.bits.set(node, false);
        true
    }

    pub fn clear(&mut self) {
        self.bits.clear();
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    /// `V - self`.
    pub fn complement(&self) -> NodeSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        NodeSet { bits }
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        NodeSet { bits }
    }

    pub fn intersection(&self, other: &NodeSet) -> NodeSet {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        NodeSet { bits }
    }

    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        NodeSet { bits }
    }

    /// Copy of `self` with `node` removed.
    pub fn without(&self, node: usize) -> NodeSet {
        let mut set = self.clone();
        set.remove(node);
        set
    }

    /// Copy of `self` with `node` added.
    pub fn with(&self, node: usize) -> NodeSet {
        let mut set = self.clone();
        set.insert(node);
        set
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.check_universe(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        self.check_universe(other);
        self.bits.is_disjoint(&other.bits)
    }

    fn check_universe(&self, other: &NodeSet) {
        assert_eq!(
            self.universe(),
            other.universe(),
            "node sets drawn from different graphs"
        );
    }
}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then_with(|| self.universe().cmp(&other.universe()))
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
