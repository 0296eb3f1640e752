//! Backtracking enumeration of MCVs.
//!
//! [`enumerate_mcvs`] is the corrected state machine; [`run_yeh_original`]
//! replays the original, defective procedure so that its failure modes can
//! be reproduced and diagnosed. Both are iterative with explicit stacks and
//! share the option, trace and report types defined here.

mod corrected;
mod original;
mod trace;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Cut, Graph, NodeSet};

pub use corrected::enumerate_mcvs;
pub use original::{run_yeh_original, OnDisconnected, YehPolicy};
pub use trace::{replay, ReplayError, ReplayState, StepKind, TraceEvent};

/// How Step 1 picks among the legal candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionOrder {
    /// Lowest node index first.
    Ascending,
    /// Consume the listed nodes in order, one per Step-1 consultation that
    /// has at least one legal candidate. The run stops with
    /// [`Status::ScriptExhausted`] if the script runs out or names a node
    /// that is not a legal candidate at that point.
    Scripted(Vec<usize>),
    /// A fixed node ranking drawn from the seed; lowest rank wins.
    Random(u64),
    /// Listed nodes rank first, in list order, then ascending index.
    Priority(Vec<usize>),
}

/// Whether the blocked set `B` survives a backtrack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BPolicy {
    /// `B` is saved on descent and restored on ascent, so it only ever
    /// holds failures observed at the current `(S, T)`.
    #[default]
    Scoped,
    /// `B` is carried across backtracks untouched.
    Persistent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub selection_order: SelectionOrder,
    pub b_policy: BPolicy,
    pub record_trace: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            selection_order: SelectionOrder::Ascending,
            b_policy: BPolicy::Scoped,
            record_trace: false,
        }
    }
}

impl EnumerationOptions {
    pub fn with_order(mut self, order: SelectionOrder) -> Self {
        self.selection_order = order;
        self
    }

    pub fn with_b_policy(mut self, policy: BPolicy) -> Self {
        self.b_policy = policy;
        self
    }

    pub fn traced(mut self) -> Self {
        self.record_trace = true;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Completed,
    StepLimitExceeded,
    ScriptExhausted,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Completed => "Completed",
            Status::StepLimitExceeded => "StepLimitExceeded",
            Status::ScriptExhausted => "ScriptExhausted",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub step1_visits: usize,
    pub connectivity_checks: usize,
    pub backtracks: usize,
    /// Steps executed, counted against the step limit of the original procedure.
    pub steps: usize,
}

#[derive(Debug, Clone)]
pub struct EnumerationReport {
    /// Recorded node sets in discovery order.
    pub mcvs: Vec<NodeSet>,
    /// `cuts[i]` is the crossing-edge set of `mcvs[i]`.
    pub cuts: Vec<Cut>,
    pub trace: Option<Vec<TraceEvent>>,
    pub stats: Stats,
    pub status: Status,
}

impl EnumerationReport {
    pub(crate) fn finish(
        g: &Graph,
        mcvs: Vec<NodeSet>,
        trace: Option<Vec<TraceEvent>>,
        stats: Stats,
        status: Status,
    ) -> Self {
        let cuts = mcvs
            .iter()
            .map(|u| g.cut_edges(u).expect("recorded sets hold s and exclude t"))
            .collect();
        EnumerationReport {
            mcvs,
            cuts,
            trace,
            stats,
            status,
        }
    }
}

/// Step-1 chooser built from a [`SelectionOrder`].
pub(crate) enum Selector {
    Ranked(Vec<usize>),
    Scripted { script: Vec<usize>, cursor: usize },
}

pub(crate) enum Pick {
    Node(usize),
    NoCandidate,
    ScriptExhausted,
}

impl Selector {
    pub(crate) fn new(order: &SelectionOrder, node_count: usize) -> Self {
        match order {
            SelectionOrder::Ascending => Selector::Ranked((0..node_count).collect()),
            SelectionOrder::Random(seed) => {
                let mut perm: Vec<usize> = (0..node_count).collect();
                perm.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
                Selector::Ranked(rank_of(&perm, node_count))
            }
            SelectionOrder::Priority(first) => {
                let mut perm: Vec<usize> = Vec::with_capacity(node_count);
                for &v in first {
                    if v < node_count && !perm.contains(&v) {
                        perm.push(v);
                    }
                }
                for v in 0..node_count {
                    if !perm.contains(&v) {
                        perm.push(v);
                    }
                }
                Selector::Ranked(rank_of(&perm, node_count))
            }
            SelectionOrder::Scripted(script) => Selector::Scripted {
                script: script.clone(),
                cursor: 0,
            },
        }
    }

    /// Chooses among the members of `open` adjacent to the current prefix.
    pub(crate) fn pick(&mut self, g: &Graph, open: &NodeSet, prefix: &NodeSet) -> Pick {
        let mut legal = open.iter().filter(|&v| g.is_adjacent_to_set(v, prefix)).peekable();
        if legal.peek().is_none() {
            return Pick::NoCandidate;
        }
        match self {
            Selector::Ranked(rank) => Pick::Node(legal.min_by_key(|&v| rank[v]).expect("non-empty")),
            Selector::Scripted { script, cursor } => match script.get(*cursor) {
                Some(&v) if v < g.node_count() && open.contains(v) && g.is_adjacent_to_set(v, prefix) => {
                    *cursor += 1;
                    Pick::Node(v)
                }
                _ => Pick::ScriptExhausted,
            },
        }
    }
}

fn rank_of(perm: &[usize], node_count: usize) -> Vec<usize> {
    let mut rank = vec![0; node_count];
    for (r, &v) in perm.iter().enumerate() {
        rank[v] = r;
    }
    rank
}
