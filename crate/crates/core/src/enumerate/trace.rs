use thiserror::Error;

use crate::graph::{Graph, NodeSet};

/// One step of an enumeration run.
///
/// Events carry deltas plus the Step-1 candidate set; the full `(S, T)`
/// state at any point is recovered with [`replay`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// Step 0: `S = {source}`.
    Start { source: usize },
    /// Step 1 chose `node` out of `open = T - (B ∪ N_i)`.
    Select { level: usize, open: NodeSet, node: usize },
    /// Step 1 found no member of `open` adjacent to `S`.
    Exhausted { level: usize, open: NodeSet },
    /// Step 2: `G(T - {node})` is connected.
    Connected { node: usize },
    /// Step 2: `G(T - {node})` is disconnected.
    Disconnected { node: usize },
    /// Step 3 moved `node` from `T` onto `S` and recorded `S` as `U_k`.
    Record { k: usize, node: usize },
    /// Step 4 moved `node` from the top of `S` back to `T`; `level` is the new `i`.
    Backtrack { node: usize, level: usize },
    Stop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Step0,
    Step1Select,
    Step1Exhausted,
    Step2Connected,
    Step2Disconnected,
    Step3Record,
    Step4Backtrack,
    Stop,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::Step0 => "Step0",
            StepKind::Step1Select => "Step1-select",
            StepKind::Step1Exhausted => "Step1-exhausted",
            StepKind::Step2Connected => "Step2-connected",
            StepKind::Step2Disconnected => "Step2-disconnected",
            StepKind::Step3Record => "Step3-record",
            StepKind::Step4Backtrack => "Step4-backtrack",
            StepKind::Stop => "Stop",
        }
    }
}

impl TraceEvent {
    pub fn kind(&self) -> StepKind {
        match self {
            TraceEvent::Start { .. } => StepKind::Step0,
            TraceEvent::Select { .. } => StepKind::Step1Select,
            TraceEvent::Exhausted { .. } => StepKind::Step1Exhausted,
            TraceEvent::Connected { .. } => StepKind::Step2Connected,
            TraceEvent::Disconnected { .. } => StepKind::Step2Disconnected,
            TraceEvent::Record { .. } => StepKind::Step3Record,
            TraceEvent::Backtrack { .. } => StepKind::Step4Backtrack,
            TraceEvent::Stop => StepKind::Stop,
        }
    }
}

/// State after applying an event during [`replay`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayState {
    /// `S` as a stack, source at the bottom.
    pub prefix: Vec<usize>,
    pub remaining: NodeSet,
    pub level: usize,
    pub k: usize,
}

impl ReplayState {
    pub fn prefix_set(&self) -> NodeSet {
        NodeSet::from_nodes(self.remaining.universe(), self.prefix.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace event {index} ({kind:?}) is inconsistent: {reason}")]
pub struct ReplayError {
    pub index: usize,
    pub kind: StepKind,
    pub reason: &'static str,
}

/// Re-executes a trace against `g`, checking that each event's preconditions
/// hold given the events before it. Returns the state after every event.
pub fn replay(g: &Graph, trace: &[TraceEvent]) -> Result<Vec<ReplayState>, ReplayError> {
    let mut states = Vec::with_capacity(trace.len());
    let mut state: Option<ReplayState> = None;
    let mut pending: Option<usize> = None;
    let mut stopped = false;

    for (index, event) in trace.iter().enumerate() {
        let fail = |reason| ReplayError {
            index,
            kind: event.kind(),
            reason,
        };
        if stopped {
            return Err(fail("event after Stop"));
        }
        if state.is_none() {
            match event {
                TraceEvent::Start { source } if *source == g.source() => {
                    let initial = ReplayState {
                        prefix: vec![g.source()],
                        remaining: g.all_nodes().without(g.source()),
                        level: 0,
                        k: 0,
                    };
                    states.push(initial.clone());
                    state = Some(initial);
                    continue;
                }
                _ => return Err(fail("trace must open with Start at the source")),
            }
        }
        let st = state.as_mut().expect("initialised above");
        let prefix = st.prefix_set();
        match event {
            TraceEvent::Start { .. } => return Err(fail("repeated Start")),
            TraceEvent::Select { level, open, node } => {
                if *level != st.level {
                    return Err(fail("level mismatch"));
                }
                if !open.is_subset(&st.remaining) || open.contains(g.sink()) {
                    return Err(fail("open set must lie in T and exclude the sink"));
                }
                if !open.contains(*node) || !g.is_adjacent_to_set(*node, &prefix) {
                    return Err(fail("selected node is not an open neighbor of S"));
                }
                pending = Some(*node);
            }
            TraceEvent::Exhausted { level, open } => {
                if *level != st.level {
                    return Err(fail("level mismatch"));
                }
                if !open.is_subset(&st.remaining) {
                    return Err(fail("open set must lie in T"));
                }
                if open.iter().any(|v| g.is_adjacent_to_set(v, &prefix)) {
                    return Err(fail("an open node adjacent to S was available"));
                }
                pending = None;
            }
            TraceEvent::Connected { node } | TraceEvent::Disconnected { node } => {
                if pending != Some(*node) {
                    return Err(fail("connectivity test on a node that was not selected"));
                }
                let connected = g.is_connected(&st.remaining.without(*node));
                if connected != matches!(event, TraceEvent::Connected { .. }) {
                    return Err(fail("connectivity verdict disagrees with the graph"));
                }
            }
            TraceEvent::Record { k, node } => {
                if pending != Some(*node) || !st.remaining.contains(*node) {
                    return Err(fail("recorded node was not the pending selection"));
                }
                st.prefix.push(*node);
                st.remaining.remove(*node);
                st.level += 1;
                st.k += 1;
                if *k != st.k {
                    return Err(fail("record counter mismatch"));
                }
                pending = None;
            }
            TraceEvent::Backtrack { node, level } => {
                if st.prefix.len() < 2 || st.prefix.last() != Some(node) {
                    return Err(fail("backtracked node is not the top of S"));
                }
                st.prefix.pop();
                st.remaining.insert(*node);
                st.level -= 1;
                if *level != st.level {
                    return Err(fail("level mismatch after backtrack"));
                }
                pending = None;
            }
            TraceEvent::Stop => stopped = true,
        }
        states.push(st.clone());
    }
    Ok(states)
}
