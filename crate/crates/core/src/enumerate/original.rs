use crate::graph::{Graph, NodeSet};

use super::{EnumerationOptions, EnumerationReport, Pick, Selector, Stats, Status, TraceEvent};

/// Where control goes when Step 2 of the original procedure finds
/// `G(T - {u})` disconnected. The procedure leaves this unspecified; each
/// choice reproduces a different failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnDisconnected {
    /// `u` stays selectable, so Step 1 may pick it forever.
    GotoStep1,
    /// `S ∪ {u}` is recorded even though it is not an MCV.
    GotoStep3,
    /// Backtrack, which under the `i = 1` stopping rule can end the run early.
    GotoStep4,
}

impl OnDisconnected {
    pub fn as_str(self) -> &'static str {
        match self {
            OnDisconnected::GotoStep1 => "goto-step1",
            OnDisconnected::GotoStep3 => "goto-step3",
            OnDisconnected::GotoStep4 => "goto-step4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YehPolicy {
    pub on_disconnected: OnDisconnected,
    pub step_limit: u64,
}

impl YehPolicy {
    /// Uses the default budget of `10 * 2^n` steps, saturating.
    pub fn new(on_disconnected: OnDisconnected, node_count: usize) -> Self {
        YehPolicy {
            on_disconnected,
            step_limit: default_step_limit(node_count),
        }
    }

    pub fn with_step_limit(mut self, step_limit: u64) -> Self {
        assert!(step_limit > 0, "step limit must be positive");
        self.step_limit = step_limit;
        self
    }
}

pub fn default_step_limit(node_count: usize) -> u64 {
    1u64.checked_shl(node_count as u32)
        .and_then(|p| p.checked_mul(10))
        .unwrap_or(u64::MAX)
}

enum Next {
    Step1,
    Step3(usize),
    Step4,
}

/// Runs the original procedure as originally stated, defects included:
///
/// * `P` starts empty, so `{s}` is never recorded.
/// * Step 1 draws from `T - N_i` with no blocked set.
/// * A disconnected Step-2 test transfers per `policy.on_disconnected`.
/// * Step 4 stops at `i = 1` instead of `i = 0`.
///
/// Every step spends one unit of `policy.step_limit`; running out yields
/// [`Status::StepLimitExceeded`] with whatever was recorded so far. The
/// `b_policy` in `opts` is ignored.
pub fn run_yeh_original(g: &Graph, policy: &YehPolicy, opts: &EnumerationOptions) -> EnumerationReport {
    let n = g.node_count();
    let (source, sink) = (g.source(), g.sink());
    let mut trace = opts.record_trace.then(Vec::new);
    let mut emit = |event: TraceEvent| {
        if let Some(t) = trace.as_mut() {
            t.push(event);
        }
    };
    let mut selector = Selector::new(&opts.selection_order, n);
    let mut stats = Stats::default();

    let mut prefix = vec![source];
    let mut in_prefix = NodeSet::singleton(n, source);
    let mut remaining = in_prefix.complement();
    let mut excluded = vec![NodeSet::singleton(n, sink)];
    let mut found: Vec<NodeSet> = Vec::new();
    emit(TraceEvent::Start { source });

    let mut next = Next::Step1;
    let status = loop {
        if stats.steps as u64 >= policy.step_limit {
            break Status::StepLimitExceeded;
        }
        stats.steps += 1;
        let level = prefix.len() - 1;
        next = match next {
            Next::Step1 => {
                stats.step1_visits += 1;
                let open = remaining.difference(&excluded[level]);
                match selector.pick(g, &open, &in_prefix) {
                    Pick::ScriptExhausted => break Status::ScriptExhausted,
                    Pick::NoCandidate => {
                        emit(TraceEvent::Exhausted { level, open });
                        Next::Step4
                    }
                    Pick::Node(u) => {
                        emit(TraceEvent::Select { level, open, node: u });
                        if stats.steps as u64 >= policy.step_limit {
                            break Status::StepLimitExceeded;
                        }
                        stats.steps += 1;
                        stats.connectivity_checks += 1;
                        if g.is_connected(&remaining.without(u)) {
                            emit(TraceEvent::Connected { node: u });
                            Next::Step3(u)
                        } else {
                            emit(TraceEvent::Disconnected { node: u });
                            match policy.on_disconnected {
                                OnDisconnected::GotoStep1 => Next::Step1,
                                OnDisconnected::GotoStep3 => Next::Step3(u),
                                OnDisconnected::GotoStep4 => Next::Step4,
                            }
                        }
                    }
                }
            }
            Next::Step3(u) => {
                prefix.push(u);
                in_prefix.insert(u);
                remaining.remove(u);
                let inherited = excluded[level].clone();
                excluded.push(inherited);
                found.push(in_prefix.clone());
                emit(TraceEvent::Record {
                    k: found.len(),
                    node: u,
                });
                Next::Step1
            }
            Next::Step4 => {
                // The original rule stops at i = 1; i = 0 would pop the source.
                if level <= 1 {
                    emit(TraceEvent::Stop);
                    break Status::Completed;
                }
                let v = prefix.pop().expect("level > 1");
                in_prefix.remove(v);
                remaining.insert(v);
                excluded.pop();
                excluded[level - 1].insert(v);
                stats.backtracks += 1;
                emit(TraceEvent::Backtrack { node: v, level: level - 1 });
                Next::Step1
            }
        };
    };

    EnumerationReport::finish(g, found, trace, stats, status)
}
