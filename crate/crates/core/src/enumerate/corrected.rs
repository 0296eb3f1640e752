use crate::graph::{Graph, NodeSet};

use super::{BPolicy, EnumerationOptions, EnumerationReport, Pick, Selector, Stats, Status, TraceEvent};

/// Enumerates the MCVs of `g` with the corrected backtracking procedure.
///
/// State: `S` is the current prefix (an MCV), `T = V - S`, `N_i` the nodes
/// already explored as extensions at level `i` (inherited on descent), and
/// `B` the candidates whose removal was found to disconnect `T`.
///
/// * Step 0 records `{s}`.
/// * Step 1 picks a node of `T - (B ∪ N_i)` adjacent to `S`, or goes to Step 4.
/// * Step 2 tests `G(T - {v})`: if connected, clear `B` and go to Step 3,
///   otherwise add `v` to `B` and return to Step 1.
/// * Step 3 moves `v` onto `S`, records `S`, sets `N_{i+1} = N_i`.
/// * Step 4 stops at `i = 0`; otherwise pops `u` off `S`, adds it to
///   `N_{i-1}` and returns it to `T`.
///
/// The result is complete on graphs whose nodes all lie on a simple s-t
/// path (see [`Graph::prune_irrelevant`]). On other graphs `{s}` may be
/// recorded without being an MCV and MCVs can be missed.
pub fn enumerate_mcvs(g: &Graph, opts: &EnumerationOptions) -> EnumerationReport {
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
    let mut blocked = NodeSet::empty(n);
    let mut saved_blocked: Vec<NodeSet> = Vec::new();
    let mut found = vec![in_prefix.clone()];
    emit(TraceEvent::Start { source });

    let status = loop {
        stats.steps += 1;
        stats.step1_visits += 1;
        let level = prefix.len() - 1;
        let open = remaining.difference(&blocked.union(&excluded[level]));
        let v = match selector.pick(g, &open, &in_prefix) {
            Pick::Node(v) => {
                emit(TraceEvent::Select { level, open, node: v });
                v
            }
            Pick::ScriptExhausted => break Status::ScriptExhausted,
            Pick::NoCandidate => {
                emit(TraceEvent::Exhausted { level, open });
                stats.steps += 1;
                if level == 0 {
                    emit(TraceEvent::Stop);
                    break Status::Completed;
                }
                let u = prefix.pop().expect("level > 0");
                in_prefix.remove(u);
                remaining.insert(u);
                excluded.pop();
                excluded[level - 1].insert(u);
                if opts.b_policy == BPolicy::Scoped {
                    blocked = saved_blocked.pop().expect("one saved B per level");
                }
                stats.backtracks += 1;
                emit(TraceEvent::Backtrack { node: u, level: level - 1 });
                continue;
            }
        };

        stats.steps += 1;
        stats.connectivity_checks += 1;
        if !g.is_connected(&remaining.without(v)) {
            blocked.insert(v);
            emit(TraceEvent::Disconnected { node: v });
            continue;
        }
        emit(TraceEvent::Connected { node: v });
        match opts.b_policy {
            BPolicy::Scoped => saved_blocked.push(std::mem::replace(&mut blocked, NodeSet::empty(n))),
            BPolicy::Persistent => blocked.clear(),
        }

        stats.steps += 1;
        prefix.push(v);
        in_prefix.insert(v);
        remaining.remove(v);
        let inherited = excluded[level].clone();
        excluded.push(inherited);
        found.push(in_prefix.clone());
        emit(TraceEvent::Record {
            k: found.len() - 1,
            node: v,
        });
    };

    EnumerationReport::finish(g, found, trace, stats, status)
}
