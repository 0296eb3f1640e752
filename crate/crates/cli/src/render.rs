//! Text and canonical JSON reports.
//!
//! JSON objects are built from `serde_json::Value`, whose maps keep keys
//! sorted, so the bytes are stable: two identical runs print identical
//! output, and parsing then re-serializing the output reproduces it.

use std::fmt::Write as _;

use mcv_core::{Cut, Graph, NodeSet, TraceEvent};
use serde_json::{json, Map, Value};

use crate::config::{Algorithm, RunConfig};
use crate::run::{Section, YEH_BANNER};

fn sorted_labels(g: &Graph, set: &NodeSet) -> Vec<String> {
    let mut labels: Vec<String> = set.iter().map(|v| g.name(v).to_string()).collect();
    labels.sort();
    labels
}

fn sorted_edges<'a>(g: &Graph, edges: impl Iterator<Item = &'a mcv_core::Edge>) -> Vec<[String; 2]> {
    let mut out: Vec<[String; 2]> = edges
        .map(|e| {
            let mut pair = [g.name(e.lo()).to_string(), g.name(e.hi()).to_string()];
            pair.sort();
            pair
        })
        .collect();
    out.sort();
    out
}

fn text_cut(g: &Graph, cut: &Cut) -> String {
    let edges: Vec<String> = cut
        .edges()
        .iter()
        .map(|e| format!("{}-{}", g.name(e.lo()), g.name(e.hi())))
        .collect();
    format!("{{{}}}", edges.join(", "))
}

fn options_json(config: &RunConfig) -> Value {
    let mut options = Map::new();
    options.insert("order".into(), json!(config.order.to_string()));
    options.insert("prune".into(), json!(config.prune));
    match config.algorithm {
        Algorithm::Corrected => {
            options.insert("b_policy".into(), json!(config.b_policy.as_str()));
        }
        Algorithm::YehOriginal => {
            let policy: mcv_core::OnDisconnected = config.yeh_policy.expect("validated").into();
            options.insert("yeh_policy".into(), json!(policy.as_str()));
            if let Some(limit) = config.step_limit {
                options.insert("step_limit".into(), json!(limit));
            }
        }
        Algorithm::Oracle => {}
    }
    Value::Object(options)
}

fn trace_json(g: &Graph, event: &TraceEvent) -> Value {
    let mut obj = Map::new();
    obj.insert("step".into(), json!(event.kind().as_str()));
    match event {
        TraceEvent::Start { source } => {
            obj.insert("node".into(), json!(g.name(*source)));
        }
        TraceEvent::Select { level, open, node } => {
            obj.insert("level".into(), json!(level));
            obj.insert("open".into(), json!(sorted_labels(g, open)));
            obj.insert("node".into(), json!(g.name(*node)));
        }
        TraceEvent::Exhausted { level, open } => {
            obj.insert("level".into(), json!(level));
            obj.insert("open".into(), json!(sorted_labels(g, open)));
        }
        TraceEvent::Connected { node } | TraceEvent::Disconnected { node } => {
            obj.insert("node".into(), json!(g.name(*node)));
        }
        TraceEvent::Record { k, node } => {
            obj.insert("k".into(), json!(k));
            obj.insert("node".into(), json!(g.name(*node)));
        }
        TraceEvent::Backtrack { node, level } => {
            obj.insert("level".into(), json!(level));
            obj.insert("node".into(), json!(g.name(*node)));
        }
        TraceEvent::Stop => {}
    }
    Value::Object(obj)
}

fn trace_text(g: &Graph, event: &TraceEvent) -> String {
    let kind = event.kind().as_str();
    match event {
        TraceEvent::Start { source } => format!("{kind} S={{{}}}", g.name(*source)),
        TraceEvent::Select { level, open, node } => {
            format!("{kind} i={level} T-(B+N)={} -> {}", g.format_set(open), g.name(*node))
        }
        TraceEvent::Exhausted { level, open } => format!("{kind} i={level} T-(B+N)={}", g.format_set(open)),
        TraceEvent::Connected { node } | TraceEvent::Disconnected { node } => {
            format!("{kind} {}", g.name(*node))
        }
        TraceEvent::Record { k, node } => format!("{kind} U{k} +{}", g.name(*node)),
        TraceEvent::Backtrack { node, level } => format!("{kind} -{} i={level}", g.name(*node)),
        TraceEvent::Stop => kind.to_string(),
    }
}

pub fn section_json(config: &RunConfig, section: &Section) -> Value {
    let g = &section.graph;
    let mut pruned = section.pruned_nodes.clone();
    pruned.sort();
    let mut root = Map::new();
    root.insert(
        "graph".into(),
        json!({
            "nodes": sorted_labels(g, &g.all_nodes()),
            "edges": sorted_edges(g, g.edges().iter()),
            "source": g.name(g.source()),
            "sink": g.name(g.sink()),
            "pruned_nodes": pruned,
        }),
    );
    root.insert(
        "algorithm".into(),
        json!({ "name": config.algorithm.as_str(), "options": options_json(config) }),
    );
    root.insert(
        "mcvs".into(),
        Value::Array(section.mcvs.iter().map(|u| json!(sorted_labels(g, u))).collect()),
    );
    root.insert(
        "cuts".into(),
        Value::Array(
            section
                .cuts
                .iter()
                .map(|c| json!(sorted_edges(g, c.edges().iter())))
                .collect(),
        ),
    );
    root.insert(
        "stats".into(),
        Value::Object(section.stats.iter().map(|(k, v)| (k.to_string(), json!(v))).collect()),
    );
    root.insert("status".into(), json!(section.status.as_str()));
    if let Some(trace) = &section.trace {
        root.insert(
            "trace".into(),
            Value::Array(trace.iter().map(|e| trace_json(g, e)).collect()),
        );
    }
    if let Some(d) = &section.diff {
        let sets = |s: &std::collections::BTreeSet<NodeSet>| -> Value {
            let mut v: Vec<Vec<String>> = s.iter().map(|u| sorted_labels(g, u)).collect();
            v.sort();
            json!(v)
        };
        root.insert(
            "diff".into(),
            json!({
                "agree": d.agree,
                "missing": sets(&d.missing),
                "spurious": sets(&d.spurious),
                "non_mcv": sets(&d.non_mcv),
            }),
        );
    }
    Value::Object(root)
}

pub fn json(config: &RunConfig, sections: &[Section]) -> String {
    let value = if config.all_sinks {
        Value::Array(sections.iter().map(|s| section_json(config, s)).collect())
    } else {
        section_json(config, &sections[0])
    };
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

pub fn text(config: &RunConfig, sections: &[Section]) -> String {
    let mut out = String::new();
    if config.algorithm == Algorithm::YehOriginal {
        writeln!(out, "{YEH_BANNER}").unwrap();
    }
    for section in sections {
        let g = &section.graph;
        if config.all_sinks {
            writeln!(out, "== sink {} ==", g.name(g.sink())).unwrap();
        }
        writeln!(
            out,
            "graph: {} nodes, {} edges, source {}, sink {}",
            g.node_count(),
            g.edge_count(),
            g.name(g.source()),
            g.name(g.sink())
        )
        .unwrap();
        if !section.pruned_nodes.is_empty() {
            writeln!(out, "pruned: {}", section.pruned_nodes.join(", ")).unwrap();
        }
        let options: Vec<String> = options_json(config)
            .as_object()
            .expect("object")
            .iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().map(String::from).unwrap_or_else(|| v.to_string())))
            .collect();
        writeln!(out, "algorithm: {} ({})", config.algorithm.as_str(), options.join(", ")).unwrap();
        writeln!(out, "status: {}", section.status.as_str()).unwrap();
        writeln!(out, "mcvs: {}", section.mcvs.len()).unwrap();
        for (k, u) in section.mcvs.iter().enumerate() {
            writeln!(out, "  {k}: {}", g.format_set(u)).unwrap();
        }
        if config.emit_cuts {
            writeln!(out, "cuts: {}", section.cuts.len()).unwrap();
            for (k, c) in section.cuts.iter().enumerate() {
                writeln!(out, "  {k}: {}", text_cut(g, c)).unwrap();
            }
        }
        if let Some(trace) = &section.trace {
            writeln!(out, "trace: {} events", trace.len()).unwrap();
            for e in trace {
                writeln!(out, "  {}", trace_text(g, e)).unwrap();
            }
        }
        let stats: Vec<String> = section.stats.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "stats: {}", stats.join(", ")).unwrap();
        if let Some(d) = &section.diff {
            if d.agree {
                writeln!(out, "oracle: agree").unwrap();
            } else {
                writeln!(out, "oracle: MISMATCH").unwrap();
                for u in &d.missing {
                    writeln!(out, "  missing {}", g.format_set(u)).unwrap();
                }
                for u in &d.spurious {
                    let tag = if d.non_mcv.contains(u) { " (not an MCV)" } else { "" };
                    writeln!(out, "  spurious {}{tag}", g.format_set(u)).unwrap();
                }
            }
        }
    }
    out
}
