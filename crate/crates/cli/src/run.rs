use std::fs;

use mcv_core::oracle::{brute_force_mcvs, diff, DiffReport};
use mcv_core::{
    enumerate_mcvs, run_yeh_original, Cut, EnumerationOptions, Graph, NodeSet, Status, TraceEvent, YehPolicy,
};
use rayon::prelude::*;

use crate::config::{Algorithm, OutputFormat, RunConfig};
use crate::edgelist::parse_edge_list;
use crate::{render, CliError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_STEP_LIMIT: i32 = 3;

pub const YEH_BANNER: &str =
    "NOTE: yeh-original is a known-incomplete algorithm; its output can miss MCVs or contain non-MCVs";

/// Result of one `run` invocation: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: Vec<String>,
}

/// One source/sink analysis.
#[derive(Debug, Clone)]
pub struct Section {
    /// The graph the algorithm ran on, after pruning if enabled.
    pub graph: Graph,
    pub pruned_nodes: Vec<String>,
    pub mcvs: Vec<NodeSet>,
    pub cuts: Vec<Cut>,
    pub stats: Vec<(&'static str, u64)>,
    pub status: Status,
    pub trace: Option<Vec<TraceEvent>>,
    pub diff: Option<DiffReport>,
}

impl Section {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::ScriptExhausted => EXIT_INPUT,
            Status::StepLimitExceeded => EXIT_STEP_LIMIT,
            Status::Completed if self.diff.as_ref().is_some_and(|d| !d.agree) => EXIT_MISMATCH,
            Status::Completed => EXIT_OK,
        }
    }
}

pub fn load_graph(config: &RunConfig) -> Result<Graph, CliError> {
    let path = config.input_path.display().to_string();
    let text = fs::read_to_string(&config.input_path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let edges = parse_edge_list(&text).map_err(|source| CliError::Parse {
        path: path.clone(),
        source,
    })?;
    let known = |label: &str| edges.iter().any(|(a, b)| a == label || b == label);
    let terminal = |flag: &Option<String>, default: &str, name: &str| -> Result<String, CliError> {
        match flag {
            Some(label) => Ok(label.clone()),
            None if known(default) => Ok(default.to_string()),
            None => Err(CliError::Usage(format!(
                "{path}: no node labelled `{default}`; pass --{name}"
            ))),
        }
    };
    let source = terminal(&config.source, "s", "source")?;
    let sink = if config.all_sinks {
        // any other node works as a placeholder; sinks are iterated later
        match &config.sink {
            Some(label) => label.clone(),
            None => edges
                .iter()
                .flat_map(|(a, b)| [a, b])
                .find(|l| **l != source)
                .cloned()
                .unwrap_or_else(|| "t".to_string()),
        }
    } else {
        terminal(&config.sink, "t", "sink")?
    };
    Graph::from_labeled_edges(edges, &source, &sink).map_err(|source| CliError::Graph { path, source })
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let mut stderr = config.validate()?;
    let graph = load_graph(config)?;
    if graph.merged_parallel_edges() > 0 {
        stderr.push(format!(
            "warning: merged {} parallel edge(s)",
            graph.merged_parallel_edges()
        ));
    }

    let sinks: Vec<usize> = if config.all_sinks {
        (0..graph.node_count()).filter(|&v| v != graph.source()).collect()
    } else {
        vec![graph.sink()]
    };
    let sections: Vec<Result<(Section, Vec<String>), CliError>> = sinks
        .par_iter()
        .map(|&sink| {
            let g = graph
                .with_terminals(graph.source(), sink)
                .map_err(|source| CliError::Graph {
                    path: config.input_path.display().to_string(),
                    source,
                })?;
            analyse(config, &g)
        })
        .collect();
    let mut done = Vec::with_capacity(sections.len());
    for s in sections {
        let (section, warnings) = s?;
        stderr.extend(warnings);
        done.push(section);
    }

    if config.algorithm == Algorithm::YehOriginal && config.output_format == OutputFormat::Json {
        stderr.insert(0, YEH_BANNER.to_string());
    }
    let stdout = match config.output_format {
        OutputFormat::Text => render::text(config, &done),
        OutputFormat::Json => render::json(config, &done),
    };
    let exit_code = combine_exit_codes(done.iter().map(Section::exit_code));
    Ok(Outcome {
        exit_code,
        stdout,
        stderr,
    })
}

/// Input errors win over step-limit exhaustion, which wins over mismatches.
fn combine_exit_codes(codes: impl Iterator<Item = i32>) -> i32 {
    let rank = |c: i32| match c {
        EXIT_INPUT => 3,
        EXIT_STEP_LIMIT => 2,
        EXIT_MISMATCH => 1,
        _ => 0,
    };
    codes.max_by_key(|&c| rank(c)).unwrap_or(EXIT_OK)
}

fn analyse(config: &RunConfig, full: &Graph) -> Result<(Section, Vec<String>), CliError> {
    let mut warnings = Vec::new();
    let (g, pruned_nodes) = if config.prune {
        let report = full.prune_irrelevant();
        let removed: Vec<String> = report.removed_nodes.iter().map(|v| full.name(v).to_string()).collect();
        if !removed.is_empty() {
            warnings.push(format!(
                "warning: sink {}: pruned {} node(s) on no simple s-t path: {}",
                full.name(full.sink()),
                removed.len(),
                removed.join(", ")
            ));
        }
        (report.pruned_graph, removed)
    } else {
        (full.clone(), Vec::new())
    };

    let opts = EnumerationOptions {
        selection_order: config.order.resolve(&g)?,
        b_policy: config.b_policy.into(),
        record_trace: config.trace,
    };
    let oracle = if config.compare_oracle || config.algorithm == Algorithm::Oracle {
        Some(brute_force_mcvs(&g)?)
    } else {
        None
    };

    let (mcvs, cuts, stats, status, trace, report) = match config.algorithm {
        Algorithm::Oracle => {
            let oracle = oracle.as_ref().expect("computed above");
            let mcvs: Vec<NodeSet> = oracle.mcvs.iter().cloned().collect();
            let cuts = mcvs.iter().map(|u| g.cut_edges(u).expect("proper set")).collect();
            let stats = vec![("subsets_checked", oracle.subsets_checked)];
            (mcvs, cuts, stats, Status::Completed, None, None)
        }
        Algorithm::Corrected | Algorithm::YehOriginal => {
            let report = if config.algorithm == Algorithm::Corrected {
                enumerate_mcvs(&g, &opts)
            } else {
                let on_disconnected = config.yeh_policy.expect("validated").into();
                let mut policy = YehPolicy::new(on_disconnected, g.node_count());
                if let Some(limit) = config.step_limit {
                    policy = policy.with_step_limit(limit);
                }
                run_yeh_original(&g, &policy, &opts)
            };
            let s = report.stats;
            let stats = vec![
                ("backtracks", s.backtracks as u64),
                ("connectivity_checks", s.connectivity_checks as u64),
                ("step1_visits", s.step1_visits as u64),
                ("steps", s.steps as u64),
            ];
            let (mcvs, cuts, status, trace) =
                (report.mcvs.clone(), report.cuts.clone(), report.status, report.trace.clone());
            (mcvs, cuts, stats, status, trace, Some(report))
        }
    };

    let diff = match (&oracle, config.compare_oracle) {
        (Some(oracle), true) => Some(match &report {
            Some(report) => diff(report, oracle, &g),
            None => DiffReport {
                missing: Default::default(),
                spurious: Default::default(),
                non_mcv: Default::default(),
                agree: true,
            },
        }),
        _ => None,
    };

    Ok((
        Section {
            graph: g,
            pruned_nodes,
            mcvs,
            cuts,
            stats,
            status,
            trace,
            diff,
        },
        warnings,
    ))
}
