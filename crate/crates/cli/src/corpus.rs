//! Differential corpus runner: corrected enumerator versus the oracle over
//! seeded random graphs, one report line per graph.

use std::fs;
use std::path::PathBuf;

use mcv_core::oracle::{brute_force_mcvs, diff, generate_corpus, shrink_counterexample, CorpusSpec};
use mcv_core::{enumerate_mcvs, BPolicy, EnumerationOptions, Graph, SelectionOrder};
use rayon::prelude::*;

use crate::run::{Outcome, EXIT_MISMATCH, EXIT_OK};
use crate::CliError;

#[derive(Debug, Clone)]
pub struct CorpusRun {
    pub spec: CorpusSpec,
    pub b_policy: BPolicy,
    /// Random orders tried per graph, on top of ascending.
    pub random_orders: usize,
    /// Where minimized counterexamples are written.
    pub out_dir: Option<PathBuf>,
}

fn orders(seed: u64, random_orders: usize) -> Vec<SelectionOrder> {
    let mut orders = vec![SelectionOrder::Ascending];
    orders.extend((0..random_orders as u64).map(|k| SelectionOrder::Random(seed.rotate_left(13) ^ k)));
    orders
}

/// Whether any order disagrees with the oracle on `g` (pruned first if asked).
pub fn disagrees(g: &Graph, prune: bool, b_policy: BPolicy, orders: &[SelectionOrder]) -> bool {
    let pruned;
    let g = if prune {
        pruned = g.prune_irrelevant().pruned_graph;
        &pruned
    } else {
        g
    };
    let Ok(oracle) = brute_force_mcvs(g) else {
        return false;
    };
    orders.iter().any(|order| {
        let opts = EnumerationOptions::default()
            .with_order(order.clone())
            .with_b_policy(b_policy);
        !diff(&enumerate_mcvs(g, &opts), &oracle, g).agree
    })
}

pub fn run_corpus(run: &CorpusRun) -> Result<Outcome, CliError> {
    let corpus = generate_corpus(&run.spec)?;
    if let Some(dir) = &run.out_dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.display().to_string(),
            source,
        })?;
    }
    let lines: Vec<Result<(bool, String), CliError>> = corpus
        .par_iter()
        .enumerate()
        .map(|(index, c)| {
            let g = &c.graph;
            let orders = orders(c.seed, run.random_orders);
            let check = |h: &Graph| disagrees(h, run.spec.prune, run.b_policy, &orders);
            let mut line = format!(
                "{index} seed={} n={} m={}",
                c.seed,
                g.node_count(),
                g.edge_count()
            );
            if !check(g) {
                line.push_str(" agree");
                return Ok((true, line));
            }
            line.push_str(" mismatch");
            if let Some(dir) = &run.out_dir {
                let small = shrink_counterexample(g, check).expect("g fails the check");
                let path = dir.join(format!("counterexample-{}.edges", c.seed));
                fs::write(&path, small.to_edge_list()).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                line.push_str(&format!(" counterexample={}", path.display()));
            }
            Ok((false, line))
        })
        .collect();

    let mut stdout = String::new();
    let mut agreed = 0;
    for line in lines {
        let (ok, text) = line?;
        agreed += ok as usize;
        stdout.push_str(&text);
        stdout.push('\n');
    }
    stdout.push_str(&format!("summary: {agreed}/{} agree\n", corpus.len()));
    Ok(Outcome {
        exit_code: if agreed == corpus.len() { EXIT_OK } else { EXIT_MISMATCH },
        stdout,
        stderr: Vec::new(),
    })
}
