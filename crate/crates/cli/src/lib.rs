//! Library side of the `mcv` command: edge-list parsing, run configuration,
//! the analysis pipeline and report rendering.

pub mod config;
pub mod corpus;
pub mod edgelist;
pub mod render;
pub mod run;

use mcv_core::oracle::{CorpusError, OracleError};
use mcv_core::GraphError;
use thiserror::Error;

pub use config::{Algorithm, BPolicyArg, OrderSpec, OutputFormat, RunConfig, YehPolicyArg};
pub use edgelist::{parse_edge_list, ParseError};
pub use run::{run, Outcome};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("{path}: {source}")]
    Graph {
        path: String,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("{0}")]
    Usage(String),
}
