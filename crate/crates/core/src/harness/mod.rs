//! Exact verification of the walk-determinant identities over graph corpora.

use thiserror::Error;

use crate::graph::GraphError;
use crate::linalg::LinalgError;
use crate::poly::PolyError;
use crate::spectral::SpectralError;

pub mod checks;
pub mod corpus;
pub mod report;
pub mod sweep;

pub use checks::*;
pub use corpus::{
    default_corpus, named_corpus, named_graph, random_corpus, random_graph, CorpusEntry, GraphCorpus, Provenance,
    NAMED_GRAPHS,
};
pub use report::{read_jsonl, tally, write_csv, write_jsonl, IdentityId, Inputs, Sign, Verdict, VerificationReport};
pub use sweep::{run_sweep, SweepConfig};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("i/o: {0}")]
    Io(String),
}
