//! File formats and command-line front end for `nomfix-core`.

pub mod cli;
pub mod format;
pub mod tree;

pub use cli::run;
pub use tree::{parse_tree, print_tree};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Model(#[from] nomfix_core::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
