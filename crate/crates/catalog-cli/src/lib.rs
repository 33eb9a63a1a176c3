//! Catalog of named lattices and a verification suite over them.
//!
//! This crate ties the lattice machinery together behind a command line
//! tool.  It ships a small catalog of distinguished lattices (`L4`, `L3`,
//! `L6`, `L5`, `L6prime`, and the rank-22 even unimodular lattice `LK3`),
//! each with a golden primitive embedding into `LK3`, plus the order-n
//! action data attached to them.  `run_paper_suite` re-derives every
//! recorded claim from scratch with exact arithmetic and reports one row
//! per check.
//!
//! Three input grammars are supported, all line-oriented ASCII:
//! lattice files, isometry files, and the constructor expression language
//! (`U`, `V`, `E6`, `E8`, `LK3`, `A<n>`, `D<n>`, `<2d>`, twists `(n)`,
//! repeats `^m`, sums `+`).  Parsers report the offending line or byte.

pub mod config;
pub mod entries;
pub mod expr;
pub mod formats;
pub mod report;
pub mod suite;

use thiserror::Error;

/// Errors surfaced by the catalog layer.
///
/// Parse errors carry enough position information to point at the
/// offending line (files) or byte (expressions).  Math errors from the
/// underlying crates pass through unchanged.
#[derive(Debug, Error)]
pub enum Error {
    #[error("lattice error: {0}")]
    Core(#[from] lattice_core::Error),
    #[error("normal-form error: {0}")]
    NormalForms(#[from] normal_forms::Error),
    #[error("enumeration error: {0}")]
    Enumeration(#[from] enumeration_embedding::Error),
    #[error("isometry error: {0}")]
    Isometry(#[from] isometry_actions::Error),
    #[error("{path}:{line}: {msg}")]
    File {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("expression error at byte {pos}: {msg}")]
    Expr { pos: usize, msg: String },
    #[error("unknown check id `{0}`; run with no --only to see the full list")]
    UnknownCheckId(String),
    #[error("could not read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// A parse diagnostic before it is attached to a file path.
///
/// `line` is 1-based and refers to physical lines of the input text.
#[derive(Debug, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub msg: String,
}

impl LineError {
    pub fn new(line: usize, msg: impl Into<String>) -> Self {
        LineError {
            line,
            msg: msg.into(),
        }
    }

    /// Attach a file path, producing a reportable [`Error`].
    pub fn in_file(self, path: &str) -> Error {
        Error::File {
            path: path.to_string(),
            line: self.line,
            msg: self.msg,
        }
    }
}
