//! Exact integral lattices.
//!
//! A lattice is a free `Z`-module of finite rank equipped with a
//! nondegenerate symmetric bilinear pairing, represented concretely by its
//! Gram matrix. This crate provides:
//!
//! - [`IntMat`], an arbitrary-precision integer matrix with exact
//!   determinant (Bareiss) and rank (fraction-free elimination);
//! - [`Lattice`], the validated Gram-matrix wrapper, with twists `L(n)`,
//!   direct sums, parity, and exact signature via rational congruence
//!   diagonalization;
//! - [`make_catalog`], the standard lattices: the hyperbolic plane `U`, the
//!   rank-2 lattice `V`, the ADE root lattices, `<1>` and `<2d>`, and the
//!   K3 lattice `U^3 + E8(-1)^2`;
//! - [`scramble::random_unimodular`], a deterministic source of unimodular
//!   basis changes for tests and search harnesses.
//!
//! Everything is immutable after construction and all operations are pure
//! functions, so values can be shared freely across threads.

pub mod catalog;
pub mod lattice;
pub mod matrix;
pub mod scramble;

pub use catalog::{make_catalog, CatalogId};
pub use lattice::{direct_sum, signature_of, Lattice, Signature};
pub use matrix::IntMat;

/// Errors arising from lattice construction and the catalog.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Gram matrix is not square.
    #[error("gram matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    /// Gram matrix differs from its transpose.
    #[error("gram matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    /// Zero determinant.
    #[error("gram matrix is degenerate (determinant 0)")]
    Degenerate,
    /// Rank-0 lattices are excluded; callers that can produce them use an
    /// explicit marker instead.
    #[error("lattice must have positive rank")]
    ZeroRank,
    /// Catalog name not recognized.
    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),
    /// Catalog parameter below the family's minimum.
    #[error("parameter {param} out of range for catalog family {name} (minimum {min})")]
    ParamOutOfRange {
        name: &'static str,
        param: i64,
        min: i64,
    },
    /// Parameter passed to a lattice that takes none.
    #[error("catalog lattice {0} takes no parameter")]
    UnexpectedParam(&'static str),
    /// Parametric family invoked without its parameter.
    #[error("catalog family {0} requires a parameter")]
    MissingParam(&'static str),
    /// `L(0)` is not a lattice.
    #[error("twist by 0 is degenerate")]
    ZeroTwist,
    /// Direct sum needs at least one summand.
    #[error("direct sum of an empty list")]
    EmptySum,
}
