//! Exact enumeration in integral lattices and primitive-embedding machinery.
//!
//! Everything here runs over arbitrary-precision integers and rationals; no
//! floating point enters any decision.  The crate provides four groups of
//! operations:
//!
//! * **Basis reduction and short vectors.**  [`lll_reduce`] is a textbook LLL
//!   with exact rational Gram-Schmidt data and reduction parameter 3/4, valid
//!   for positive definite lattices.  [`short_vectors`] enumerates every
//!   vector of norm at most a given bound (one representative per antipodal
//!   pair) by Fincke-Pohst walking on the reduced basis, again with exact
//!   interval tests.
//! * **Realized degrees.**  For an even lattice `L`, a primitive vector `v`
//!   with `(v, v) > 0` realizes the degree `(v, v) / 2`.  [`realized_degrees`]
//!   collects the degrees realized inside a coefficient box, and [`d_value`]
//!   reports the gcd of the realized degrees together with a divisibility
//!   certificate: the content `m = gcd({g_ii / 2} and {g_ij, i < j})` divides
//!   every degree, so once the running gcd reaches `m` no further vector can
//!   change it and the value is exact for the full lattice, not merely for
//!   the box searched.
//! * **Primitive embeddings.**  [`verify_primitive_embedding`] checks Gram
//!   compatibility and torsion-freeness of the cokernel (all Smith invariant
//!   factors equal to 1).  [`find_primitive_embedding`] searches for an
//!   embedding inside a coefficient box; a `None` result means none was found
//!   within the box and is never a nonexistence claim.
//!   [`orthogonal_complement`] returns the saturated complement with its Gram
//!   matrix, and [`invariants_match`] compares rank, signature, parity, and
//!   discriminant forms.
//! * **Definite isometry testing.**  [`isometric_definite`] decides isometry
//!   of definite lattices of rank at most [`DEFAULT_DEFINITE_RANK_CAP`] by a
//!   complete backtracking search over equal-norm short vectors, so a `None`
//!   answer there is a proof of nonexistence.

pub mod definite;
pub mod degrees;
pub mod embed;
pub mod lll;
pub mod shortvec;

pub use definite::{isometric_definite, isometric_definite_with_cap, DEFAULT_DEFINITE_RANK_CAP};
pub use degrees::{
    d_value, degree_realized, realized_degrees, realized_degrees_with_budget, DValue, SearchBox,
    DEFAULT_NODE_BUDGET,
};
pub use embed::{
    find_primitive_embedding, invariants_match, orthogonal_complement,
    verify_primitive_embedding, EmbeddingMap,
};
pub use lll::lll_reduce;
pub use shortvec::{short_vectors, ShortVector};

/// Errors reported by enumeration and embedding operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The operation is defined for positive definite lattices only.
    #[error("operation requires a positive definite lattice")]
    NotPositiveDefinite,
    /// Both inputs must be definite (positive or negative) for this search.
    #[error("operation requires definite lattices")]
    NotDefinite,
    /// The realized-degree machinery is defined for even lattices.
    #[error("realized degrees require an even lattice")]
    OddLattice,
    /// Backtracking over definite lattices is capped to keep searches exact
    /// and terminating at desk scale.
    #[error("rank {rank} exceeds the definite-search cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    /// No primitive vector of positive norm exists within the search box.
    #[error("no realized degrees within the search box")]
    EmptyDegreeSet,
    /// An embedding matrix has the wrong shape for its source and target.
    #[error("embedding matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    /// The embedding fed to a complement computation is not primitive.
    #[error("embedding is not primitive")]
    NotPrimitive,
    /// An enumeration ran out of its node budget before completing; the
    /// result so far is discarded rather than silently truncated.
    #[error("enumeration exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },
    /// Error bubbled up from lattice construction.
    #[error(transparent)]
    Lattice(#[from] lattice_core::Error),
    /// Error bubbled up from discriminant-form machinery.
    #[error(transparent)]
    NormalForm(#[from] normal_forms::Error),
}
