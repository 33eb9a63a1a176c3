//! Integer normal forms and discriminant invariants.
//!
//! The workhorse is the Smith normal form `left * M * right = diag(d_1..)`
//! with `d_1 | d_2 | ...`, computed with a deterministic pivot rule and
//! with the inverses of both transforms tracked alongside. On top of it:
//!
//! - integer kernels and saturations of column spans (always primitive
//!   sublattices);
//! - exact solution of `M x = b` over `Z`;
//! - the discriminant group `disc(L) = L^dual / L` of a nondegenerate
//!   lattice, with its invariant factors;
//! - the discriminant quadratic form `q: disc(L) -> Q/2Z` and bilinear form
//!   `b: disc(L) x disc(L) -> Q/Z` of an even lattice;
//! - equivalence testing of finite quadratic forms by backtracking over
//!   generator images.

pub mod disc;
pub mod equiv;
pub mod snf;

pub use disc::{
    discriminant_data, discriminant_form, discriminant_group, DiscGenerators, DiscriminantForm,
    DiscriminantGroup,
};
pub use equiv::{disc_forms_equivalent, disc_forms_equivalent_with_bound, DEFAULT_EQUIV_BOUND};
pub use snf::{
    integer_kernel, same_column_span, saturate_columns, smith_normal_form, solve_integer,
    SNFDecomposition,
};

use num_bigint::BigInt;

/// Errors from discriminant-form construction and equivalence search.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The discriminant quadratic form needs `(v,v)` even; odd lattices
    /// only carry the bilinear form.
    #[error("discriminant form requires an even lattice")]
    OddLattice,
    /// Equivalence search refuses groups above the configured order bound.
    #[error("discriminant group order {order} exceeds the equivalence-search bound {bound}")]
    BoundExceeded { order: BigInt, bound: u64 },
}
