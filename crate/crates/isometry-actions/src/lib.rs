//! Finite-order isometries of integral lattices and the quantities the
//! catalog derives from them.
//!
//! An isometry of a lattice `L` with Gram matrix `G` is an integer matrix
//! `g` with `g^T G g = G`; nondegeneracy of `G` then forces `det g = +-1`,
//! and the inverse `g^{-1} = G^{-1} g^T G` is again integral. This crate
//! provides:
//!
//! * construction and verification ([`verify_isometry`], [`Isometry`]),
//!   orders ([`order_of`]), reflections in norm `+-2` vectors
//!   ([`reflection`]) and Coxeter elements of ADE root bases
//!   ([`coxeter_element`]);
//! * the cyclotomic eigenstructure of a finite-order isometry: the
//!   characteristic polynomial of such a `g` factors over `Z` as a product
//!   `prod_k Phi_k(x)^{m_k}` of cyclotomic polynomials with `k` ranging
//!   over divisors of the order, and [`cyclotomic_profile`] computes the
//!   multiplicities `m_k` exactly ([`CyclotomicProfile`]);
//! * the fixed sublattice `ker(g - 1)`, saturated so the quotient is
//!   torsion-free ([`fixed_sublattice`]);
//! * the induced action on the discriminant group `L^dual / L` and the
//!   triviality test that carves out the stable orthogonal group
//!   ([`disc_action_trivial`], [`disc_action_matrix`]);
//! * dimension arithmetic for the period domains attached to an order-`n`
//!   action: a complex ball of dimension `m_n - 1` for `n >= 3`, a type IV
//!   domain of dimension `rank - 2` for `n = 2` ([`ball_dimension`],
//!   [`MuActionDatum`]);
//! * a complete backtracking search for an isometry with a prescribed
//!   profile on a small definite lattice ([`find_isometry_with_profile`]);
//! * exact brute-force orders of the orthogonal group of a discriminant
//!   form on an elementary abelian `p`-group
//!   ([`orthogonal_group_order_mod_p`]).
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod ball;
pub mod disc_action;
pub mod finite_orth;
pub mod isometry;
mod poly;
pub mod profile;
pub mod profile_search;

pub use ball::{ball_dimension, MuActionDatum};
pub use disc_action::{disc_action_matrix, disc_action_trivial};
pub use finite_orth::{orthogonal_group_order_mod_p, GROUP_RANK_CAP, SUPPORTED_PRIMES};
pub use isometry::{
    coxeter_element, order_of, reflection, unimodular_inverse, verify_isometry, Isometry,
    DEFAULT_ORDER_CUTOFF,
};
pub use profile::{cyclotomic_profile, fixed_sublattice, CyclotomicProfile, FixedSublattice};
pub use profile_search::{find_isometry_with_profile, find_isometry_with_profile_with_cap};

use num_bigint::BigInt;

/// Errors reported by isometry constructions, profile computations, and
/// the brute-force searches.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The candidate matrix does not act on the lattice: wrong shape.
    #[error("matrix is {rows}x{cols} but the lattice has rank {rank}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        rank: usize,
    },
    /// The candidate matrix moves the Gram form.
    #[error("matrix does not preserve the Gram form (g^T G g != G)")]
    GramNotPreserved,
    /// The candidate matrix is not invertible over the integers.
    #[error("matrix has determinant {det}; an isometry needs determinant +-1")]
    NotUnimodular { det: BigInt },
    /// Composition or comparison of isometries living on different lattices.
    #[error("isometries live on different lattices (Gram matrices differ)")]
    LatticeMismatch,
    /// Reflection vector of unusable norm.
    #[error("reflection vector has norm {norm}; only norms 2 and -2 give integral reflections on an even lattice")]
    BadReflectionNorm { norm: BigInt },
    /// Reflections are provided on even lattices only.
    #[error("lattice is odd; reflections are provided on even lattices")]
    OddLattice,
    /// `coxeter_element` on something other than an ADE root basis.
    #[error("lattice is not a definite ADE root basis (diagonal +-2, off-diagonal 0 or -+1)")]
    NotRootBasis,
    /// Order search gave up; the element may have infinite order.
    #[error("no power up to {cutoff} is the identity; order exceeds the cutoff")]
    OrderExceedsCutoff { cutoff: u64 },
    /// A profile with no nonzero multiplicities.
    #[error("cyclotomic profile has no nonzero multiplicities")]
    EmptyProfile,
    /// Mu-action data must have order at least 2.
    #[error("mu-action order must be at least 2, got {n}")]
    OrderTooSmall { n: u64 },
    /// Mu-action data whose profile misses the claimed order.
    #[error("profile has m_{n} = 0, so the action does not have order {n} there")]
    ZeroPrimitivePart { n: u64 },
    /// Mu-action data whose invariant rank disagrees with the profile.
    #[error("profile has m_1 = {m1} but the invariant lattice has rank {invariant_rank}")]
    InvariantRankMismatch { m1: usize, invariant_rank: usize },
    /// Mu-action data with an eigenvalue that an order-n action cannot have.
    #[error("profile key {k} does not divide the action order {n}")]
    KeyNotDivisor { k: u64, n: u64 },
    /// An order-2 datum too small to carry a type IV domain.
    #[error("orthogonal part has rank {rank_perp} < 2; no type IV domain is attached")]
    DomainTooSmall { rank_perp: usize },
    /// Profile search needs a definite lattice.
    #[error("profile search needs a definite lattice")]
    NotDefinite,
    /// Profile search rank cap.
    #[error("rank {rank} exceeds the search cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    /// Profile search scale guard: candidate enumeration works on
    /// 64-bit norms.
    #[error("Gram diagonal entries exceed the 64-bit search scale")]
    EntriesTooLarge,
    /// Brute-force group order: unsupported prime.
    #[error("orthogonal group counting supports p in {{2, 3, 5}}, got {p}")]
    UnsupportedPrime { p: u64 },
    /// Brute-force group order: group is not elementary abelian of the
    /// requested prime.
    #[error("discriminant group is not elementary abelian of exponent {p}")]
    NotElementary { p: u64 },
    /// Brute-force group order: too many generators.
    #[error("discriminant group needs {k} generators, above the brute-force cap {cap}")]
    GroupRankCapExceeded { k: usize, cap: usize },
    #[error(transparent)]
    Lattice(#[from] lattice_core::Error),
    #[error(transparent)]
    NormalForm(#[from] normal_forms::Error),
    #[error(transparent)]
    Enumeration(#[from] enumeration_embedding::Error),
}
