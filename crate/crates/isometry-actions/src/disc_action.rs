//! The induced action of an isometry on the discriminant group.
//!
//! An isometry `g` of `L` preserves the dual lattice `L^dual` (for
//! `y` dual and `x` in `L`, `(g y, x) = (y, g^{-1} x)` is integral), so it
//! descends to an automorphism of `disc(L) = L^dual / L`. The stable
//! orthogonal group consists of the isometries whose descent is the
//! identity; [`disc_action_trivial`] tests exactly that condition on the
//! invariant-factor generators.

use lattice_core::IntMat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::isometry::Isometry;
use crate::Error;

/// Matrix of the induced action on `disc(L)`, in the invariant-factor
/// generator basis: column `i` holds the generator coordinates of
/// `g(gen_i)`, with the row-`j` entry reduced modulo the order of
/// `gen_j`. Unimodular lattices yield the empty `0x0` matrix.
pub fn disc_action_matrix(g: &Isometry) -> Result<IntMat, Error> {
    if g.lattice().determinant().abs() == BigInt::one() {
        return Ok(IntMat::zeros(0, 0));
    }
    let (_, gens) = normal_forms::discriminant_data(g.lattice())?;
    let k = gens.gens().len();
    let n = g.lattice().rank();
    let cols: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let gen = &gens.gens()[i];
            // Rational image g * gen, coordinate by coordinate.
            let image: Vec<BigRational> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| BigRational::from(g.matrix()[(r, c)].clone()) * &gen[c])
                        .sum()
                })
                .collect();
            gens.coords_of(&image)
                .expect("isometries preserve the dual lattice")
        })
        .collect();
    Ok(IntMat::from_cols(&cols))
}

/// Whether `g` acts as the identity on `disc(L)`.
///
/// Unimodular lattices (of either parity) have trivial discriminant, so
/// every isometry passes; otherwise the lattice must be even for the
/// discriminant data to be defined, and the test asks that every
/// invariant-factor generator map to itself modulo `L`.
pub fn disc_action_trivial(g: &Isometry) -> Result<bool, Error> {
    let action = disc_action_matrix(g)?;
    let k = action.rows();
    Ok(action == IntMat::identity(k))
}
