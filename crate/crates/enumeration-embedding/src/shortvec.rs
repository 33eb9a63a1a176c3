//! Complete short-vector enumeration for positive definite lattices.
//!
//! After LLL reduction the quadratic form decomposes against its exact
//! Gram-Schmidt data as
//!
//! ```text
//! (x, x) = sum_i c_i (x_i + sum_{j>i} mu_ji x_j)^2
//! ```
//!
//! with all `c_i > 0`, so coordinates can be fixed from the last to the
//! first while the partial sum only grows.  Each level admits an interval of
//! feasible integers centered at the rational point `-u_i`; the walk starts
//! at the nearest integer and extends in both directions while the exact
//! inequality holds, which visits every feasible integer because the
//! feasible set is an interval containing the nearest integer to its center
//! whenever it is nonempty.

use lattice_core::Lattice;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lll::{gso_from_gram, lll_reduce, round_rational};
use crate::Error;

/// A lattice vector in original basis coordinates together with its norm.
///
/// Exactly one representative of each pair `{v, -v}` is reported: the one
/// whose first nonzero coordinate is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVector {
    /// Coefficients on the basis the lattice was constructed with.
    pub coords: Vec<BigInt>,
    /// Value of the quadratic form at the vector.
    pub norm: BigInt,
}

/// Flips the sign so the first nonzero coordinate is positive.
pub(crate) fn canonical_sign(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut v {
                *x = -x.clone();
            }
        }
    }
    v
}

/// Enumerates every nonzero vector of norm at most `bound`, one
/// representative per antipodal pair, sorted by norm and then
/// lexicographically by coordinates.
///
/// Errors with [`Error::NotPositiveDefinite`] unless the lattice is positive
/// definite.  The enumeration itself is complete: for a positive definite
/// form the feasible set is finite and the walk visits all of it.
pub fn short_vectors(l: &Lattice, bound: u64) -> Result<Vec<ShortVector>, Error> {
    let (reduced, t) = lll_reduce(l)?;
    let n = reduced.rank();
    let gso = gso_from_gram(reduced.gram()).expect("reduced form is positive definite");
    let bound_rat = BigRational::from(BigInt::from(bound));

    // x holds reduced-basis coordinates, filled from level n-1 down to 0.
    let mut x = vec![BigInt::zero(); n];
    let mut found: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    descend(
        n,
        (n - 1) as isize,
        &BigRational::zero(),
        &bound_rat,
        &gso.c,
        &gso.mu,
        &mut x,
        &mut |coords_reduced| {
            let original = t.mul_vec(coords_reduced);
            let v = canonical_sign(original);
            let norm = l.norm_of(&v);
            debug_assert!(norm.is_positive());
            found.push((norm, v));
        },
    );

    found.sort();
    found.dedup();
    Ok(found
        .into_iter()
        .map(|(norm, coords)| ShortVector { coords, norm })
        .collect())
}

/// Fixes coordinate `level` and recurses; `partial` is the exact sum of the
/// completed squares from the levels above, `emit` fires at each nonzero
/// leaf.
#[allow(clippy::too_many_arguments)]
fn descend(
    n: usize,
    level: isize,
    partial: &BigRational,
    bound: &BigRational,
    c: &[BigRational],
    mu: &[Vec<BigRational>],
    x: &mut Vec<BigInt>,
    emit: &mut dyn FnMut(&[BigInt]),
) {
    if level < 0 {
        if x.iter().any(|v| !v.is_zero()) {
            emit(x);
        }
        return;
    }
    let i = level as usize;
    // u_i = sum_{j>i} mu[j][i] x_j
    let mut u = BigRational::zero();
    for j in (i + 1)..n {
        if !x[j].is_zero() {
            u += &mu[j][i] * BigRational::from(x[j].clone());
        }
    }
    let budget = bound - partial;
    let feasible = |xi: &BigInt| -> Option<BigRational> {
        let off = BigRational::from(xi.clone()) + &u;
        let term = &c[i] * &off * &off;
        if term <= budget {
            Some(partial + term)
        } else {
            None
        }
    };
    let center = round_rational(&(-&u));
    let mut xi = center.clone();
    while let Some(next_partial) = feasible(&xi) {
        x[i] = xi.clone();
        descend(n, level - 1, &next_partial, bound, c, mu, x, emit);
        xi += BigInt::one();
    }
    let mut xi = &center - BigInt::one();
    while let Some(next_partial) = feasible(&xi) {
        x[i] = xi.clone();
        descend(n, level - 1, &next_partial, bound, c, mu, x, emit);
        xi -= BigInt::one();
    }
    x[i] = BigInt::zero();
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_core::{imat, make_catalog, CatalogId};

    #[test]
    fn rank_one_counts() {
        let two = make_catalog(CatalogId::TwoD, Some(1)).unwrap();
        let vs = short_vectors(&two, 2).unwrap();
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].norm, BigInt::from(2));
        assert_eq!(vs[0].coords, vec![BigInt::from(1)]);
        assert!(short_vectors(&two, 1).unwrap().is_empty());
    }

    #[test]
    fn a2_has_three_root_pairs() {
        let a2 = make_catalog(CatalogId::A, Some(2)).unwrap();
        let vs = short_vectors(&a2, 2).unwrap();
        assert_eq!(vs.len(), 3);
        assert!(vs.iter().all(|v| v.norm == BigInt::from(2)));
        // Norm 6 adds the three pairs of norm 6; norm 4 is not represented.
        let vs6 = short_vectors(&a2, 6).unwrap();
        assert_eq!(vs6.len(), 6);
        assert!(!vs6.iter().any(|v| v.norm == BigInt::from(4)));
    }

    #[test]
    fn e8_has_120_root_pairs() {
        let e8 = make_catalog(CatalogId::E8, None).unwrap();
        let vs = short_vectors(&e8, 2).unwrap();
        assert_eq!(vs.len(), 120);
        assert!(vs.iter().all(|v| v.norm == BigInt::from(2)));
    }

    #[test]
    fn output_is_sorted_and_canonical() {
        let d4 = make_catalog(CatalogId::D, Some(4)).unwrap();
        let vs = short_vectors(&d4, 4).unwrap();
        // D4 has 12 antipodal pairs of norm 2 and 12 of norm 4.
        assert_eq!(vs.len(), 12 + 12);
        let mut sorted = vs.clone();
        sorted.sort_by(|a, b| (&a.norm, &a.coords).cmp(&(&b.norm, &b.coords)));
        assert_eq!(vs, sorted);
        for v in &vs {
            let first = v.coords.iter().find(|x| !x.is_zero()).unwrap();
            assert!(first.is_positive());
        }
    }

    #[test]
    fn indefinite_is_rejected() {
        let u = make_catalog(CatalogId::U, None).unwrap();
        assert!(matches!(short_vectors(&u, 2), Err(Error::NotPositiveDefinite)));
    }

    #[test]
    fn skewed_basis_agrees_with_straight_basis() {
        // The same lattice presented in a badly skewed basis must report the
        // same norm multiset.
        let straight = Lattice::from_i64(&[&[2, 0], &[0, 4]]).unwrap();
        let skew = Lattice::new(imat![[2, 10], [10, 54]]).unwrap(); // basis e1, 5 e1 + e2
        for bound in [2u64, 4, 8, 20] {
            let a: Vec<BigInt> = short_vectors(&straight, bound)
                .unwrap()
                .into_iter()
                .map(|v| v.norm)
                .collect();
            let b: Vec<BigInt> = short_vectors(&skew, bound)
                .unwrap()
                .into_iter()
                .map(|v| v.norm)
                .collect();
            assert_eq!(a, b);
        }
    }
}
