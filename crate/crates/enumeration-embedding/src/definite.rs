//! Exact isometry testing for definite lattices of small rank.
//!
//! Two definite lattices are isometric exactly when some unimodular `T`
//! satisfies `T^t G2 T = G1`.  The columns of `T` are vectors of `L2` whose
//! norms and pairwise inner products reproduce `G1`, so a complete
//! backtracking search over the finitely many vectors of each required norm
//! decides the question: a `None` answer is a proof that no isometry exists,
//! not a budget artifact.  The rank cap keeps the candidate lists at desk
//! scale; raise it deliberately via [`isometric_definite_with_cap`] if a
//! larger exact search is really wanted.

use lattice_core::{IntMat, Lattice};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::shortvec::short_vectors;
use crate::Error;

/// Default rank cap for definite isometry searches.
pub const DEFAULT_DEFINITE_RANK_CAP: usize = 8;

/// Decides whether two definite lattices are isometric, using the default
/// rank cap.  See [`isometric_definite_with_cap`].
pub fn isometric_definite(l1: &Lattice, l2: &Lattice) -> Result<Option<IntMat>, Error> {
    isometric_definite_with_cap(l1, l2, DEFAULT_DEFINITE_RANK_CAP)
}

/// Decides whether two definite lattices are isometric.
///
/// Returns a unimodular `T` with `T^t G2 T = G1` when one exists and `None`
/// otherwise; the search is exhaustive, so `None` certifies nonexistence.
/// Errors if either lattice is indefinite or the common rank exceeds `cap`.
pub fn isometric_definite_with_cap(
    l1: &Lattice,
    l2: &Lattice,
    cap: usize,
) -> Result<Option<IntMat>, Error> {
    if !l1.is_definite() || !l2.is_definite() {
        return Err(Error::NotDefinite);
    }
    if l1.rank() != l2.rank() {
        return Ok(None);
    }
    let rank = l1.rank();
    if rank > cap {
        return Err(Error::RankCapExceeded { rank, cap });
    }
    if l1.is_positive_definite() != l2.is_positive_definite() {
        return Ok(None);
    }
    if l1.is_negative_definite() {
        // Isometries are insensitive to a global sign flip of both forms.
        let p1 = l1.twist(-1)?;
        let p2 = l2.twist(-1)?;
        return isometric_definite_with_cap(&p1, &p2, cap);
    }
    if l1.determinant() != l2.determinant() {
        return Ok(None);
    }

    let g1 = l1.gram();
    let mut max_norm = 0u64;
    for i in 0..rank {
        match g1[(i, i)].to_u64() {
            Some(v) => max_norm = max_norm.max(v),
            None => return Err(Error::RankCapExceeded { rank, cap }),
        }
    }
    let reps = short_vectors(l2, max_norm)?;
    // Candidate images per basis vector: all vectors of the exact norm, both
    // signs, in the deterministic short-vector order.
    let candidates: Vec<Vec<Vec<BigInt>>> = (0..rank)
        .map(|i| {
            let want = &g1[(i, i)];
            let mut list = Vec::new();
            for sv in &reps {
                if sv.norm == *want {
                    list.push(sv.coords.clone());
                    list.push(sv.coords.iter().map(|x| -x.clone()).collect());
                }
            }
            list
        })
        .collect();
    // A quick necessary condition: every norm must be represented at all.
    if candidates.iter().any(|list| list.is_empty()) {
        return Ok(None);
    }

    let mut placed: Vec<Vec<BigInt>> = Vec::with_capacity(rank);
    let mut placed_gw: Vec<Vec<BigInt>> = Vec::with_capacity(rank);
    let found = place_column(l1, l2, &candidates, &mut placed, &mut placed_gw);
    match found {
        None => Ok(None),
        Some(cols) => {
            let t = IntMat::from_cols(&cols);
            debug_assert_eq!(t.transpose().mul(l2.gram()).mul(&t), *l1.gram());
            debug_assert!(t.determinant().abs() == BigInt::from(1));
            Ok(Some(t))
        }
    }
}

fn place_column(
    l1: &Lattice,
    l2: &Lattice,
    candidates: &[Vec<Vec<BigInt>>],
    placed: &mut Vec<Vec<BigInt>>,
    placed_gw: &mut Vec<Vec<BigInt>>,
) -> Option<Vec<Vec<BigInt>>> {
    let rank = l1.rank();
    let i = placed.len();
    if i == rank {
        return Some(placed.clone());
    }
    let g1 = l1.gram();
    'cands: for cand in &candidates[i] {
        for (j, gw) in placed_gw.iter().enumerate() {
            let mut s = BigInt::zero();
            for (a, b) in gw.iter().zip(cand) {
                s += a * b;
            }
            if s != g1[(j, i)] {
                continue 'cands;
            }
        }
        placed.push(cand.clone());
        placed_gw.push(l2.gram().mul_vec(cand));
        let hit = place_column(l1, l2, candidates, placed, placed_gw);
        placed.pop();
        placed_gw.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_core::{direct_sum, make_catalog, scramble::random_unimodular, CatalogId};

    #[test]
    fn a3_and_d3_are_isometric() {
        let a3 = make_catalog(CatalogId::A, Some(3)).unwrap();
        let d3 = make_catalog(CatalogId::D, Some(3)).unwrap();
        let t = isometric_definite(&a3, &d3).unwrap().expect("A3 is D3");
        assert_eq!(t.transpose().mul(d3.gram()).mul(&t), *a3.gram());
    }

    #[test]
    fn distinct_rank_one_lattices_are_not() {
        let two = make_catalog(CatalogId::TwoD, Some(1)).unwrap();
        let four = Lattice::from_i64(&[&[4]]).unwrap();
        assert!(isometric_definite(&two, &four).unwrap().is_none());
    }

    #[test]
    fn same_determinant_different_lattices() {
        // <1> + <16> and <4> + <4> share rank, signature, determinant, and
        // parity of determinant, yet are not isometric: the first represents
        // 1 and the second does not.
        let a = Lattice::from_i64(&[&[1, 0], &[0, 16]]).unwrap();
        let b = Lattice::from_i64(&[&[4, 0], &[0, 4]]).unwrap();
        assert!(isometric_definite(&a, &b).unwrap().is_none());
    }

    #[test]
    fn d2_is_a1_squared() {
        let d2 = make_catalog(CatalogId::D, Some(2)).unwrap();
        let a1 = make_catalog(CatalogId::A, Some(1)).unwrap();
        let sum = direct_sum(&[a1.clone(), a1]).unwrap();
        assert!(isometric_definite(&d2, &sum).unwrap().is_some());
    }

    #[test]
    fn scrambled_bases_are_recognized() {
        let e6 = make_catalog(CatalogId::E6, None).unwrap();
        for seed in [3u64, 17, 40] {
            let u = random_unimodular(6, 10, seed);
            let g = u.transpose().mul(e6.gram()).mul(&u);
            let scr = Lattice::new(g).unwrap();
            let t = isometric_definite(&e6, &scr).unwrap().expect("same lattice");
            assert_eq!(t.transpose().mul(scr.gram()).mul(&t), *e6.gram());
        }
    }

    #[test]
    fn negative_definite_pairs_work() {
        let a3 = make_catalog(CatalogId::A, Some(3)).unwrap().twist(-1).unwrap();
        let d3 = make_catalog(CatalogId::D, Some(3)).unwrap().twist(-1).unwrap();
        assert!(isometric_definite(&a3, &d3).unwrap().is_some());
    }

    #[test]
    fn indefinite_and_oversize_inputs_error() {
        let u = make_catalog(CatalogId::U, None).unwrap();
        let a1 = make_catalog(CatalogId::A, Some(1)).unwrap();
        assert!(matches!(isometric_definite(&u, &a1), Err(Error::NotDefinite)));
        let big = make_catalog(CatalogId::D, Some(9)).unwrap();
        assert!(matches!(
            isometric_definite(&big, &big),
            Err(Error::RankCapExceeded { rank: 9, cap: 8 })
        ));
    }

    #[test]
    fn mixed_signs_are_never_isometric() {
        let a1 = make_catalog(CatalogId::A, Some(1)).unwrap();
        let neg = a1.twist(-1).unwrap();
        assert!(isometric_definite(&a1, &neg).unwrap().is_none());
    }
}
