//! Exact LLL reduction for positive definite Gram matrices.
//!
//! The algorithm operates on the Gram matrix directly: a basis change by a
//! unimodular `T` replaces the Gram matrix `G` by `T^t G T`, so no embedding
//! coordinates are ever needed.  Gram-Schmidt data is recomputed from the
//! current Gram matrix with exact rational arithmetic after every elementary
//! step; at the ranks this crate targets (at most the low twenties) the
//! recomputation cost is negligible and removes a whole class of incremental
//! update bugs.

use lattice_core::{IntMat, Lattice};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Gram-Schmidt data of a positive definite Gram matrix: `c[i]` is the
/// squared length of the i-th orthogonalized vector and `mu[i][j]` (for
/// `j < i`) the projection coefficient of basis vector `i` on orthogonalized
/// vector `j`.
pub(crate) struct Gso {
    pub c: Vec<BigRational>,
    pub mu: Vec<Vec<BigRational>>,
}

/// Computes exact Gram-Schmidt data from a Gram matrix, or `None` if some
/// orthogonalized squared length fails to be positive, which happens exactly
/// when the form is not positive definite.
pub(crate) fn gso_from_gram(g: &IntMat) -> Option<Gso> {
    let n = g.rows();
    let mut c: Vec<BigRational> = Vec::with_capacity(n);
    let mut mu: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(i);
        for j in 0..i {
            // (b_i, b*_j) = g_ij - sum_{t<j} mu_it mu_jt c_t
            let mut s = BigRational::from(g[(i, j)].clone());
            for t in 0..j {
                s -= &row[t] * &mu[j][t] * &c[t];
            }
            row.push(s / &c[j]);
        }
        let mut ci = BigRational::from(g[(i, i)].clone());
        for t in 0..i {
            ci -= &row[t] * &row[t] * &c[t];
        }
        if !ci.is_positive() {
            return None;
        }
        mu.push(row);
        c.push(ci);
    }
    Some(Gso { c, mu })
}

/// Rounds a rational to the nearest integer, halves away from the floor.
pub(crate) fn round_rational(x: &BigRational) -> BigInt {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    (x + half).floor().to_integer()
}

/// Applies `b_k -= r * b_j` to a Gram matrix and to the basis transform.
fn translate(g: &mut IntMat, t: &mut IntMat, k: usize, j: usize, r: &BigInt) {
    let n = g.rows();
    for col in 0..n {
        let v = &g[(k, col)] - r * &g[(j, col)];
        g[(k, col)] = v;
    }
    for row in 0..n {
        let v = &g[(row, k)] - r * &g[(row, j)];
        g[(row, k)] = v;
    }
    for row in 0..n {
        let v = &t[(row, k)] - r * &t[(row, j)];
        t[(row, k)] = v;
    }
}

/// Swaps basis vectors `k` and `k - 1` in the Gram matrix and the transform.
fn swap_basis(g: &mut IntMat, t: &mut IntMat, k: usize) {
    let n = g.rows();
    for col in 0..n {
        let a = g[(k, col)].clone();
        g[(k, col)] = g[(k - 1, col)].clone();
        g[(k - 1, col)] = a;
    }
    for row in 0..n {
        let a = g[(row, k)].clone();
        g[(row, k)] = g[(row, k - 1)].clone();
        g[(row, k - 1)] = a;
    }
    for row in 0..n {
        let a = t[(row, k)].clone();
        t[(row, k)] = t[(row, k - 1)].clone();
        t[(row, k - 1)] = a;
    }
}

/// LLL-reduces a positive definite lattice with reduction parameter 3/4.
///
/// Returns the reduced lattice together with the unimodular change of basis
/// `T` satisfying `T^t G T = G_reduced`, columns of `T` expressing the
/// reduced basis in the original coordinates.
///
/// Errors with [`Error::NotPositiveDefinite`] on any other signature.
pub fn lll_reduce(l: &Lattice) -> Result<(Lattice, IntMat), Error> {
    let n = l.rank();
    let mut g = l.gram().clone();
    let mut t = IntMat::identity(n);
    if gso_from_gram(&g).is_none() {
        return Err(Error::NotPositiveDefinite);
    }
    if n == 1 {
        return Ok((l.clone(), t));
    }
    let three_quarters = BigRational::new(BigInt::from(3), BigInt::from(4));
    let mut gso = gso_from_gram(&g).expect("positive definiteness was checked above");
    let mut k = 1usize;
    while k < n {
        for j in (0..k).rev() {
            let r = round_rational(&gso.mu[k][j]);
            if !r.is_zero() {
                translate(&mut g, &mut t, k, j, &r);
                // Size reduction leaves the orthogonalized vectors alone and
                // shifts only row k of mu.
                let r_rat = BigRational::from(r);
                for tt in 0..j {
                    let adj = &gso.mu[j][tt] * &r_rat;
                    gso.mu[k][tt] -= adj;
                }
                gso.mu[k][j] -= r_rat;
            }
        }
        let musq = &gso.mu[k][k - 1] * &gso.mu[k][k - 1];
        if gso.c[k] >= (&three_quarters - musq) * &gso.c[k - 1] {
            k += 1;
        } else {
            swap_basis(&mut g, &mut t, k);
            gso = gso_from_gram(&g).expect("form stays positive definite under basis change");
            k = k.max(2) - 1;
        }
    }
    debug_assert_eq!(t.transpose().mul(l.gram()).mul(&t), g);
    let reduced = Lattice::new(g)?;
    Ok((reduced, t))
}
