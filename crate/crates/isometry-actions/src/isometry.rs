//! Isometries of a lattice: verified construction, composition, orders,
//! reflections, and Coxeter elements of root bases.

use lattice_core::{IntMat, Lattice};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Default power cutoff for order searches; every finite isometry order
/// met in practice on rank <= 22 lattices is far below this.
pub const DEFAULT_ORDER_CUTOFF: u64 = 1000;

/// A verified isometry: an integer matrix `g` with `g^T G g = G` for the
/// Gram matrix `G` of its lattice. Such a matrix automatically has
/// determinant `+-1` because `G` is nondegenerate.
#[derive(Clone, Debug)]
pub struct Isometry {
    lattice: Lattice,
    matrix: IntMat,
}

/// Validate a candidate matrix as an isometry of `l`.
///
/// Checks, in order: the shape matches the rank, the determinant is
/// `+-1`, and the Gram form is preserved.
pub fn verify_isometry(l: &Lattice, matrix: IntMat) -> Result<Isometry, Error> {
    let n = l.rank();
    if matrix.rows() != n || matrix.cols() != n {
        return Err(Error::ShapeMismatch {
            rows: matrix.rows(),
            cols: matrix.cols(),
            rank: n,
        });
    }
    let det = matrix.determinant();
    if det.abs() != BigInt::one() {
        return Err(Error::NotUnimodular { det });
    }
    if matrix.transpose().mul(l.gram()).mul(&matrix) != *l.gram() {
        return Err(Error::GramNotPreserved);
    }
    Ok(Isometry {
        lattice: l.clone(),
        matrix,
    })
}

/// Inverse of a matrix with determinant `+-1`, or `None` when the
/// determinant is anything else. Columns are found as the unique integer
/// solutions of `m x = e_j`.
pub fn unimodular_inverse(m: &IntMat) -> Option<IntMat> {
    if !m.is_square() || m.determinant().abs() != BigInt::one() {
        return None;
    }
    let n = m.rows();
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            normal_forms::solve_integer(m, &e).expect("unimodular systems always solve")
        })
        .collect();
    Some(IntMat::from_cols(&cols))
}

impl Isometry {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMat {
        self.matrix
    }

    /// Image of a vector in basis coordinates.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    /// The identity isometry.
    pub fn identity(l: &Lattice) -> Isometry {
        Isometry {
            lattice: l.clone(),
            matrix: IntMat::identity(l.rank()),
        }
    }

    /// `-id`, an isometry of every lattice.
    pub fn minus_identity(l: &Lattice) -> Isometry {
        Isometry {
            lattice: l.clone(),
            matrix: IntMat::identity(l.rank()).neg(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntMat::identity(self.matrix.rows())
    }

    /// `self` after `other` (matrix product `self.matrix * other.matrix`).
    /// Errors when the two live on different lattices.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry, Error> {
        if self.lattice.gram() != other.lattice.gram() {
            return Err(Error::LatticeMismatch);
        }
        Ok(Isometry {
            lattice: self.lattice.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    /// `g^k` by repeated squaring; `k = 0` gives the identity.
    pub fn pow(&self, k: u64) -> Isometry {
        let n = self.matrix.rows();
        let mut acc = IntMat::identity(n);
        let mut base = self.matrix.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Isometry {
            lattice: self.lattice.clone(),
            matrix: acc,
        }
    }

    /// The inverse isometry; always exists since `det = +-1`.
    pub fn inverse(&self) -> Isometry {
        let matrix =
            unimodular_inverse(&self.matrix).expect("isometries have determinant +-1");
        Isometry {
            lattice: self.lattice.clone(),
            matrix,
        }
    }
}

/// Least `k <= cutoff` with `g^k = id`, or `None` when no such power
/// appears; `None` means the order exceeds the cutoff (it may be
/// infinite on an indefinite lattice).
pub fn order_of(g: &Isometry, cutoff: u64) -> Option<u64> {
    let n = g.matrix().rows();
    let id = IntMat::identity(n);
    let mut p = g.matrix().clone();
    for k in 1..=cutoff {
        if p == id {
            return Some(k);
        }
        p = p.mul(g.matrix());
    }
    None
}

/// Reflection `s_v(x) = x - (2(x,v)/(v,v)) v` in a vector of norm `+-2`
/// of an even lattice: an order-2 isometry negating `v` and fixing the
/// hyperplane `v^perp` pointwise.
pub fn reflection(l: &Lattice, v: &[BigInt]) -> Result<Isometry, Error> {
    let n = l.rank();
    if v.len() != n {
        return Err(Error::ShapeMismatch {
            rows: v.len(),
            cols: 1,
            rank: n,
        });
    }
    if !l.is_even() {
        return Err(Error::OddLattice);
    }
    let norm = l.norm_of(v);
    let two = BigInt::from(2);
    if norm != two && norm != -&two {
        return Err(Error::BadReflectionNorm { norm });
    }
    // (e_j, v) = (G v)_j; with (v,v) = +-2 the coefficient 2(e_j,v)/(v,v)
    // is +-(G v)_j, so the matrix is integral with columns e_j - c_j v.
    let gv = l.gram().mul_vec(v);
    let negate = norm != two;
    let mat = IntMat::from_fn(n, n, |i, j| {
        let mut c = gv[j].clone() * &v[i];
        if negate {
            c = -c;
        }
        let diag = if i == j { BigInt::one() } else { BigInt::zero() };
        diag - c
    });
    verify_isometry(l, mat)
}

/// Coxeter element of a definite ADE root basis: the product of the
/// reflections in the basis vectors, taken in index order.
///
/// The input must carry a simply-laced root basis: diagonal entries all
/// `2` with off-diagonal entries in `{0, -1}` and positive definite, or
/// the `(-1)`-twist of such a basis (diagonal `-2`, off-diagonal
/// `{0, 1}`, negative definite). Direct sums of root bases are accepted;
/// their Coxeter element is the product of the components' ones.
pub fn coxeter_element(l: &Lattice) -> Result<Isometry, Error> {
    let n = l.rank();
    let g = l.gram();
    let two = BigInt::from(2);
    let sign = if g[(0, 0)] == two {
        1
    } else if g[(0, 0)] == -&two {
        -1
    } else {
        return Err(Error::NotRootBasis);
    };
    for i in 0..n {
        for j in 0..n {
            let expected_diag = if sign == 1 { two.clone() } else { -two.clone() };
            let off = if sign == 1 {
                BigInt::from(-1)
            } else {
                BigInt::one()
            };
            let e = &g[(i, j)];
            if i == j {
                if *e != expected_diag {
                    return Err(Error::NotRootBasis);
                }
            } else if !e.is_zero() && *e != off {
                return Err(Error::NotRootBasis);
            }
        }
    }
    if !l.is_definite() {
        return Err(Error::NotRootBasis);
    }
    let mut cox = Isometry::identity(l);
    for i in 0..n {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        cox = cox.compose(&reflection(l, &v)?)?;
    }
    Ok(cox)
}
