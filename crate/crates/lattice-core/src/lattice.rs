//! Lattices and their basic invariants.
//!
//! The signature is computed by exact rational congruence diagonalization:
//! nonzero diagonal pivots are consumed first (swapping one in when
//! available), and a fully zero diagonal is repaired by a row-plus-column
//! addition, which turns an off-diagonal entry into a nonzero diagonal one.
//! Sylvester's law of inertia makes the resulting sign counts independent
//! of these choices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::matrix::{dot, IntMat};
use crate::Error;

/// Inertia of a nondegenerate symmetric form: counts of positive and
/// negative squares.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

/// Signature of a symmetric integer matrix by congruence diagonalization
/// over `Q`.
///
/// Fails with [`Error::Degenerate`] if a structurally zero row appears,
/// which happens exactly when the form is degenerate.
pub fn signature_of(gram: &IntMat) -> Result<Signature, Error> {
    assert!(gram.is_symmetric(), "signature of a non-symmetric matrix");
    let n = gram.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from(gram[(i, j)].clone()))
                .collect()
        })
        .collect();
    let mut pos = 0;
    let mut neg = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // Both diagonals are zero, so this makes a[k][k] = 2*a[k][j].
                for t in 0..n {
                    let v = a[j][t].clone();
                    a[k][t] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[k] += v;
                }
            } else {
                return Err(Error::Degenerate);
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for t in 0..n {
                let v = &f * &a[k][t];
                a[i][t] -= v;
            }
            for row in a.iter_mut() {
                let v = &f * &row[k];
                row[i] -= v;
            }
        }
    }
    Ok(Signature { pos, neg })
}

/// An integral lattice: a validated square, symmetric, nondegenerate Gram
/// matrix plus an optional label.
///
/// The determinant is computed exactly at construction, so nondegeneracy is
/// a standing invariant and [`Lattice::determinant`] is free.
#[derive(Clone, Debug)]
pub struct Lattice {
    gram: IntMat,
    det: BigInt,
    label: Option<String>,
}

impl Lattice {
    /// Validate a Gram matrix: square, positive rank, symmetric, nonzero
    /// determinant.
    pub fn new(gram: IntMat) -> Result<Self, Error> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if gram.rows() == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some((i, j)) = gram.asymmetry_witness() {
            return Err(Error::NotSymmetric { i, j });
        }
        let det = gram.determinant();
        if det.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(Lattice {
            gram,
            det,
            label: None,
        })
    }

    /// Convenience constructor from machine-integer rows.
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, Error> {
        Lattice::new(IntMat::from_i64(rows))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn gram(&self) -> &IntMat {
        &self.gram
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Label if present, otherwise a generic `rank-r lattice` placeholder.
    pub fn describe(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => format!("rank-{} lattice", self.rank()),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// Exact determinant of the Gram matrix.
    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    /// `|det|`, the order of the discriminant group.
    pub fn delta(&self) -> BigInt {
        self.det.abs()
    }

    /// Exact signature; infallible because nondegeneracy is an invariant.
    pub fn signature(&self) -> Signature {
        signature_of(&self.gram).expect("validated lattice cannot be degenerate")
    }

    /// True iff every diagonal Gram entry is even, i.e. all self-pairings
    /// are even integers.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[(i, i)] % BigInt::from(2)).is_zero())
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature().neg == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.signature().pos == 0
    }

    pub fn is_definite(&self) -> bool {
        let s = self.signature();
        s.pos == 0 || s.neg == 0
    }

    /// The twist `L(n)`: same module, pairing scaled by `n`.
    pub fn twist(&self, n: i64) -> Result<Lattice, Error> {
        if n == 0 {
            return Err(Error::ZeroTwist);
        }
        let scaled = self.gram.scale(&BigInt::from(n));
        let mut out = Lattice::new(scaled)?;
        if let Some(l) = &self.label {
            out.label = Some(format!("{l}({n})"));
        }
        Ok(out)
    }

    /// Pairing `(x, y)` of two coordinate vectors.
    pub fn inner(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        dot(x, &self.gram.mul_vec(y))
    }

    /// Self-pairing `(x, x)`.
    pub fn norm_of(&self, x: &[BigInt]) -> BigInt {
        self.inner(x, x)
    }
}

/// Orthogonal direct sum, in order; errors on an empty list.
pub fn direct_sum(parts: &[Lattice]) -> Result<Lattice, Error> {
    if parts.is_empty() {
        return Err(Error::EmptySum);
    }
    let grams: Vec<&IntMat> = parts.iter().map(Lattice::gram).collect();
    let mut out = Lattice::new(IntMat::block_diag(&grams))?;
    if parts.iter().all(|p| p.label.is_some()) {
        out.label = Some(
            parts
                .iter()
                .map(Lattice::describe)
                .collect::<Vec<_>>()
                .join(" + "),
        );
    }
    Ok(out)
}
