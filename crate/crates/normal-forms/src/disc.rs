//! Discriminant groups and discriminant quadratic forms.
//!
//! For a nondegenerate lattice `L` with Gram matrix `G` and Smith normal
//! form `U G V = D`, the discriminant group is
//!
//! ```text
//! disc(L) = L^dual / L  =  (+)_i  Z/d_i . g_i,     g_i = col_i(V) / d_i
//! ```
//!
//! with coordinates in the basis of `L`; the trivial factors `d_i = 1`
//! are dropped. On an even lattice the quadratic form `q(x) = (x,x) mod 2Z`
//! and the bilinear form `b(x,y) = (x,y) mod Z` descend to `disc(L)`, and
//! both are computed exactly from the generator pairings.
//!
//! A vector `y` of `L^dual` (rational coordinates with `G y` integral) has
//! discriminant coordinates `(U G y)_i mod d_i`, which is the inverse of
//! the generator description above.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use lattice_core::{IntMat, Lattice};

use crate::snf::smith_normal_form;
use crate::Error;

/// Reduce a rational to the representative in `[0, m)`.
fn reduce_mod(r: &BigRational, m: u32) -> BigRational {
    let m = BigRational::from(BigInt::from(m));
    let f = (r / &m).floor();
    r - f * m
}

/// Finite abelian group in invariant-factor form: `d_1 | d_2 | ...`, all
/// factors greater than 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiscriminantGroup {
    invariant_factors: Vec<BigInt>,
}

impl DiscriminantGroup {
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Group order; 1 for the trivial group.
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Number of generators in the invariant-factor presentation.
    pub fn num_generators(&self) -> usize {
        self.invariant_factors.len()
    }
}

impl fmt::Display for DiscriminantGroup {
    /// Runs of equal factors are grouped: `(Z/2)^8`, `Z/2 x Z/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "trivial");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let mut j = i;
            while j < self.invariant_factors.len() && &self.invariant_factors[j] == d {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{}", j - i));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Invariant factors of `disc(L)`, from the SNF of the Gram matrix.
pub fn discriminant_group(l: &Lattice) -> DiscriminantGroup {
    let snf = smith_normal_form(l.gram());
    DiscriminantGroup {
        invariant_factors: snf.nontrivial_factors(),
    }
}

/// Finite quadratic form on a discriminant group: `q` takes values in
/// `Q/2Z` (representatives in `[0,2)`), `b` in `Q/Z` (representatives in
/// `[0,1)`), both indexed by the invariant-factor generators.
#[derive(Clone, PartialEq, Debug)]
pub struct DiscriminantForm {
    group: DiscriminantGroup,
    q_values: Vec<BigRational>,
    b_matrix: Vec<Vec<BigRational>>,
}

impl DiscriminantForm {
    pub fn group(&self) -> &DiscriminantGroup {
        &self.group
    }

    pub fn q_values(&self) -> &[BigRational] {
        &self.q_values
    }

    pub fn b_matrix(&self) -> &[Vec<BigRational>] {
        &self.b_matrix
    }

    /// The form with negated values, i.e. the discriminant form of `L(-1)`.
    pub fn negated(&self) -> DiscriminantForm {
        DiscriminantForm {
            group: self.group.clone(),
            q_values: self.q_values.iter().map(|q| reduce_mod(&-q, 2)).collect(),
            b_matrix: self
                .b_matrix
                .iter()
                .map(|row| row.iter().map(|b| reduce_mod(&-b, 1)).collect())
                .collect(),
        }
    }

    /// `q` of the element with the given generator coordinates, via
    /// `q(sum a_i g_i) = sum a_i^2 q(g_i) + 2 sum_{i<j} a_i a_j b(g_i,g_j)`.
    pub fn q_of(&self, coords: &[BigInt]) -> BigRational {
        assert_eq!(coords.len(), self.group.num_generators());
        let mut acc = BigRational::zero();
        for (i, a) in coords.iter().enumerate() {
            acc += BigRational::from(a * a) * &self.q_values[i];
            for (j, c) in coords.iter().enumerate().skip(i + 1) {
                acc += BigRational::from(BigInt::from(2) * a * c) * &self.b_matrix[i][j];
            }
        }
        reduce_mod(&acc, 2)
    }

    /// `b` of two elements given by generator coordinates.
    pub fn b_of(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let k = self.group.num_generators();
        assert_eq!((x.len(), y.len()), (k, k));
        let mut acc = BigRational::zero();
        for (i, a) in x.iter().enumerate() {
            for (j, c) in y.iter().enumerate() {
                acc += BigRational::from(a * c) * &self.b_matrix[i][j];
            }
        }
        reduce_mod(&acc, 1)
    }

    /// Order of the element with the given generator coordinates.
    pub fn element_order(&self, coords: &[BigInt]) -> BigInt {
        let mut ord = BigInt::one();
        for (a, d) in coords.iter().zip(self.group.invariant_factors()) {
            let g = a.gcd(d);
            ord = ord.lcm(&(d / g));
        }
        ord
    }
}

/// Generator data tying `disc(L)` back to coordinates of `L`: the
/// generators as rational vectors in the `L`-basis, and the projection
/// taking any dual vector to its discriminant coordinates.
#[derive(Clone, Debug)]
pub struct DiscGenerators {
    orders: Vec<BigInt>,
    gens: Vec<Vec<BigRational>>,
    ug: IntMat,
    nontrivial: Vec<usize>,
}

impl DiscGenerators {
    /// Generator coordinates in the `L`-basis, aligned with the form's
    /// invariant factors.
    pub fn gens(&self) -> &[Vec<BigRational>] {
        &self.gens
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    /// Discriminant coordinates of a dual vector `y` (rational `L`-basis
    /// coordinates). Returns `None` when `y` is not in `L^dual`, i.e. when
    /// `G y` is not integral.
    pub fn coords_of(&self, y: &[BigRational]) -> Option<Vec<BigInt>> {
        let n = self.ug.cols();
        assert_eq!(y.len(), n);
        let mut w = vec![BigInt::zero(); self.ug.rows()];
        for (i, wi) in w.iter_mut().enumerate() {
            let mut acc = BigRational::zero();
            for (j, yj) in y.iter().enumerate() {
                acc += BigRational::from(self.ug[(i, j)].clone()) * yj;
            }
            if !acc.is_integer() {
                return None;
            }
            *wi = acc.to_integer();
        }
        Some(
            self.nontrivial
                .iter()
                .zip(&self.orders)
                .map(|(&i, d)| w[i].mod_floor(d))
                .collect(),
        )
    }
}

/// Discriminant form and generator data of an even nondegenerate lattice,
/// from a single SNF so the two views are always aligned.
pub fn discriminant_data(l: &Lattice) -> Result<(DiscriminantForm, DiscGenerators), Error> {
    if !l.is_even() {
        return Err(Error::OddLattice);
    }
    let g = l.gram();
    let snf = smith_normal_form(g);
    let nontrivial: Vec<usize> = (0..snf.diag.len())
        .filter(|&i| snf.diag[i] > BigInt::one())
        .collect();
    let orders: Vec<BigInt> = nontrivial.iter().map(|&i| snf.diag[i].clone()).collect();
    let gens: Vec<Vec<BigRational>> = nontrivial
        .iter()
        .map(|&i| {
            let col = snf.right.col(i);
            let d = &snf.diag[i];
            col.into_iter()
                .map(|v| BigRational::new(v, d.clone()))
                .collect()
        })
        .collect();
    // Pairings of the dual generators: (g_i, g_j) = (V_i^T G V_j) / (d_i d_j).
    let pair = |i: usize, j: usize| -> BigRational {
        let vi = snf.right.col(nontrivial[i]);
        let vj = snf.right.col(nontrivial[j]);
        let num = lattice_core::matrix::dot(&vi, &g.mul_vec(&vj));
        let den = &orders[i] * &orders[j];
        BigRational::new(num, den)
    };
    let k = nontrivial.len();
    let q_values: Vec<BigRational> = (0..k).map(|i| reduce_mod(&pair(i, i), 2)).collect();
    let b_matrix: Vec<Vec<BigRational>> = (0..k)
        .map(|i| (0..k).map(|j| reduce_mod(&pair(i, j), 1)).collect())
        .collect();
    let form = DiscriminantForm {
        group: DiscriminantGroup {
            invariant_factors: orders.clone(),
        },
        q_values,
        b_matrix,
    };
    let generators = DiscGenerators {
        orders,
        gens,
        ug: snf.left.mul(g),
        nontrivial,
    };
    Ok((form, generators))
}

/// Discriminant form of an even nondegenerate lattice.
pub fn discriminant_form(l: &Lattice) -> Result<DiscriminantForm, Error> {
    discriminant_data(l).map(|(form, _)| form)
}
