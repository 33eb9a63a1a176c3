//! The standard lattice catalog.
//!
//! Gram conventions:
//!
//! | name   | gram                                        | det      |
//! |--------|---------------------------------------------|----------|
//! | `U`    | `[[0,1],[1,0]]`                             | -1       |
//! | `V`    | `[[2,1],[1,-2]]`                            | -5       |
//! | `<1>`  | `[[1]]`                                     | 1        |
//! | `<2d>` | `[[2d]]`                                    | 2d       |
//! | `A_n`  | Dynkin chain `1-2-...-n`                    | n+1      |
//! | `D_n`  | chain `1-...-(n-1)` plus edge `(n-2, n)`    | 4        |
//! | `E_6`  | chain `1-...-5` plus edge `(3, 6)`          | 3        |
//! | `E_8`  | chain `1-...-7` plus edge `(5, 8)`          | 1        |
//! | `LK3`  | `U + U + U + E8(-1) + E8(-1)`               | -1       |
//!
//! Root lattices carry diagonal 2 and entry -1 per Dynkin edge, so they are
//! positive definite; negative definite versions come from `twist(-1)`.
//! `D_n` needs `n >= 2` (`D_2 = A_1 + A_1` and `D_3 = A_3` hold as lattices).

use num_bigint::BigInt;

use crate::lattice::{direct_sum, Lattice};
use crate::matrix::IntMat;
use crate::Error;

/// Identifiers accepted by [`make_catalog`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CatalogId {
    /// Hyperbolic plane, rank 2.
    U,
    /// Rank-2 lattice with Gram `[[2,1],[1,-2]]`.
    V,
    /// Root lattice family `A_n`, `n >= 1`.
    A,
    /// Root lattice family `D_n`, `n >= 2`.
    D,
    /// Root lattice `E_6`.
    E6,
    /// Root lattice `E_8`.
    E8,
    /// Rank-1 odd unimodular lattice `<1>`.
    One,
    /// Rank-1 even lattice `<2d>`, parameter `d >= 1`.
    TwoD,
    /// The K3 lattice `U + U + U + E8(-1) + E8(-1)`.
    LK3,
}

impl CatalogId {
    pub fn name(self) -> &'static str {
        match self {
            CatalogId::U => "U",
            CatalogId::V => "V",
            CatalogId::A => "A",
            CatalogId::D => "D",
            CatalogId::E6 => "E6",
            CatalogId::E8 => "E8",
            CatalogId::One => "<1>",
            CatalogId::TwoD => "<2d>",
            CatalogId::LK3 => "LK3",
        }
    }
}

/// Gram matrix of the root lattice on `n` simple roots with the given
/// Dynkin edges (1-indexed): diagonal 2, entry -1 per edge.
fn root_gram(n: usize, edges: &[(usize, usize)]) -> IntMat {
    let mut g = IntMat::identity(n).scale(&BigInt::from(2));
    for &(i, j) in edges {
        g[(i - 1, j - 1)] = BigInt::from(-1);
        g[(j - 1, i - 1)] = BigInt::from(-1);
    }
    g
}

/// Dynkin edges of `A_n`.
pub fn a_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

/// Dynkin edges of `D_n`, `n >= 2`: a chain on `1..n-1` with node `n`
/// attached to node `n-2`.
pub fn d_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
    if n >= 3 {
        edges.push((n - 2, n));
    }
    edges
}

/// Dynkin edges of `E_6`: a chain on `1..5` with node 6 attached to node 3.
pub fn e6_edges() -> Vec<(usize, usize)> {
    vec![(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]
}

/// Dynkin edges of `E_8`: a chain on `1..7` with node 8 attached to node 5.
pub fn e8_edges() -> Vec<(usize, usize)> {
    vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]
}

fn require_param(id: CatalogId, param: Option<i64>) -> Result<i64, Error> {
    param.ok_or(Error::MissingParam(id.name()))
}

fn forbid_param(id: CatalogId, param: Option<i64>) -> Result<(), Error> {
    match param {
        Some(_) => Err(Error::UnexpectedParam(id.name())),
        None => Ok(()),
    }
}

/// Construct a catalog lattice.
///
/// `param` is required for the parametric families `A_n`, `D_n`, `<2d>`
/// and rejected otherwise.
pub fn make_catalog(id: CatalogId, param: Option<i64>) -> Result<Lattice, Error> {
    match id {
        CatalogId::U => {
            forbid_param(id, param)?;
            Ok(Lattice::from_i64(&[&[0, 1], &[1, 0]])?.with_label("U"))
        }
        CatalogId::V => {
            forbid_param(id, param)?;
            Ok(Lattice::from_i64(&[&[2, 1], &[1, -2]])?.with_label("V"))
        }
        CatalogId::A => {
            let n = require_param(id, param)?;
            if n < 1 {
                return Err(Error::ParamOutOfRange {
                    name: "A",
                    param: n,
                    min: 1,
                });
            }
            let n = n as usize;
            Ok(Lattice::new(root_gram(n, &a_edges(n)))?.with_label(format!("A{n}")))
        }
        CatalogId::D => {
            let n = require_param(id, param)?;
            if n < 2 {
                return Err(Error::ParamOutOfRange {
                    name: "D",
                    param: n,
                    min: 2,
                });
            }
            let n = n as usize;
            Ok(Lattice::new(root_gram(n, &d_edges(n)))?.with_label(format!("D{n}")))
        }
        CatalogId::E6 => {
            forbid_param(id, param)?;
            Ok(Lattice::new(root_gram(6, &e6_edges()))?.with_label("E6"))
        }
        CatalogId::E8 => {
            forbid_param(id, param)?;
            Ok(Lattice::new(root_gram(8, &e8_edges()))?.with_label("E8"))
        }
        CatalogId::One => {
            forbid_param(id, param)?;
            Ok(Lattice::from_i64(&[&[1]])?.with_label("<1>"))
        }
        CatalogId::TwoD => {
            let d = require_param(id, param)?;
            if d < 1 {
                return Err(Error::ParamOutOfRange {
                    name: "<2d>",
                    param: d,
                    min: 1,
                });
            }
            let g = IntMat::from_i64(&[&[2 * d]]);
            Ok(Lattice::new(g)?.with_label(format!("<{}>", 2 * d)))
        }
        CatalogId::LK3 => {
            forbid_param(id, param)?;
            let u = make_catalog(CatalogId::U, None)?;
            let e8m = make_catalog(CatalogId::E8, None)?.twist(-1)?;
            Ok(direct_sum(&[u.clone(), u.clone(), u, e8m.clone(), e8m])?.with_label("LK3"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Signature;
    use num_traits::One;

    fn cat(id: CatalogId, param: Option<i64>) -> Lattice {
        make_catalog(id, param).unwrap()
    }

    #[test]
    fn u_and_v() {
        let u = cat(CatalogId::U, None);
        assert_eq!(u.gram(), &crate::imat![[0, 1], [1, 0]]);
        let v = cat(CatalogId::V, None);
        assert_eq!(v.gram(), &crate::imat![[2, 1], [1, -2]]);
        assert_eq!(v.determinant(), &BigInt::from(-5));
        assert_eq!(v.signature(), Signature { pos: 1, neg: 1 });
    }

    #[test]
    fn a_family() {
        assert_eq!(cat(CatalogId::A, Some(1)).gram(), &crate::imat![[2]]);
        for n in 1..=8 {
            let a = cat(CatalogId::A, Some(n));
            assert_eq!(a.determinant(), &BigInt::from(n + 1));
            assert!(a.is_positive_definite());
            assert!(a.is_even());
        }
        assert!(matches!(
            make_catalog(CatalogId::A, Some(0)),
            Err(Error::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn d_family() {
        for n in 2..=10 {
            let d = cat(CatalogId::D, Some(n));
            assert_eq!(d.determinant(), &BigInt::from(4), "det D_{n}");
            assert!(d.is_positive_definite());
        }
        // D_2 = A_1 + A_1 and D_3 = A_3 up to basis order.
        assert_eq!(cat(CatalogId::D, Some(2)).gram(), &crate::imat![[2, 0], [0, 2]]);
        assert!(matches!(
            make_catalog(CatalogId::D, Some(1)),
            Err(Error::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn exceptional_families() {
        let e6 = cat(CatalogId::E6, None);
        assert_eq!(e6.determinant(), &BigInt::from(3));
        assert!(e6.is_positive_definite());
        let e8 = cat(CatalogId::E8, None);
        assert!(e8.determinant().is_one());
        assert!(e8.is_positive_definite());
        assert!(e8.is_even());
    }

    #[test]
    fn rank_one_lattices() {
        assert_eq!(cat(CatalogId::One, None).gram(), &crate::imat![[1]]);
        assert!(!cat(CatalogId::One, None).is_even());
        let six = cat(CatalogId::TwoD, Some(3));
        assert_eq!(six.gram(), &crate::imat![[6]]);
        assert_eq!(six.label(), Some("<6>"));
        assert!(matches!(
            make_catalog(CatalogId::TwoD, Some(0)),
            Err(Error::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn k3_lattice() {
        let k3 = cat(CatalogId::LK3, None);
        assert_eq!(k3.rank(), 22);
        assert_eq!(k3.determinant(), &BigInt::from(-1));
        assert_eq!(k3.signature(), Signature { pos: 3, neg: 19 });
        assert!(k3.is_even());
    }

    #[test]
    fn param_discipline() {
        assert!(matches!(
            make_catalog(CatalogId::U, Some(2)),
            Err(Error::UnexpectedParam("U"))
        ));
        assert!(matches!(
            make_catalog(CatalogId::A, None),
            Err(Error::MissingParam("A"))
        ));
    }
}
