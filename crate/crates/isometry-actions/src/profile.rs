//! Cyclotomic eigenstructure of finite-order isometries.
//!
//! A finite-order isometry is semisimple over `Q` (its minimal polynomial
//! divides the squarefree `x^n - 1`), so its characteristic polynomial
//! factors as `prod_{k | n} Phi_k(x)^{m_k}`. The multiplicity `m_k` is
//! recovered exactly as `dim ker Phi_k(g) / phi(k)`, and the totient sum
//! `sum m_k phi(k)` must equal the rank. `m_1` is the rank of the fixed
//! sublattice.

use std::collections::BTreeMap;
use std::fmt;

use lattice_core::{IntMat, Lattice};
use num_integer::Integer;

use crate::isometry::{order_of, Isometry};
use crate::poly::{cyclotomic, divisors, euler_phi, eval_poly_at_matrix, moebius};
use crate::Error;

/// Multiplicities `m_k` of the cyclotomic polynomials `Phi_k` in the
/// characteristic polynomial of a finite-order isometry. Only nonzero
/// multiplicities are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicProfile {
    mult: BTreeMap<u64, usize>,
}

impl CyclotomicProfile {
    /// Build a profile from raw multiplicities; zero entries are dropped.
    ///
    /// Errors when no nonzero multiplicity remains. Panics on the key 0,
    /// which is not the index of a cyclotomic polynomial.
    pub fn from_multiplicities(mult: BTreeMap<u64, usize>) -> Result<Self, Error> {
        assert!(
            mult.keys().all(|&k| k >= 1),
            "cyclotomic polynomials are indexed from 1"
        );
        let mult: BTreeMap<u64, usize> = mult.into_iter().filter(|&(_, m)| m > 0).collect();
        if mult.is_empty() {
            return Err(Error::EmptyProfile);
        }
        Ok(CyclotomicProfile { mult })
    }

    /// Multiplicity of `Phi_k`, zero when absent.
    pub fn multiplicity(&self, k: u64) -> usize {
        self.mult.get(&k).copied().unwrap_or(0)
    }

    /// The nonzero multiplicities, keyed by `k`.
    pub fn multiplicities(&self) -> &BTreeMap<u64, usize> {
        &self.mult
    }

    /// Totient-weighted sum `sum m_k phi(k)`: the rank of any lattice
    /// carrying an isometry with this profile.
    pub fn total_rank(&self) -> usize {
        self.mult
            .iter()
            .map(|(&k, &m)| m * euler_phi(k) as usize)
            .sum()
    }

    /// Least common multiple of the indices: the order of any isometry
    /// with this profile.
    pub fn order(&self) -> u64 {
        self.mult.keys().fold(1u64, |acc, &k| acc.lcm(&k))
    }

    /// Rank of the fixed sublattice, `m_1`.
    pub fn invariant_rank(&self) -> usize {
        self.multiplicity(1)
    }

    /// Trace of any matrix with this profile: the sum of the primitive
    /// k-th roots of unity is the Moebius value `mu(k)`.
    pub fn trace(&self) -> i64 {
        self.mult
            .iter()
            .map(|(&k, &m)| m as i64 * moebius(k))
            .sum()
    }
}

impl fmt::Display for CyclotomicProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&k, &m) in &self.mult {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "Phi{k}")?;
            } else {
                write!(f, "Phi{k}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Cyclotomic profile of `g`, provided its order is at most `cutoff`.
///
/// `m_k = dim ker Phi_k(g) / phi(k)` for each divisor `k` of the order;
/// the kernel dimension is `rank - rank(Phi_k(g))`, computed exactly.
pub fn cyclotomic_profile(g: &Isometry, cutoff: u64) -> Result<CyclotomicProfile, Error> {
    let order = order_of(g, cutoff).ok_or(Error::OrderExceedsCutoff { cutoff })?;
    let n = g.lattice().rank();
    let mut mult = BTreeMap::new();
    for k in divisors(order) {
        let phi_k = eval_poly_at_matrix(&cyclotomic(k), g.matrix());
        let kernel_dim = n - phi_k.rank();
        let phi = euler_phi(k) as usize;
        assert!(
            kernel_dim % phi == 0,
            "Phi_{k} kernel of a finite-order isometry has dimension divisible by phi({k})"
        );
        if kernel_dim > 0 {
            mult.insert(k, kernel_dim / phi);
        }
    }
    let profile = CyclotomicProfile::from_multiplicities(mult)?;
    assert_eq!(
        profile.total_rank(),
        n,
        "cyclotomic multiplicities must exhaust the characteristic polynomial"
    );
    Ok(profile)
}

/// Fixed sublattice of an isometry: the saturated kernel of `g - id`.
#[derive(Clone, Debug)]
pub enum FixedSublattice {
    /// No nonzero fixed vectors.
    Zero,
    /// The fixed lattice with its basis (columns, in coordinates of the
    /// ambient lattice's basis).
    Sublattice { lattice: Lattice, basis: IntMat },
}

impl FixedSublattice {
    pub fn rank(&self) -> usize {
        match self {
            FixedSublattice::Zero => 0,
            FixedSublattice::Sublattice { lattice, .. } => lattice.rank(),
        }
    }

    pub fn lattice(&self) -> Option<&Lattice> {
        match self {
            FixedSublattice::Zero => None,
            FixedSublattice::Sublattice { lattice, .. } => Some(lattice),
        }
    }
}

/// Saturated fixed sublattice of `g`, with the restricted Gram form.
///
/// The kernel basis is saturated, so the quotient by the fixed sublattice
/// is torsion-free and the rank equals the profile's `m_1`. For a
/// finite-order isometry the restricted form is automatically
/// nondegenerate; an infinite-order isometry can fix an isotropic line
/// only, in which case the `Lattice` constructor's degeneracy error is
/// passed through.
pub fn fixed_sublattice(g: &Isometry) -> Result<FixedSublattice, Error> {
    let n = g.lattice().rank();
    let minus_id = IntMat::identity(n).neg();
    let basis = normal_forms::integer_kernel(&g.matrix().add(&minus_id));
    if basis.cols() == 0 {
        return Ok(FixedSublattice::Zero);
    }
    let gram = basis.transpose().mul(g.lattice().gram()).mul(&basis);
    let mut lattice = Lattice::new(gram)?;
    if let Some(name) = g.lattice().label() {
        lattice = lattice.with_label(format!("{name}^fix"));
    }
    Ok(FixedSublattice::Sublattice { lattice, basis })
}
