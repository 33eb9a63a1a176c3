//! Dimension arithmetic for the period domain attached to an order-n
//! action.
//!
//! An order-n isometry group acting on the orthogonal complement of its
//! invariant lattice produces, for `n >= 3`, an eigenperiod domain that
//! is a complex ball of dimension `m_n - 1`, where `m_n` is the
//! multiplicity of a faithful character; for `n = 2` the domain is the
//! type IV Hermitian symmetric space of `O(2, r-2)`, of dimension `r - 2`
//! where `r` is the rank of the orthogonal complement.

use crate::profile::CyclotomicProfile;
use crate::Error;

/// The combinatorial data of an order-n action: the order, the
/// cyclotomic profile on the full lattice, and the rank of the invariant
/// sublattice (which must match the profile's `m_1`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MuActionDatum {
    n: u64,
    profile: CyclotomicProfile,
    invariant_rank: usize,
}

impl MuActionDatum {
    /// Validate and build a datum.
    ///
    /// Requirements: `n >= 2`; every profile index divides `n`; the
    /// profile has `m_n >= 1` (the action genuinely has order `n`); and
    /// `m_1` equals the invariant rank.
    pub fn new(
        n: u64,
        profile: CyclotomicProfile,
        invariant_rank: usize,
    ) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::OrderTooSmall { n });
        }
        for &k in profile.multiplicities().keys() {
            if n % k != 0 {
                return Err(Error::KeyNotDivisor { k, n });
            }
        }
        if profile.multiplicity(n) == 0 {
            return Err(Error::ZeroPrimitivePart { n });
        }
        let m1 = profile.multiplicity(1);
        if m1 != invariant_rank {
            return Err(Error::InvariantRankMismatch { m1, invariant_rank });
        }
        Ok(MuActionDatum {
            n,
            profile,
            invariant_rank,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn profile(&self) -> &CyclotomicProfile {
        &self.profile
    }

    pub fn invariant_rank(&self) -> usize {
        self.invariant_rank
    }

    /// Rank of the orthogonal complement of the invariant lattice: the
    /// totient-weighted sum over all indices `k >= 2`.
    pub fn rank_perp(&self) -> usize {
        self.profile.total_rank() - self.invariant_rank
    }
}

/// Dimension of the period domain attached to the datum.
///
/// `n >= 3`: the eigenperiod ball has dimension `m_n - 1`. `n = 2`: the
/// type IV domain attached to a signature-(2, r-2) space has dimension
/// `r - 2` for `r = rank_perp`; an `r < 2` datum carries no domain and is
/// rejected.
pub fn ball_dimension(d: &MuActionDatum) -> Result<u64, Error> {
    if d.n() >= 3 {
        Ok(d.profile().multiplicity(d.n()) as u64 - 1)
    } else {
        let rank_perp = d.rank_perp();
        if rank_perp < 2 {
            return Err(Error::DomainTooSmall { rank_perp });
        }
        Ok(rank_perp as u64 - 2)
    }
}
