//! Exact orders of the orthogonal group of a discriminant form on an
//! elementary abelian group `(Z/p)^k`.
//!
//! An automorphism of `((Z/p)^k, q)` is an invertible matrix mod p
//! preserving the quadratic form and hence the bilinear form. The count
//! enumerates images of the invariant-factor generators column by
//! column: a candidate image must reproduce the generator's `q` value,
//! pair correctly with every placed image, and stay linearly
//! independent mod p. Every leaf of the tree is then an automorphism,
//! and every automorphism is a leaf, so the total is exact.
//!
//! All conditions are evaluated on exact numerators: `q` values for an
//! even lattice lie in `(1/p) Z / 2Z` when the group is `(Z/p)^k` with p
//! odd (in `(1/2) Z / 2Z` for p = 2), so `q * p` is an integer mod `2p`
//! and `b * p` an integer mod `p`.

use normal_forms::DiscriminantForm;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::Error;

/// Primes accepted by the brute-force count.
pub const SUPPORTED_PRIMES: [u64; 3] = [2, 3, 5];

/// Cap on the number of generators.
pub const GROUP_RANK_CAP: usize = 4;

/// Exact order of the orthogonal group of `form` on its group `(Z/p)^k`.
///
/// Errors when `p` is not one of 2, 3, 5, when the discriminant group is
/// not elementary abelian of exponent `p`, or when it needs more than
/// [`GROUP_RANK_CAP`] generators. The trivial group has order 1.
pub fn orthogonal_group_order_mod_p(form: &DiscriminantForm, p: u64) -> Result<u64, Error> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(Error::UnsupportedPrime { p });
    }
    let factors = form.group().invariant_factors();
    let k = factors.len();
    if k == 0 {
        return Ok(1);
    }
    if factors.iter().any(|d| *d != BigInt::from(p)) {
        return Err(Error::NotElementary { p });
    }
    if k > GROUP_RANK_CAP {
        return Err(Error::GroupRankCapExceeded {
            k,
            cap: GROUP_RANK_CAP,
        });
    }

    // Numerators: q_i * p mod 2p and b_ij * p mod p, all exact integers.
    let qn: Vec<u64> = form
        .q_values()
        .iter()
        .map(|q| numerator_times(q, p, 2 * p))
        .collect();
    let bn: Vec<Vec<u64>> = form
        .b_matrix()
        .iter()
        .map(|row| row.iter().map(|b| numerator_times(b, p, p)).collect())
        .collect();

    let table = Tables { p, k, qn, bn };

    // All p^k coordinate vectors, fixed order.
    let total = (p as usize).pow(k as u32);
    let vectors: Vec<Vec<u64>> = (0..total).map(|idx| table.digits(idx)).collect();

    let mut count = 0u64;
    let mut placed: Vec<usize> = Vec::with_capacity(k);
    let mut echelon: Vec<Vec<u64>> = Vec::with_capacity(k);
    count_columns(&table, &vectors, &mut placed, &mut echelon, &mut count);
    Ok(count)
}

struct Tables {
    p: u64,
    k: usize,
    /// `q(gen_i) * p`, canonical in `[0, 2p)`.
    qn: Vec<u64>,
    /// `b(gen_i, gen_j) * p`, canonical in `[0, p)`.
    bn: Vec<Vec<u64>>,
}

impl Tables {
    fn digits(&self, mut idx: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.k];
        for d in v.iter_mut() {
            *d = (idx as u64) % self.p;
            idx /= self.p as usize;
        }
        v
    }

    /// `q(x) * p mod 2p` via the generator expansion
    /// `q(sum x_i g_i) = sum x_i^2 q_i + 2 sum_{i<j} x_i x_j b_ij`.
    fn q_eval(&self, x: &[u64]) -> u64 {
        let mut acc = 0u64;
        for i in 0..self.k {
            acc = (acc + x[i] * x[i] % (2 * self.p) * self.qn[i]) % (2 * self.p);
            for j in i + 1..self.k {
                acc = (acc + 2 * (x[i] * x[j] % (2 * self.p)) * self.bn[i][j]) % (2 * self.p);
            }
        }
        acc
    }

    /// `b(x, y) * p mod p`.
    fn b_eval(&self, x: &[u64], y: &[u64]) -> u64 {
        let mut acc = 0u64;
        for i in 0..self.k {
            for j in 0..self.k {
                acc = (acc + x[i] * y[j] % self.p * self.bn[i][j]) % self.p;
            }
        }
        acc
    }
}

/// Exact numerator extraction: `value * p` must be an integer; it is
/// returned reduced mod `modulus`.
fn numerator_times(value: &BigRational, p: u64, modulus: u64) -> u64 {
    let scaled = value * BigRational::from(BigInt::from(p));
    assert!(
        scaled.is_integer(),
        "discriminant form values on a (Z/p)-group have denominator dividing p"
    );
    let m = BigInt::from(modulus);
    let reduced = ((scaled.to_integer() % &m) + &m) % &m;
    reduced.to_u64().expect("reduced residue fits u64")
}

/// Reduce `x` by the echelon rows mod p; returns the residue, or None
/// when it vanishes (i.e. `x` is dependent on the placed vectors).
fn reduce_mod_p(echelon: &[Vec<u64>], x: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r = x.to_vec();
    for row in echelon {
        let lead = row
            .iter()
            .position(|&c| c != 0)
            .expect("echelon rows are nonzero");
        if r[lead] != 0 {
            // row[lead] is normalized to 1.
            let factor = r[lead];
            for (ri, wi) in r.iter_mut().zip(row) {
                *ri = (*ri + (p - factor) * wi) % p;
            }
        }
    }
    if r.iter().all(|&c| c == 0) {
        None
    } else {
        Some(r)
    }
}

/// Normalize a residue so its leading coefficient is 1.
fn normalize_mod_p(mut r: Vec<u64>, p: u64) -> Vec<u64> {
    let lead = r.iter().position(|&c| c != 0).expect("nonzero residue");
    let inv = mod_inverse(r[lead], p);
    for c in r.iter_mut() {
        *c = *c * inv % p;
    }
    r
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p; empty product for p = 2 where 1
    // is its own inverse.
    let mut acc = 1u64;
    for _ in 0..p.saturating_sub(2) {
        acc = acc * a % p;
    }
    acc
}

fn count_columns(
    t: &Tables,
    vectors: &[Vec<u64>],
    placed: &mut Vec<usize>,
    echelon: &mut Vec<Vec<u64>>,
    count: &mut u64,
) {
    let i = placed.len();
    if i == t.k {
        *count += 1;
        return;
    }
    for (c, x) in vectors.iter().enumerate() {
        if t.q_eval(x) != t.qn[i] {
            continue;
        }
        let mut ok = true;
        for (j, &pj) in placed.iter().enumerate() {
            if t.b_eval(x, &vectors[pj]) != t.bn[i][j] {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let Some(residue) = reduce_mod_p(echelon, x, t.p) else {
            continue;
        };
        placed.push(c);
        echelon.push(normalize_mod_p(residue, t.p));
        count_columns(t, vectors, placed, echelon, count);
        echelon.pop();
        placed.pop();
    }
}
