//! Exact integer polynomial helpers for cyclotomic factor computations.
//!
//! Polynomials are coefficient vectors in ascending degree order with no
//! trailing zeros. The k-th cyclotomic polynomial is obtained from the
//! recursion `x^k - 1 = prod_{d | k} Phi_d(x)` by exact long division,
//! so every coefficient is an exact integer.

use lattice_core::IntMat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Euler totient by trial-division factorization; `k` is tiny here
/// (it divides an isometry order).
pub(crate) fn euler_phi(mut k: u64) -> u64 {
    assert!(k >= 1);
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= k {
        if k % p == 0 {
            let mut pe = 1u64;
            while k % p == 0 {
                k /= p;
                pe *= p;
            }
            phi *= pe - pe / p;
        }
        p += 1;
    }
    if k > 1 {
        phi *= k - 1;
    }
    phi
}

/// Moebius function by trial division; 0 on non-squarefree input.
pub(crate) fn moebius(mut k: u64) -> i64 {
    assert!(k >= 1);
    let mut sign = 1i64;
    let mut p = 2u64;
    while p * p <= k {
        if k % p == 0 {
            k /= p;
            if k % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// Divisors of `n` in increasing order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// `x^k - 1` as a coefficient vector.
fn x_pow_minus_one(k: u64) -> Vec<BigInt> {
    let k = k as usize;
    let mut p = vec![BigInt::zero(); k + 1];
    p[0] = BigInt::from(-1);
    p[k] = BigInt::one();
    p
}

/// Exact polynomial long division; panics if the division leaves a
/// remainder, which cannot happen for the cyclotomic recursion.
fn div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    assert!(den[dn].is_one(), "cyclotomic divisors are monic");
    assert!(num.len() > dn);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division must be exact");
    trim(quot)
}

/// The k-th cyclotomic polynomial, ascending coefficients.
pub(crate) fn cyclotomic(k: u64) -> Vec<BigInt> {
    let mut known: Vec<(u64, Vec<BigInt>)> = Vec::new();
    for d in divisors(k) {
        let mut p = x_pow_minus_one(d);
        for (e, phi_e) in &known {
            if d % e == 0 {
                p = div_exact(&p, phi_e);
            }
        }
        known.push((d, p));
    }
    known.pop().expect("k has at least one divisor").1
}

/// Evaluate an integer polynomial at a square matrix by Horner's rule.
pub(crate) fn eval_poly_at_matrix(coeffs: &[BigInt], m: &IntMat) -> IntMat {
    let n = m.rows();
    let mut acc = IntMat::zeros(n, n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(m);
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_i64(p: &[i64]) -> Vec<BigInt> {
        trim(p.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn totient_and_moebius_values() {
        let phis: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(phis, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(euler_phi(30), 8);
        let mus: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(mus, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), [1]);
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(30), [1, 2, 3, 5, 6, 10, 15, 30]);
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), poly_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), poly_i64(&[1, 1]));
        assert_eq!(cyclotomic(3), poly_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), poly_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), poly_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), poly_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(
            cyclotomic(30),
            poly_i64(&[1, 1, 0, -1, -1, -1, 0, 1, 1]),
        );
    }

    #[test]
    fn cyclotomic_degrees_are_totients() {
        for k in 1..=40 {
            assert_eq!(cyclotomic(k).len() as u64 - 1, euler_phi(k), "k={k}");
        }
    }

    #[test]
    fn divisor_product_recovers_x_pow_minus_one() {
        for n in [12u64, 30] {
            let mut prod = poly_i64(&[1]);
            for d in divisors(n) {
                let phi_d = cyclotomic(d);
                let mut next = vec![BigInt::zero(); prod.len() + phi_d.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in phi_d.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = trim(next);
            }
            assert_eq!(prod, x_pow_minus_one(n), "n={n}");
        }
    }

    #[test]
    fn matrix_evaluation_matches_direct_expansion() {
        // p(x) = x^2 + x + 1 at the companion matrix of x^2 - x - 1.
        let m = IntMat::from_i64(&[&[0, 1], &[1, 1]]);
        let p = poly_i64(&[1, 1, 1]);
        let direct = m.mul(&m).add(&m).add(&IntMat::identity(2));
        assert_eq!(eval_poly_at_matrix(&p, &m), direct);
    }
}
