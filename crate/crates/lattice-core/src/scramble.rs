//! Deterministic unimodular basis changes.
//!
//! Tests and search harnesses need reproducible "random" unimodular
//! matrices. A tiny seeded generator keeps runs identical across platforms
//! without pulling in an RNG dependency.

use num_bigint::BigInt;
use num_traits::One;

use crate::matrix::IntMat;

/// SplitMix64 pseudo-random generator (Steele, Lea, Flood 2014).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n` (n > 0), by rejection.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    /// Uniform value in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Random unimodular `n x n` matrix built from `steps` elementary row
/// operations (shear by +-1, swap, negate) on the identity; |det| = 1.
///
/// Shears with unit coefficients keep entry growth tame, so scrambled Gram
/// matrices remain within reach of exact enumeration.
pub fn random_unimodular(n: usize, steps: usize, seed: u64) -> IntMat {
    let mut rng = SplitMix64::new(seed);
    let mut m = IntMat::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.below(n as u64) as usize;
        let mut j = rng.below(n as u64) as usize;
        while j == i {
            j = rng.below(n as u64) as usize;
        }
        match rng.below(4) {
            0 | 1 => {
                let s = if rng.below(2) == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                for t in 0..n {
                    let add = &s * &m[(i, t)];
                    m[(j, t)] += add;
                }
            }
            2 => {
                for t in 0..n {
                    let a = m[(i, t)].clone();
                    let b = m[(j, t)].clone();
                    m[(i, t)] = b;
                    m[(j, t)] = a;
                }
            }
            _ => {
                for t in 0..n {
                    let v = -m[(i, t)].clone();
                    m[(i, t)] = v;
                }
            }
        }
    }
    m
}
