//! Realized degrees and the gcd invariant d(L) of an even lattice.
//!
//! A primitive vector `v` (gcd of coordinates 1) with `(v, v) > 0` realizes
//! the degree `(v, v) / 2`.  Writing `G` for the Gram matrix,
//!
//! ```text
//! (v, v) / 2 = sum_i (g_ii / 2) v_i^2 + sum_{i<j} g_ij v_i v_j,
//! ```
//!
//! so every realized degree is an integer multiple of the content
//! `m = gcd({g_ii / 2} and {g_ij : i < j})`.  The gcd of realized degrees
//! therefore can never drop below `m`: the moment the running gcd reaches
//! `m` during enumeration, its value over the full (infinite) set of
//! primitive vectors is already determined, and [`d_value`] reports it as
//! exact.  When that certificate is not reached, the gcd over the box is
//! reported together with a stabilization flag comparing the box against the
//! box enlarged by two.
//!
//! Enumeration walks vectors by increasing L1 norm, one representative per
//! antipodal pair, bounded by the coefficient box in the sup norm, under a
//! global node budget.  Running out of budget is a loud error, never a
//! silently truncated answer.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use lattice_core::Lattice;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::Error;

/// Coefficient box for enumerations: coordinates range over `[-bound, bound]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBox {
    bound: u32,
}

impl SearchBox {
    /// Creates a box with the given bound; the bound must be at least 1.
    pub fn new(bound: u32) -> SearchBox {
        assert!(bound >= 1, "search box bound must be at least 1");
        SearchBox { bound }
    }

    /// The sup-norm bound on coefficients.
    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Returns the box enlarged by `extra` on each side.
    pub fn enlarged(&self, extra: u32) -> SearchBox {
        SearchBox { bound: self.bound + extra }
    }
}

impl Default for SearchBox {
    /// The default box bounds coefficients by 6.
    fn default() -> SearchBox {
        SearchBox { bound: 6 }
    }
}

/// Default node budget for degree enumerations.
pub const DEFAULT_NODE_BUDGET: u64 = 4_000_000;

/// Node allowance shared by the sweeps of a single operation.
struct Budget {
    remaining: u64,
    total: u64,
}

impl Budget {
    fn new(total: u64) -> Budget {
        Budget { remaining: total, total }
    }

    fn spend(&mut self) -> Result<(), Error> {
        if self.remaining == 0 {
            Err(Error::BudgetExceeded { budget: self.total })
        } else {
            self.remaining -= 1;
            Ok(())
        }
    }
}

/// Result of a [`d_value`] computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DValue {
    /// Gcd of the degrees realized within the searched box.
    pub gcd: BigInt,
    /// The content of the form, a divisor of every realized degree.
    pub certified_lower_bound: BigInt,
    /// Whether the gcd was unchanged when the box grew by two.  Certified
    /// exact values are always stabilized.
    pub stabilized: bool,
}

impl DValue {
    /// True when the reported gcd provably equals the gcd over all primitive
    /// vectors, which happens exactly when it meets the content bound.
    pub fn is_exact(&self) -> bool {
        self.gcd == self.certified_lower_bound
    }
}

/// Walks canonical primitive integer vectors (first nonzero coordinate
/// positive, coordinates bounded by `box_` in sup norm) in order of
/// increasing L1 norm, calling `visit` on each.  Each recursion node costs
/// one unit of `budget`; exhausting it aborts with an error.
fn for_each_canonical_vector(
    rank: usize,
    box_: SearchBox,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>, Error> {
    let bound = i64::from(box_.bound());
    let max_l1 = bound * rank as i64;
    let mut coords = vec![0i64; rank];
    for shell in 1..=max_l1 {
        let flow = shell_rec(&mut coords, 0, shell, false, bound, budget, visit)?;
        if flow.is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    Ok(ControlFlow::Continue(()))
}

fn shell_rec(
    coords: &mut Vec<i64>,
    pos: usize,
    remaining: i64,
    nonzero_seen: bool,
    bound: i64,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>, Error> {
    budget.spend()?;
    let n = coords.len();
    if pos == n {
        debug_assert_eq!(remaining, 0);
        return Ok(visit(coords));
    }
    // Later positions absorb at most (n - pos - 1) * bound, so this one
    // must take a magnitude between lo and cap for the shell to close.
    let slots_after = (n - pos - 1) as i64 * bound;
    let cap = remaining.min(bound);
    let lo = (remaining - slots_after).max(0);
    if lo > cap {
        return Ok(ControlFlow::Continue(()));
    }
    let mut values: Vec<i64> = Vec::with_capacity(2 * (cap - lo) as usize + 2);
    for v in lo.max(1)..=cap {
        values.push(v);
        if nonzero_seen {
            values.push(-v);
        }
    }
    if lo == 0 {
        values.insert(0, 0);
    }
    for v in values {
        coords[pos] = v;
        let flow = shell_rec(
            coords,
            pos + 1,
            remaining - v.abs(),
            nonzero_seen || v != 0,
            bound,
            budget,
            visit,
        )?;
        if flow.is_break() {
            coords[pos] = 0;
            return Ok(ControlFlow::Break(()));
        }
    }
    coords[pos] = 0;
    Ok(ControlFlow::Continue(()))
}

fn gcd_of_coords(coords: &[i64]) -> i64 {
    coords.iter().fold(0i64, |g, &c| g.gcd(&c))
}

/// Norm evaluator with an i128 fast path when the Gram entries fit in i64;
/// coefficients stay tiny (bounded by the box), so the products cannot
/// overflow 128 bits.
struct NormEval<'a> {
    l: &'a Lattice,
    fast: Option<Vec<Vec<i64>>>,
}

impl<'a> NormEval<'a> {
    fn new(l: &'a Lattice) -> NormEval<'a> {
        NormEval { l, fast: l.gram().to_i64() }
    }

    fn norm(&self, coords: &[i64]) -> BigInt {
        match &self.fast {
            Some(g) => {
                let mut s: i128 = 0;
                for (i, &ci) in coords.iter().enumerate() {
                    if ci == 0 {
                        continue;
                    }
                    for (j, &cj) in coords.iter().enumerate() {
                        if cj != 0 {
                            s += g[i][j] as i128 * ci as i128 * cj as i128;
                        }
                    }
                }
                BigInt::from(s)
            }
            None => {
                let v: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
                self.l.norm_of(&v)
            }
        }
    }
}

/// The content `gcd({g_ii / 2} and {g_ij : i < j})` of an even Gram matrix,
/// a divisor of every realized degree.
fn content(l: &Lattice) -> BigInt {
    let g = l.gram();
    let n = l.rank();
    let mut m = BigInt::zero();
    for i in 0..n {
        m = m.gcd(&(&g[(i, i)] / BigInt::from(2)));
        for j in (i + 1)..n {
            m = m.gcd(&g[(i, j)]);
        }
    }
    m
}

fn require_even(l: &Lattice) -> Result<(), Error> {
    if l.is_even() {
        Ok(())
    } else {
        Err(Error::OddLattice)
    }
}

/// Collects every degree realized by a primitive vector inside the box.
///
/// Errors if the lattice is odd or if the enumeration exceeds its node
/// budget; the latter means the box is too large to sweep exhaustively at
/// this rank, not that the answer is empty.
pub fn realized_degrees(l: &Lattice, box_: SearchBox) -> Result<BTreeSet<BigInt>, Error> {
    realized_degrees_with_budget(l, box_, DEFAULT_NODE_BUDGET)
}

/// [`realized_degrees`] with an explicit node budget.
pub fn realized_degrees_with_budget(
    l: &Lattice,
    box_: SearchBox,
    budget: u64,
) -> Result<BTreeSet<BigInt>, Error> {
    require_even(l)?;
    let eval = NormEval::new(l);
    let mut budget = Budget::new(budget);
    let mut degrees = BTreeSet::new();
    let _ = for_each_canonical_vector(l.rank(), box_, &mut budget, &mut |coords| {
        if gcd_of_coords(coords) == 1 {
            let norm = eval.norm(coords);
            if norm.is_positive() {
                degrees.insert(norm / BigInt::from(2));
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(degrees)
}

/// Reports whether `d` is realized by some primitive vector inside the box.
///
/// A `false` answer means not realized within the box; it is not a
/// nonexistence claim for the lattice as a whole.
pub fn degree_realized(l: &Lattice, box_: SearchBox, d: &BigInt) -> Result<bool, Error> {
    require_even(l)?;
    let eval = NormEval::new(l);
    let target = d * BigInt::from(2);
    let mut budget = Budget::new(DEFAULT_NODE_BUDGET);
    let mut hit = false;
    let _ = for_each_canonical_vector(l.rank(), box_, &mut budget, &mut |coords| {
        if gcd_of_coords(coords) == 1 && eval.norm(coords) == target {
            hit = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(hit)
}

/// Gcd of realized degrees over one box, early-exiting once the running gcd
/// reaches the content certificate.  Returns `(gcd, certified)` or `None`
/// if no positive-norm primitive vector was seen.
fn gcd_over_box(
    l: &Lattice,
    box_: SearchBox,
    cert: &BigInt,
    budget: &mut Budget,
) -> Result<Option<(BigInt, bool)>, Error> {
    let eval = NormEval::new(l);
    let mut running: Option<BigInt> = None;
    let mut certified = false;
    let _ = for_each_canonical_vector(l.rank(), box_, budget, &mut |coords| {
        if gcd_of_coords(coords) == 1 {
            let norm = eval.norm(coords);
            if norm.is_positive() {
                let degree = norm / BigInt::from(2);
                let g = match running.take() {
                    None => degree,
                    Some(prev) => prev.gcd(&degree),
                };
                let done = g == *cert;
                running = Some(g);
                if done {
                    certified = true;
                    return ControlFlow::Break(());
                }
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(running.map(|g| (g, certified)))
}

/// Computes the gcd of realized degrees.
///
/// The enumeration stops early with an exact answer as soon as the running
/// gcd meets the content certificate (see the module documentation).
/// Otherwise the full box and the box enlarged by two are both swept and the
/// stabilization flag records whether they agree.
///
/// Errors if the lattice is odd, if no degree is realized within the box, or
/// if the node budget is exhausted.
pub fn d_value(l: &Lattice, box_: SearchBox) -> Result<DValue, Error> {
    require_even(l)?;
    let cert = content(l);
    let mut budget = Budget::new(DEFAULT_NODE_BUDGET);
    let first = gcd_over_box(l, box_, &cert, &mut budget)?;
    let (gcd, certified) = match first {
        None => return Err(Error::EmptyDegreeSet),
        Some(pair) => pair,
    };
    if certified {
        return Ok(DValue {
            gcd,
            certified_lower_bound: cert,
            stabilized: true,
        });
    }
    let second = gcd_over_box(l, box_.enlarged(2), &cert, &mut budget)?;
    let stabilized = match second {
        None => false,
        Some((g2, _)) => g2 == gcd,
    };
    Ok(DValue {
        gcd,
        certified_lower_bound: cert,
        stabilized,
    })
}
