//! Complete backtracking search for an isometry with a prescribed
//! cyclotomic profile on a small definite lattice.
//!
//! Candidate images of the j-th basis vector are the lattice vectors of
//! norm exactly `G[j][j]`, enumerated completely by the short-vector
//! walk; a prefix of placed columns must reproduce the Gram matrix
//! entry-for-entry. Since a definite lattice has a finite orthogonal
//! group and every element appears as a leaf of this tree, an exhausted
//! search is a nonexistence certificate.
//!
//! Pruning never cuts a viable branch:
//! * Gram consistency is necessary by definition.
//! * The final trace must equal `sum_k m_k mu(k)` (each primitive k-th
//!   root packet contributes the Moebius value), and the remaining
//!   columns can shift the partial trace by at most the sum of the
//!   per-column maximal absolute diagonal coordinates.
//! * When the target has `m_1 = 0`, no basis vector may map to itself.
//! * When the target is a pure `Phi_3` power, any matching isometry is
//!   annihilated by `g^2 + g + 1`, so `g(v_j) = -e_j - v_j` for every
//!   placed column whose image support is fully placed.

use lattice_core::{IntMat, Lattice};
use num_bigint::BigInt;

use crate::isometry::{verify_isometry, Isometry};
use crate::profile::{cyclotomic_profile, CyclotomicProfile};
use crate::Error;

/// Default rank cap, shared with the definite isometry test of the
/// enumeration layer.
pub use enumeration_embedding::DEFAULT_DEFINITE_RANK_CAP;

/// Search with the default rank cap.
pub fn find_isometry_with_profile(
    l: &Lattice,
    target: &CyclotomicProfile,
) -> Result<Option<Isometry>, Error> {
    find_isometry_with_profile_with_cap(l, target, DEFAULT_DEFINITE_RANK_CAP)
}

/// Search for an isometry of the definite lattice `l` whose cyclotomic
/// profile equals `target`. Returns `Ok(None)` when no such isometry
/// exists — the search is exhaustive, so this is a certificate.
pub fn find_isometry_with_profile_with_cap(
    l: &Lattice,
    target: &CyclotomicProfile,
    cap: usize,
) -> Result<Option<Isometry>, Error> {
    if !l.is_definite() {
        return Err(Error::NotDefinite);
    }
    let n = l.rank();
    if n > cap {
        return Err(Error::RankCapExceeded { rank: n, cap });
    }
    // A profile whose totient-weighted sum misses the rank cannot be the
    // factorization of a degree-n characteristic polynomial.
    if target.total_rank() != n {
        return Ok(None);
    }
    // Isometries of L and L(-1) are the same matrices; enumerate on the
    // positive definite twin.
    let pos = if l.is_negative_definite() {
        l.twist(-1)?
    } else {
        l.clone()
    };
    let gram_i: Vec<Vec<i64>> = pos.gram().to_i64().ok_or(Error::EntriesTooLarge)?;
    let bound = gram_i
        .iter()
        .enumerate()
        .map(|(i, row)| row[i])
        .max()
        .expect("rank >= 1");
    let bound = u64::try_from(bound).expect("positive definite diagonals are positive");

    // Signed candidate pool and per-column index lists.
    let halves = enumeration_embedding::short_vectors(&pos, bound)?;
    let mut pool_big: Vec<Vec<BigInt>> = Vec::with_capacity(2 * halves.len());
    for sv in &halves {
        pool_big.push(sv.coords.clone());
        pool_big.push(sv.coords.iter().map(|c| -c).collect());
    }
    let pool: Vec<Vec<i64>> = pool_big
        .iter()
        .map(|v| {
            v.iter()
                .map(|c| i64::try_from(c).map_err(|_| Error::EntriesTooLarge))
                .collect::<Result<Vec<i64>, Error>>()
        })
        .collect::<Result<_, _>>()?;
    let norms: Vec<i128> = pool
        .iter()
        .map(|v| norm_i(&gram_i, v))
        .collect();

    // Dot products (e_r, v) = (G v)_r for every pool vector.
    let gw: Vec<Vec<i128>> = pool
        .iter()
        .map(|v| {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| gram_i[r][c] as i128 * v[c] as i128)
                        .sum()
                })
                .collect()
        })
        .collect();

    // A target supported on Phi_3 alone forces g^2 + g + 1 = 0: definite
    // lattices only carry finite-order (hence semisimple) isometries, so
    // the minimal polynomial divides the pure characteristic polynomial.
    // The relation pins the angle between e_j and its image:
    // (e_j, g e_j) = (g e_j, g^2 e_j) = -(e_j, g e_j) - (e_j, e_j).
    let pure_phi3 = target.multiplicities().len() == 1 && target.multiplicity(3) > 0;

    let mut cands: Vec<Vec<usize>> = Vec::with_capacity(n);
    for j in 0..n {
        let want = gram_i[j][j] as i128;
        let list: Vec<usize> = (0..pool.len())
            .filter(|&c| norms[c] == want && (!pure_phi3 || 2 * gw[c][j] == -want))
            .collect();
        if list.is_empty() {
            return Ok(None);
        }
        cands.push(list);
    }

    // Pairwise inner products of all pool vectors, flat-indexed.
    let p = pool.len();
    let pair: Vec<i128> = {
        let mut t = vec![0i128; p * p];
        for a in 0..p {
            for b in 0..p {
                t[a * p + b] = (0..n).map(|r| pool[a][r] as i128 * gw[b][r]).sum();
            }
        }
        t
    };

    // Per-column maximal |diagonal coordinate| for the trace bound.
    let diag_bound: Vec<i128> = (0..n)
        .map(|j| {
            cands[j]
                .iter()
                .map(|&c| (pool[c][j] as i128).abs())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut suffix = vec![0i128; n + 1];
    for j in (0..n).rev() {
        suffix[j] = suffix[j + 1] + diag_bound[j];
    }

    let target_trace = target.trace() as i128;
    let m1_zero = target.multiplicity(1) == 0;
    let n_order = target.order();

    let ctx = Ctx {
        n,
        gram: &gram_i,
        pool: &pool,
        pool_big: &pool_big,
        cands: &cands,
        pair: &pair,
        gw: &gw,
        pool_len: p,
        suffix: &suffix,
        target_trace,
        m1_zero,
        pure_phi3,
        n_order,
        target,
        pos: &pos,
    };
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let found = place(&ctx, &mut chosen, 0);
    match found {
        Some(matrix) => Ok(Some(
            verify_isometry(l, matrix).expect("search output preserves the form"),
        )),
        None => Ok(None),
    }
}

struct Ctx<'a> {
    n: usize,
    gram: &'a [Vec<i64>],
    pool: &'a [Vec<i64>],
    pool_big: &'a [Vec<BigInt>],
    cands: &'a [Vec<usize>],
    pair: &'a [i128],
    gw: &'a [Vec<i128>],
    pool_len: usize,
    suffix: &'a [i128],
    target_trace: i128,
    m1_zero: bool,
    pure_phi3: bool,
    n_order: u64,
    target: &'a CyclotomicProfile,
    pos: &'a Lattice,
}

fn norm_i(gram: &[Vec<i64>], v: &[i64]) -> i128 {
    let n = v.len();
    let mut acc = 0i128;
    for r in 0..n {
        for c in 0..n {
            acc += gram[r][c] as i128 * v[r] as i128 * v[c] as i128;
        }
    }
    acc
}

fn is_unit_vector(v: &[i64], j: usize) -> bool {
    v.iter().enumerate().all(|(t, &x)| x == i64::from(t == j))
}

/// `g(v_j) = -e_j - v_j` checks enabled by placing column `i`.
fn phi3_consistent(ctx: &Ctx<'_>, chosen: &[usize], i: usize) -> bool {
    for j in 0..=i {
        let vj = &ctx.pool[chosen[j]];
        // Only relations that involve the new column (or are about it)
        // need a fresh look; earlier ones were checked earlier.
        if j != i && vj[i] == 0 {
            continue;
        }
        if vj[i + 1..].iter().any(|&x| x != 0) {
            continue;
        }
        for coord in 0..ctx.n {
            let mut acc = 0i128;
            for (t, &cjt) in vj.iter().enumerate().take(i + 1) {
                if cjt != 0 {
                    acc += cjt as i128 * ctx.pool[chosen[t]][coord] as i128;
                }
            }
            let e_term = i128::from(coord == j);
            if acc != -e_term - vj[coord] as i128 {
                return false;
            }
        }
    }
    true
}

fn place(ctx: &Ctx<'_>, chosen: &mut Vec<usize>, i: usize) -> Option<IntMat> {
    if i == ctx.n {
        let cols: Vec<Vec<BigInt>> = chosen
            .iter()
            .map(|&c| ctx.pool_big[c].clone())
            .collect();
        let matrix = IntMat::from_cols(&cols);
        let iso = verify_isometry(ctx.pos, matrix)
            .expect("prefix checks enforce the full Gram condition");
        return match cyclotomic_profile(&iso, ctx.n_order) {
            Ok(p) if p == *ctx.target => Some(iso.into_matrix()),
            _ => None,
        };
    }
    let partial_trace: i128 = chosen
        .iter()
        .enumerate()
        .map(|(j, &c)| ctx.pool[c][j] as i128)
        .sum();
    for &c in &ctx.cands[i] {
        let mut ok = true;
        for (j, &cj) in chosen.iter().enumerate() {
            if ctx.pair[cj * ctx.pool_len + c] != ctx.gram[j][i] as i128 {
                ok = false;
                break;
            }
            // Pure Phi_3 pins the cross terms as well:
            // (g e_j, e_i) + (e_j, g e_i) = (e_j, (g^2 + g) e_i)
            //                             = -(e_j, e_i).
            if ctx.pure_phi3 && ctx.gw[cj][i] + ctx.gw[c][j] != -(ctx.gram[j][i] as i128) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let trace_now = partial_trace + ctx.pool[c][i] as i128;
        if (ctx.target_trace - trace_now).abs() > ctx.suffix[i + 1] {
            continue;
        }
        if ctx.m1_zero && is_unit_vector(&ctx.pool[c], i) {
            continue;
        }
        chosen.push(c);
        if !ctx.pure_phi3 || phi3_consistent(ctx, chosen, i) {
            if let Some(found) = place(ctx, chosen, i + 1) {
                chosen.pop();
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::order_of;
    use crate::profile::fixed_sublattice;
    use lattice_core::{make_catalog, CatalogId};
    use std::collections::BTreeMap;

    fn profile_of(pairs: &[(u64, usize)]) -> CyclotomicProfile {
        let map: BTreeMap<u64, usize> = pairs.iter().copied().collect();
        CyclotomicProfile::from_multiplicities(map).unwrap()
    }

    fn cat(id: CatalogId, param: Option<i64>) -> Lattice {
        make_catalog(id, param).unwrap()
    }

    #[test]
    fn a2_carries_an_order_three_isometry() {
        let a2 = cat(CatalogId::A, Some(2));
        let target = profile_of(&[(3, 1)]);
        let found = find_isometry_with_profile(&a2, &target).unwrap().unwrap();
        assert_eq!(order_of(&found, 10), Some(3));
        assert_eq!(cyclotomic_profile(&found, 10).unwrap(), target);
    }

    #[test]
    fn a2_carries_a_reflection_profile() {
        let a2 = cat(CatalogId::A, Some(2));
        let target = profile_of(&[(1, 1), (2, 1)]);
        let found = find_isometry_with_profile(&a2, &target).unwrap().unwrap();
        assert_eq!(fixed_sublattice(&found).unwrap().rank(), 1);
    }

    #[test]
    fn totient_inconsistent_targets_are_not_found() {
        let a1 = cat(CatalogId::A, Some(1));
        assert!(find_isometry_with_profile(&a1, &profile_of(&[(3, 1)]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn exhaustion_certifies_nonexistence() {
        // diag(2, 4) admits no isometry with g^2 = -1: the first basis
        // vector would need an orthogonal partner of norm 2, but the only
        // norm-2 vectors are +-e_1 itself.
        let l = Lattice::from_i64(&[&[2, 0], &[0, 4]]).unwrap();
        assert!(find_isometry_with_profile(&l, &profile_of(&[(4, 1)]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn negative_definite_input_searches_its_twist() {
        let a2m = cat(CatalogId::A, Some(2)).twist(-1).unwrap();
        let target = profile_of(&[(3, 1)]);
        let found = find_isometry_with_profile(&a2m, &target).unwrap().unwrap();
        assert_eq!(found.lattice().gram(), a2m.gram());
        assert_eq!(cyclotomic_profile(&found, 10).unwrap(), target);
    }

    #[test]
    fn minus_identity_profile_is_always_found() {
        let d4 = cat(CatalogId::D, Some(4));
        let found = find_isometry_with_profile(&d4, &profile_of(&[(2, 4)]))
            .unwrap()
            .unwrap();
        assert_eq!(order_of(&found, 10), Some(2));
    }

    #[test]
    fn input_guards() {
        let u = cat(CatalogId::U, None);
        assert!(matches!(
            find_isometry_with_profile(&u, &profile_of(&[(1, 2)])),
            Err(Error::NotDefinite)
        ));
        let a9 = cat(CatalogId::A, Some(9));
        assert!(matches!(
            find_isometry_with_profile(&a9, &profile_of(&[(1, 9)])),
            Err(Error::RankCapExceeded { rank: 9, cap: 8 })
        ));
    }
}
