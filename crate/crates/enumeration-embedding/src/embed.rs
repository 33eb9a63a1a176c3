//! Primitive embeddings, orthogonal complements, and invariant matching.
//!
//! An embedding of `M` into `L` is a matrix `W` whose columns express the
//! images of the basis of `M` in the coordinates of `L` and which pulls the
//! Gram matrix of `L` back to that of `M`, i.e. `W^t G_L W = G_M`.  The
//! embedding is primitive when the image subgroup is a direct summand of
//! `L`, equivalently when every Smith invariant factor of `W` equals 1.
//!
//! The search in [`find_primitive_embedding`] places image columns one at a
//! time.  Against a positive (or negative) definite target the candidates
//! for each column come from a complete short-vector enumeration at the
//! required norm.  Against an indefinite target the linear conditions
//! imposed by the already-placed columns are solved exactly over the
//! integers; candidates are the particular solution plus integer kernel
//! combinations, walked by increasing L1 norm inside the coefficient box.
//! A `None` result means no embedding was found within the box and budget;
//! it is never a claim that no embedding exists.

use std::cell::Cell;
use std::ops::ControlFlow;

use lattice_core::{IntMat, Lattice};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use normal_forms::{discriminant_form, disc_forms_equivalent, integer_kernel, smith_normal_form, solve_integer};

use crate::degrees::SearchBox;
use crate::shortvec::short_vectors;
use crate::Error;

/// Node budget for embedding searches; exhausting it yields a not-found
/// result rather than an error, since not-found carries no nonexistence
/// claim.
const EMBED_NODE_BUDGET: u64 = 2_000_000;

/// An isometric embedding of a source lattice into a target lattice.
#[derive(Clone, Debug)]
pub struct EmbeddingMap {
    source: Lattice,
    target: Lattice,
    matrix: IntMat,
}

impl EmbeddingMap {
    /// Wraps a candidate embedding matrix, checking only its shape: rows
    /// must match the target rank and columns the source rank.  Use
    /// [`verify_primitive_embedding`] for the Gram and primitivity checks.
    pub fn new(source: Lattice, target: Lattice, matrix: IntMat) -> Result<EmbeddingMap, Error> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::DimensionMismatch {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: target.rank(),
                expected_cols: source.rank(),
            });
        }
        Ok(EmbeddingMap { source, target, matrix })
    }

    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn target(&self) -> &Lattice {
        &self.target
    }

    /// Image coordinates, one column per source basis vector.
    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }
}

/// Checks that the embedding respects the bilinear forms and that its image
/// is a direct summand (torsion-free cokernel).
///
/// Returns `false` when either condition fails; shape errors are impossible
/// because [`EmbeddingMap::new`] enforces the dimensions.
pub fn verify_primitive_embedding(e: &EmbeddingMap) -> bool {
    let pulled = e.matrix.transpose().mul(e.target.gram()).mul(&e.matrix);
    if pulled != *e.source.gram() {
        return false;
    }
    let snf = smith_normal_form(&e.matrix);
    snf.rank() == e.source.rank() && snf.nontrivial_factors().is_empty()
}

/// Computes the orthogonal complement of a primitive embedding.
///
/// Returns the complement as a lattice together with its basis matrix in
/// target coordinates.  The basis spans the saturated kernel of pairing
/// against the image, so the complement is itself primitive in the target.
///
/// Errors with [`Error::NotPrimitive`] if the embedding fails verification,
/// and propagates a rank error if the complement is zero (full-rank image).
pub fn orthogonal_complement(e: &EmbeddingMap) -> Result<(Lattice, IntMat), Error> {
    if !verify_primitive_embedding(e) {
        return Err(Error::NotPrimitive);
    }
    // x is orthogonal to the image iff W^t G x = 0.
    let pairing = e.matrix.transpose().mul(e.target.gram());
    let basis = integer_kernel(&pairing);
    let gram = basis.transpose().mul(e.target.gram()).mul(&basis);
    let mut lattice = Lattice::new(gram)?;
    if let Some(name) = e.source.label() {
        lattice = lattice.with_label(format!("{name}^perp"));
    }
    Ok((lattice, basis))
}

/// Compares rank, signature, parity, and discriminant forms of two even
/// lattices.
///
/// The cheap invariants are compared first and a mismatch yields `false`
/// without touching discriminant machinery, so mixed-parity inputs are
/// fine; two odd lattices whose cheap invariants agree are rejected with an
/// error because their discriminant quadratic form is not defined here.
pub fn invariants_match(l1: &Lattice, l2: &Lattice) -> Result<bool, Error> {
    if l1.rank() != l2.rank()
        || l1.signature() != l2.signature()
        || l1.is_even() != l2.is_even()
    {
        return Ok(false);
    }
    let f1 = discriminant_form(l1)?;
    let f2 = discriminant_form(l2)?;
    Ok(disc_forms_equivalent(&f1, &f2)?)
}

enum WalkEnd {
    Exhausted,
    Stopped,
    BudgetOut,
}

/// Visits integer vectors of the given dimension with coordinates bounded by
/// `bound` in sup norm, ordered by increasing L1 norm starting from the zero
/// vector, both signs included.
fn walk_signed_shells(
    dims: usize,
    bound: i64,
    budget: &Cell<u64>,
    visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> WalkEnd {
    let mut coords = vec![0i64; dims];
    if dims == 0 {
        return match visit(&coords) {
            ControlFlow::Break(()) => WalkEnd::Stopped,
            ControlFlow::Continue(()) => WalkEnd::Exhausted,
        };
    }
    let max_l1 = bound * dims as i64;
    for shell in 0..=max_l1 {
        match signed_rec(&mut coords, 0, shell, bound, budget, visit) {
            Some(ControlFlow::Break(())) => return WalkEnd::Stopped,
            Some(ControlFlow::Continue(())) => {}
            None => return WalkEnd::BudgetOut,
        }
    }
    WalkEnd::Exhausted
}

fn signed_rec(
    coords: &mut Vec<i64>,
    pos: usize,
    remaining: i64,
    bound: i64,
    budget: &Cell<u64>,
    visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> Option<ControlFlow<()>> {
    if budget.get() == 0 {
        return None;
    }
    budget.set(budget.get() - 1);
    let n = coords.len();
    if pos == n {
        debug_assert_eq!(remaining, 0);
        return Some(visit(coords));
    }
    let slots_after = (n - pos - 1) as i64 * bound;
    let cap = remaining.min(bound);
    let lo = (remaining - slots_after).max(0);
    if lo > cap {
        return Some(ControlFlow::Continue(()));
    }
    for mag in lo..=cap {
        for sign in [1i64, -1] {
            if mag == 0 && sign < 0 {
                continue;
            }
            coords[pos] = sign * mag;
            let flow = signed_rec(coords, pos + 1, remaining - mag, bound, budget, visit)?;
            if flow.is_break() {
                coords[pos] = 0;
                return Some(ControlFlow::Break(()));
            }
        }
    }
    coords[pos] = 0;
    Some(ControlFlow::Continue(()))
}

/// Searches for a primitive isometric embedding of `m` into `l` with image
/// coordinates bounded by the box.
///
/// Definite targets use complete short-vector candidate lists; indefinite
/// targets solve the linear conditions from already-placed columns exactly
/// and walk kernel combinations.  `Ok(None)` means nothing was found within
/// the box and node budget.
pub fn find_primitive_embedding(
    m: &Lattice,
    l: &Lattice,
    box_: SearchBox,
) -> Result<Option<EmbeddingMap>, Error> {
    if m.rank() > l.rank() {
        return Ok(None);
    }
    // An isometric image restricts the ambient form to a subspace with the
    // signature of the source, so each inertia index must fit (Sylvester),
    // and an even ambient has no odd sublattices.
    let (sm, sl) = (m.signature(), l.signature());
    if sm.pos > sl.pos || sm.neg > sl.neg || (l.is_even() && !m.is_even()) {
        return Ok(None);
    }
    if l.is_negative_definite() {
        // An embedding into L is the same matrix as an embedding of the
        // sign-flipped source into the sign-flipped target.
        let m_flip = m.twist(-1)?;
        let l_flip = l.twist(-1)?;
        return match find_primitive_embedding(&m_flip, &l_flip, box_)? {
            None => Ok(None),
            Some(e) => Ok(Some(EmbeddingMap::new(m.clone(), l.clone(), e.matrix)?)),
        };
    }
    let budget = Cell::new(EMBED_NODE_BUDGET);
    let columns = if l.is_positive_definite() {
        definite_search(m, l, &budget)?
    } else {
        indefinite_search(m, l, box_, &budget)?
    };
    match columns {
        None => Ok(None),
        Some(cols) => {
            let e = EmbeddingMap::new(m.clone(), l.clone(), IntMat::from_cols(&cols))?;
            debug_assert!(verify_primitive_embedding(&e));
            Ok(Some(e))
        }
    }
}

/// Inner products of a candidate against the placed columns, compared to the
/// required Gram column.
fn inners_match(placed_gw: &[Vec<BigInt>], cand: &[BigInt], gm: &IntMat, col: usize) -> bool {
    for (j, gw) in placed_gw.iter().enumerate() {
        let mut s = BigInt::zero();
        for (a, b) in gw.iter().zip(cand) {
            s += a * b;
        }
        if s != gm[(j, col)] {
            return false;
        }
    }
    true
}

fn definite_search(
    m: &Lattice,
    l: &Lattice,
    budget: &Cell<u64>,
) -> Result<Option<Vec<Vec<BigInt>>>, Error> {
    let k = m.rank();
    let gm = m.gram();
    let mut norms: Vec<u64> = Vec::with_capacity(k);
    for i in 0..k {
        let d = &gm[(i, i)];
        if !d.is_positive() {
            return Ok(None);
        }
        match d.to_u64() {
            Some(v) => norms.push(v),
            // A norm beyond u64 is beyond any search we would run.
            None => return Ok(None),
        }
    }
    let max_norm = *norms.iter().max().expect("source rank is positive");
    let reps = short_vectors(l, max_norm)?;
    // Candidates per column: vectors of the exact required norm, each sign.
    let candidates: Vec<Vec<Vec<BigInt>>> = norms
        .iter()
        .map(|&d| {
            let want = BigInt::from(d);
            let mut list = Vec::new();
            for sv in &reps {
                if sv.norm == want {
                    list.push(sv.coords.clone());
                    list.push(sv.coords.iter().map(|x| -x.clone()).collect());
                }
            }
            list
        })
        .collect();

    let mut placed: Vec<Vec<BigInt>> = Vec::with_capacity(k);
    let mut placed_gw: Vec<Vec<BigInt>> = Vec::with_capacity(k);
    fn rec(
        m: &Lattice,
        l: &Lattice,
        candidates: &[Vec<Vec<BigInt>>],
        placed: &mut Vec<Vec<BigInt>>,
        placed_gw: &mut Vec<Vec<BigInt>>,
        budget: &Cell<u64>,
    ) -> Option<Vec<Vec<BigInt>>> {
        let k = m.rank();
        let i = placed.len();
        if i == k {
            let e = EmbeddingMap::new(m.clone(), l.clone(), IntMat::from_cols(placed))
                .expect("shape is correct by construction");
            if verify_primitive_embedding(&e) {
                return Some(placed.clone());
            }
            return None;
        }
        for cand in &candidates[i] {
            if budget.get() == 0 {
                return None;
            }
            budget.set(budget.get() - 1);
            if !inners_match(placed_gw, cand, m.gram(), i) {
                continue;
            }
            placed.push(cand.clone());
            placed_gw.push(l.gram().mul_vec(cand));
            let hit = rec(m, l, candidates, placed, placed_gw, budget);
            placed.pop();
            placed_gw.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
    Ok(rec(m, l, &candidates, &mut placed, &mut placed_gw, budget))
}

fn indefinite_search(
    m: &Lattice,
    l: &Lattice,
    box_: SearchBox,
    budget: &Cell<u64>,
) -> Result<Option<Vec<Vec<BigInt>>>, Error> {
    let mut placed: Vec<Vec<BigInt>> = Vec::new();
    let mut placed_gw: Vec<Vec<BigInt>> = Vec::new();
    let found = indef_rec(m, l, box_, &mut placed, &mut placed_gw, budget);
    Ok(found)
}

fn indef_rec(
    m: &Lattice,
    l: &Lattice,
    box_: SearchBox,
    placed: &mut Vec<Vec<BigInt>>,
    placed_gw: &mut Vec<Vec<BigInt>>,
    budget: &Cell<u64>,
) -> Option<Vec<Vec<BigInt>>> {
    let k = m.rank();
    let n = l.rank();
    let i = placed.len();
    if i == k {
        let e = EmbeddingMap::new(m.clone(), l.clone(), IntMat::from_cols(placed))
            .expect("shape is correct by construction");
        if verify_primitive_embedding(&e) {
            return Some(placed.clone());
        }
        return None;
    }
    let gm = m.gram();
    // Solve the linear conditions (w_j, x) = gm[j][i] for j < i.
    let (particular, kernel) = if i == 0 {
        (vec![BigInt::zero(); n], IntMat::identity(n))
    } else {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(i);
        for gw in placed_gw.iter() {
            rows.push(gw.clone());
        }
        let a = IntMat::from_rows(rows);
        let rhs: Vec<BigInt> = (0..i).map(|j| gm[(j, i)].clone()).collect();
        match solve_integer(&a, &rhs) {
            None => return None,
            Some(x0) => (x0, integer_kernel(&a)),
        }
    };
    let dims = kernel.cols();
    let bound = i64::from(box_.bound());
    let want_norm = gm[(i, i)].clone();
    let box_big = BigInt::from(bound);
    let mut result: Option<Vec<Vec<BigInt>>> = None;
    walk_signed_shells(dims, bound, budget, &mut |y| {
        let mut x = particular.clone();
        for (t, &yt) in y.iter().enumerate() {
            if yt != 0 {
                let yt_big = BigInt::from(yt);
                for r in 0..n {
                    x[r] += &yt_big * &kernel[(r, t)];
                }
            }
        }
        if x.iter().all(|v| v.is_zero()) {
            return ControlFlow::Continue(());
        }
        if x.iter().any(|v| v.abs() > box_big) {
            return ControlFlow::Continue(());
        }
        if l.norm_of(&x) != want_norm {
            return ControlFlow::Continue(());
        }
        placed.push(x.clone());
        placed_gw.push(l.gram().mul_vec(&x));
        let hit = indef_rec(m, l, box_, placed, placed_gw, budget);
        placed.pop();
        placed_gw.pop();
        match hit {
            Some(cols) => {
                result = Some(cols);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    result
}
