//! Smith normal form and its standard consequences: integer kernels,
//! saturation, and integer linear solving.
//!
//! Pivot rule: the entry of smallest nonzero absolute value in the
//! remaining block, ties broken by lowest row index then lowest column
//! index. The rule is what makes golden tests reproducible; correctness
//! does not depend on it.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use lattice_core::IntMat;

/// Smith normal form `left * M * right = diag` with `d_1 | d_2 | ...`,
/// zeros last, all entries nonnegative. `left_inv` and `right_inv` are the
/// exact inverses of the unimodular transforms, tracked during reduction.
#[derive(Clone, Debug)]
pub struct SNFDecomposition {
    pub left: IntMat,
    pub diag: Vec<BigInt>,
    pub right: IntMat,
    pub left_inv: IntMat,
    pub right_inv: IntMat,
    rows: usize,
    cols: usize,
}

impl SNFDecomposition {
    /// The diagonal as a rectangular matrix of the input's shape.
    pub fn diag_matrix(&self) -> IntMat {
        let mut d = IntMat::zeros(self.rows, self.cols);
        for (i, v) in self.diag.iter().enumerate() {
            d[(i, i)] = v.clone();
        }
        d
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors greater than 1.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diag
            .iter()
            .filter(|d| **d > BigInt::from(1))
            .cloned()
            .collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    left: Vec<Vec<BigInt>>,
    left_inv: Vec<Vec<BigInt>>,
    right: Vec<Vec<BigInt>>,
    right_inv: Vec<Vec<BigInt>>,
}

impl Work {
    fn new(m: &IntMat) -> Self {
        let rows = m.rows();
        let cols = m.cols();
        let ident = |n: usize| -> Vec<Vec<BigInt>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigInt::from(u8::from(i == j)))
                        .collect()
                })
                .collect()
        };
        Work {
            a: (0..rows).map(|i| m.row(i)).collect(),
            rows,
            cols,
            left: ident(rows),
            left_inv: ident(rows),
            right: ident(cols),
            right_inv: ident(cols),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.left.swap(i, j);
        for row in self.left_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        for row in self.right.iter_mut() {
            row.swap(i, j);
        }
        self.right_inv.swap(i, j);
    }

    /// `row_i -= q * row_t`
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * &self.a[t][j];
            self.a[i][j] -= v;
        }
        for j in 0..self.rows {
            let v = q * &self.left[t][j];
            self.left[i][j] -= v;
        }
        for row in self.left_inv.iter_mut() {
            let v = q * &row[i];
            row[t] += v;
        }
    }

    /// `col_j -= q * col_t`
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        for row in self.a.iter_mut() {
            let v = q * &row[t];
            row[j] -= v;
        }
        for row in self.right.iter_mut() {
            let v = q * &row[t];
            row[j] -= v;
        }
        for k in 0..self.cols {
            let v = q * &self.right_inv[j][k];
            self.right_inv[t][k] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in self.a[i].iter_mut() {
            *v = -std::mem::take(v);
        }
        for v in self.left[i].iter_mut() {
            *v = -std::mem::take(v);
        }
        for row in self.left_inv.iter_mut() {
            row[i] = -std::mem::take(&mut row[i]);
        }
    }

    /// `row_t += row_i` (used for the divisibility fixup).
    fn row_add(&mut self, t: usize, i: usize) {
        let q = BigInt::from(-1);
        self.row_sub(t, i, &q);
    }

    /// Smallest-|entry| pivot in the block `[t.., t..]`, ties by lowest row
    /// then column.
    fn select_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if self.a[i][j].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if self.a[i][j].abs() < self.a[bi][bj].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

/// Smith normal form of an arbitrary rectangular integer matrix.
pub fn smith_normal_form(m: &IntMat) -> SNFDecomposition {
    let mut w = Work::new(m);
    let steps = w.rows.min(w.cols);
    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = w.select_pivot(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clear = true;
            for i in t + 1..w.rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = &w.a[i][t] / &w.a[t][t];
                if !q.is_zero() {
                    w.row_sub(i, t, &q);
                }
                if !w.a[i][t].is_zero() {
                    clear = false;
                }
            }
            for j in t + 1..w.cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = &w.a[t][j] / &w.a[t][t];
                if !q.is_zero() {
                    w.col_sub(j, t, &q);
                }
                if !w.a[t][j].is_zero() {
                    clear = false;
                }
            }
            if !clear {
                // Residues smaller than the pivot remain; reselect.
                let (pi, pj) = w.select_pivot(t).expect("nonzero residue exists");
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            // Row and column are clear; enforce d_t | (remaining block).
            let mut fixup = None;
            'scan: for i in t + 1..w.rows {
                for j in t + 1..w.cols {
                    if !(&w.a[i][j] % &w.a[t][t]).is_zero() {
                        fixup = Some(i);
                        break 'scan;
                    }
                }
            }
            match fixup {
                Some(i) => w.row_add(t, i),
                None => break,
            }
        }
        t += 1;
    }
    for i in 0..steps {
        if w.a[i][i].is_negative() {
            w.negate_row(i);
        }
    }
    let diag: Vec<BigInt> = (0..steps).map(|i| w.a[i][i].clone()).collect();
    let out = SNFDecomposition {
        left: IntMat::from_rows(w.left),
        diag,
        right: IntMat::from_rows(w.right),
        left_inv: IntMat::from_rows(w.left_inv),
        right_inv: IntMat::from_rows(w.right_inv),
        rows: w.rows,
        cols: w.cols,
    };
    debug_assert_eq!(out.left.mul(m).mul(&out.right), out.diag_matrix());
    debug_assert_eq!(out.left.mul(&out.left_inv), IntMat::identity(w.rows));
    debug_assert_eq!(out.right.mul(&out.right_inv), IntMat::identity(w.cols));
    out
}

/// Basis of the integer kernel `{ x : M x = 0 }`, as matrix columns.
///
/// The kernel of an integer matrix is automatically saturated, so the
/// returned basis spans a primitive sublattice of `Z^cols`.
pub fn integer_kernel(m: &IntMat) -> IntMat {
    let snf = smith_normal_form(m);
    let steps = snf.diag.len();
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..m.cols() {
        if j >= steps || snf.diag[j].is_zero() {
            cols.push(snf.right.col(j));
        }
    }
    if cols.is_empty() {
        IntMat::zeros(m.cols(), 0)
    } else {
        IntMat::from_cols(&cols)
    }
}

/// One integer solution of `M x = b`, if any exists.
pub fn solve_integer(m: &IntMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len(), "dimension mismatch in solve");
    let snf = smith_normal_form(m);
    let c = snf.left.mul_vec(b);
    let steps = snf.diag.len();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (t, ct) in c.iter().enumerate() {
        if t < steps && !snf.diag[t].is_zero() {
            let (q, r) = num_integer::Integer::div_rem(ct, &snf.diag[t]);
            if !r.is_zero() {
                return None;
            }
            y[t] = q;
        } else if !ct.is_zero() {
            return None;
        }
    }
    Some(snf.right.mul_vec(&y))
}

/// Basis of the saturation of the column span of `m`: the primitive
/// sublattice `(Q-span of columns) intersect Z^rows`, as matrix columns.
pub fn saturate_columns(m: &IntMat) -> IntMat {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    if rank == 0 {
        return IntMat::zeros(m.rows(), 0);
    }
    let cols: Vec<Vec<BigInt>> = (0..rank).map(|j| snf.left_inv.col(j)).collect();
    IntMat::from_cols(&cols)
}

/// True iff the columns of `a` and `b` generate the same subgroup of
/// `Z^rows`.
pub fn same_column_span(a: &IntMat, b: &IntMat) -> bool {
    if a.rows() != b.rows() {
        return false;
    }
    let contained = |x: &IntMat, y: &IntMat| {
        (0..x.cols()).all(|j| solve_integer(y, &x.col(j)).is_some())
    };
    contained(a, b) && contained(b, a)
}
