//! Arbitrary-precision integer matrices.
//!
//! Exact arithmetic throughout: determinants use the Bareiss fraction-free
//! algorithm and rank uses fraction-free elimination with column skipping,
//! so every intermediate entry is a minor of the input and entry growth
//! stays polynomial.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense integer matrix with `BigInt` entries, row-major storage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Build from a rectangular slice of rows.
    ///
    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows in matrix literal"
        );
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from machine-integer rows; see also the [`imat!`](crate::imat) macro.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Build entrywise from a function of the position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// First index `(i, j)` with `m[i][j] != m[j][i]`, scanning row-major.
    pub fn asymmetry_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in 0..i {
                if self[(i, j)] != self[(j, i)] {
                    return Some((j, i));
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product; panics on dimension mismatch.
    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        IntMat::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        })
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn neg(&self) -> IntMat {
        IntMat::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }

    pub fn scale(&self, s: &BigInt) -> IntMat {
        IntMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    /// Matrix-vector product; panics on dimension mismatch.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Submatrix selecting the given rows and columns, in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMat {
        IntMat::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<BigInt>]) -> IntMat {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        IntMat::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    /// Block-diagonal assembly of square blocks.
    pub fn block_diag(parts: &[&IntMat]) -> IntMat {
        let n: usize = parts.iter().map(|p| p.rows).sum();
        let mut m = IntMat::zeros(n, n);
        let mut off = 0;
        for p in parts {
            assert!(p.is_square(), "block_diag needs square blocks");
            for i in 0..p.rows {
                for j in 0..p.cols {
                    m[(off + i, off + j)] = p[(i, j)].clone();
                }
            }
            off += p.rows;
        }
        m
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    ///
    /// Panics if the matrix is not square. The determinant of the empty
    /// matrix is 1.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i)).collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = std::mem::take(&mut m[n - 1][n - 1]);
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Rank over `Q`, by fraction-free elimination with column skipping.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            for i in row + 1..self.rows {
                for j in col + 1..self.cols {
                    let t = &m[i][j] * &m[row][col] - &m[i][col] * &m[row][j];
                    m[i][j] = t / &prev;
                }
                m[i][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            row += 1;
        }
        row
    }

    /// All entries as `i64`, or `None` if any entry does not fit.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| i64::try_from(&self[(i, j)]).ok())
                    .collect()
            })
            .collect()
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMat {
    /// Rows on separate lines, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Inner product of two integer vectors.
pub fn dot(x: &[BigInt], y: &[BigInt]) -> BigInt {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Integer matrix literal: `imat![[0, 1], [1, 0]]`.
#[macro_export]
macro_rules! imat {
    ($([$($x:expr),* $(,)?]),* $(,)?) => {
        $crate::matrix::IntMat::from_i64(&[ $( &[ $($x as i64),* ][..] ),* ])
    };
}
