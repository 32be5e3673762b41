//! Dense matrices of rationals with exact linear algebra.

use super::Rational;
use crate::{Error, Result};
use num::{One, Zero};

/// A dense matrix of [`Rational`] entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    /// The `rows x cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix entrywise from `f(i, j)` (0-based indices).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds a matrix entrywise from a fallible `f(i, j)`, propagating the
    /// first error.
    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<Rational>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j)?);
            }
        }
        Ok(RatMatrix { rows, cols, data })
    }

    /// Builds a matrix from a row-major list of rows.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] if the rows have unequal lengths or the
    /// input is empty.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::Shape("matrix must be nonempty".into()));
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Number of rows.
    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// The entry at `(i, j)`, 0-based.
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    /// Sets the entry at `(i, j)`, 0-based.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    /// Matrix product `self * other`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] on inner-dimension mismatch.
    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = aik * other.at(k, j);
                    let cur = out.at(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// True iff the matrix is square and equals the identity.
    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                if *self.at(i, j) != want {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant by Gaussian elimination.
    ///
    /// Pivots on the first row (lowest index) with a nonzero entry in the
    /// current column; a column with no pivot makes the determinant zero.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] if the matrix is not square.
    pub fn det_exact(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let pivot_row = match (c..n).find(|&r| !m.at(r, c).is_zero()) {
                Some(r) => r,
                None => return Ok(Rational::zero()),
            };
            if pivot_row != c {
                for j in 0..n {
                    m.data.swap(pivot_row * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det *= &pivot;
            for r in (c + 1)..n {
                if m.at(r, c).is_zero() {
                    continue;
                }
                let factor = m.at(r, c) / &pivot;
                for j in c..n {
                    let val = m.at(r, j) - &factor * m.at(c, j);
                    m.set(r, j, val);
                }
            }
        }
        Ok(det)
    }
}
