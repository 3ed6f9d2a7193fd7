use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LatticeError;

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    #[serde(with = "crate::serde_dec::vec")]
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, LatticeError> {
        if rows * cols != entries.len() {
            return Err(LatticeError::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[&[T]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| x.into()))
            .collect();
        Self {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Result<Self, LatticeError> {
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(LatticeError::DimensionMismatch(
                "columns have different lengths".into(),
            ));
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn diagonal(diag: &[BigInt], rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, x) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LatticeError> {
        if self.cols != rhs.rows {
            return Err(LatticeError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LatticeError> {
        if v.len() != self.cols {
            return Err(LatticeError::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination; `None` when not square.
    pub fn determinant(&self) -> Option<BigInt> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Some(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Some(sign * &a[(n - 1, n - 1)])
    }

    /// True when the matrix is square with determinant ±1.
    pub fn is_unimodular(&self) -> bool {
        self.determinant().is_some_and(|d| d.abs().is_one())
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = factor * &self[(source, j)];
            self[(target, j)] += delta;
        }
    }

    /// col[target] += factor * col[source]
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = factor * &self[(i, source)];
            self[(i, target)] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_is_checked() {
        let err = IntMatrix::new(2, 2, vec![BigInt::one(); 3]).unwrap_err();
        assert_eq!(
            err,
            LatticeError::Shape {
                rows: 2,
                cols: 2,
                len: 3
            }
        );
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows(&[&[2i64, -1], &[-1, 2]]);
        assert_eq!(m.determinant(), Some(BigInt::from(3)));
        let m = IntMatrix::from_rows(&[&[0i64, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.determinant(), Some(BigInt::from(-2)));
        let m = IntMatrix::from_rows(&[&[1i64, 2], &[2, 4]]);
        assert_eq!(m.determinant(), Some(BigInt::zero()));
    }

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(&[&[1i64, 2, 3], &[4, 5, 6]]);
        let b = a.transpose();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, IntMatrix::from_rows(&[&[14i64, 32], &[32, 77]]));
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn display_nested() {
        let m = IntMatrix::from_rows(&[&[2i64, -1], &[-1, 2]]);
        assert_eq!(m.to_string(), "[[2, -1], [-1, 2]]");
    }
}
