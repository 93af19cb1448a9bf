use std::fmt;
use std::ops::{Index, IndexMut};

use super::echelon::{dense_to_sparse, sparse_to_dense, span_rref, Echelon};
use super::rational::Rational;
use super::subspace::Subspace;
use crate::error::{check_dim, Result};

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            check_dim("matrix row", cols, r.len())?;
            entries.extend(r);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
            .collect();
        Matrix::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        check_dim("matrix-vector product", self.cols, v.len())?;
        Ok(self
            .row_vectors()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim("matrix product", self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        check_dim("matrix sum (rows)", self.rows, other.rows)?;
        check_dim("matrix sum (cols)", self.cols, other.cols)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&Rational::from_integer(-1)))
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.cols);
        for r in self.row_vectors() {
            ech.insert(&dense_to_sparse(r));
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Reduced row echelon form, same shape as `self` (zero rows at the bottom).
    pub fn rref(&self) -> Matrix {
        let mut out = Matrix::zeros(self.rows, self.cols);
        let rows = span_rref(self.cols, self.row_vectors().map(dense_to_sparse));
        for (i, r) in rows.iter().enumerate() {
            for (c, v) in r {
                out[(i, *c)] = v.clone();
            }
        }
        out
    }

    /// Solution space of `self · v = 0`.
    pub fn nullspace(&self) -> Subspace {
        Subspace::from_sparse_kernel(self.cols, self.row_vectors().map(dense_to_sparse))
    }

    /// One particular solution of `self · x = b` (free variables zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        check_dim("right-hand side", self.rows, b.len())?;
        let mut ech = Echelon::new(self.cols + 1);
        for (r, rhs) in self.row_vectors().zip(b) {
            let mut row = dense_to_sparse(r);
            if !rhs.is_zero() {
                row.push((self.cols, rhs.clone()));
            }
            ech.insert(&row);
        }
        Ok(ech.particular_solution())
    }

    pub(crate) fn from_sparse_rows(cols: usize, rows: &[Vec<(usize, Rational)>]) -> Matrix {
        let dense = rows.iter().map(|r| sparse_to_dense(r, cols)).collect();
        Matrix::from_rows(cols, dense).expect("sparse rows within bounds")
    }
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for r in self.row_vectors() {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.row_vectors().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r:?}")?;
        }
        write!(f, "]")
    }
}

/// Free-function form of [`Matrix::rref`].
pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

/// Free-function form of [`Matrix::nullspace`].
pub fn nullspace(m: &Matrix) -> Subspace {
    m.nullspace()
}

/// Free-function form of [`Matrix::solve`].
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    m.solve(b)
}
