//! Incremental sparse Gauss-Jordan elimination over the rationals.
//!
//! Rows are inserted one at a time. The stored rows are kept fully reduced
//! at every step: each has a leading 1 at its pivot column and every pivot
//! column is zero in all other stored rows. Sorting the stored rows by pivot
//! therefore yields the reduced row echelon form of everything inserted so
//! far.

use std::collections::BTreeMap;

use super::rational::Rational;

/// Sparse row: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, Rational)>;

/// Drops zero entries and sorts by column, merging duplicates.
pub fn normalize_row(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in entries {
        if v.is_zero() {
            continue;
        }
        *acc.entry(c).or_insert_with(Rational::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn dense_to_sparse(row: &[Rational]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

pub fn sparse_to_dense(row: &[(usize, Rational)], ncols: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ncols];
    for (c, v) in row {
        out[*c] = v.clone();
    }
    out
}

fn entry_at(row: &[(usize, Rational)], col: usize) -> Option<&Rational> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|idx| &row[idx].1)
}

/// `a - factor * b` on sparse rows.
fn axpy(a: &[(usize, Rational)], factor: &Rational, b: &[(usize, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut ia, mut ib) = (0, 0);
    while ia < a.len() || ib < b.len() {
        let ca = a.get(ia).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(ib).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[ia].clone());
            ia += 1;
        } else if cb < ca {
            out.push((cb, -(factor * &b[ib].1)));
            ib += 1;
        } else {
            let v = &a[ia].1 - factor * &b[ib].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            ia += 1;
            ib += 1;
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    // pivot column -> index into `rows`
    pivot_of: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_of: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of[col].is_some()
    }

    /// Residual of `row` after eliminating every pivot column.
    pub fn reduce(&self, row: &[(usize, Rational)]) -> SparseRow {
        let mut out: SparseRow = row.to_vec();
        for (col, coeff) in row {
            if let Some(r) = self.pivot_of[*col] {
                // stored rows vanish on other pivot columns, so one pass with
                // the original coefficients suffices
                out = axpy(&out, coeff, &self.rows[r]);
            }
        }
        out
    }

    /// Inserts a row; returns its new pivot column if it was independent.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> Option<usize> {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let reduced = self.reduce(row);
        let (pivot, lead) = reduced.first()?.clone();
        let inv = lead.recip().expect("nonzero lead");
        let new_row: SparseRow = reduced.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        for stored in self.rows.iter_mut() {
            if let Some(f) = entry_at(stored, pivot).cloned() {
                *stored = axpy(stored, &f, &new_row);
            }
        }
        self.pivot_of[pivot] = Some(self.rows.len());
        self.rows.push(new_row);
        Some(pivot)
    }

    /// Stored rows sorted by pivot column: the reduced row echelon form.
    pub fn rref_rows(&self) -> Vec<SparseRow> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r[0].0);
        rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Basis of `{v : row · v = 0 for every inserted row}`, one vector per
    /// free column `f`: `e_f - sum_r row_r[f] e_{pivot_r}`.
    pub fn kernel_vectors(&self) -> Vec<SparseRow> {
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|&c| !self.is_pivot(c)) {
            let mut v: SparseRow = vec![(f, Rational::one())];
            for row in &self.rows {
                if let Some(val) = entry_at(row, f) {
                    v.push((row[0].0, -val));
                }
            }
            v.sort_by_key(|e| e.0);
            out.push(v);
        }
        out
    }

    /// Particular solution of the inserted system when the last column holds
    /// the right-hand side, with all free variables set to zero. `None` when
    /// the augmented column carries a pivot (inconsistent system).
    pub fn particular_solution(&self) -> Option<Vec<Rational>> {
        let aug = self.ncols.checked_sub(1)?;
        if self.is_pivot(aug) {
            return None;
        }
        let mut x = vec![Rational::zero(); aug];
        for row in &self.rows {
            let p = row[0].0;
            if let Some(rhs) = entry_at(row, aug) {
                x[p] = rhs.clone();
            }
        }
        Some(x)
    }
}

/// Canonical basis (RREF rows) of the span of the given sparse rows.
pub fn span_rref(ncols: usize, rows: impl IntoIterator<Item = SparseRow>) -> Vec<SparseRow> {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(&r);
    }
    ech.rref_rows()
}

/// Canonical basis (RREF rows) of the solution space of the homogeneous
/// system with the given equation rows.
pub fn kernel_rref(ncols: usize, equations: impl IntoIterator<Item = SparseRow>) -> Vec<SparseRow> {
    let mut ech = Echelon::new(ncols);
    for r in equations {
        if ech.rank() == ncols {
            break;
        }
        ech.insert(&r);
    }
    span_rref(ncols, ech.kernel_vectors())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    fn row(vals: &[i64]) -> SparseRow {
        dense_to_sparse(&vals.iter().map(|&v| q(v)).collect::<Vec<_>>())
    }

    #[test]
    fn incremental_rows_stay_fully_reduced() {
        let mut e = Echelon::new(3);
        assert_eq!(e.insert(&row(&[0, 1, 1])), Some(1));
        assert_eq!(e.insert(&row(&[1, 1, 0])), Some(0));
        assert_eq!(e.insert(&row(&[1, 2, 1])), None);
        let rows = e.rref_rows();
        assert_eq!(rows, vec![row(&[1, 0, -1]), row(&[0, 1, 1])]);
    }

    #[test]
    fn kernel_of_single_equation() {
        // span{(-2, 1)} in canonical form
        let k = kernel_rref(2, vec![row(&[1, 2])]);
        assert_eq!(k, vec![vec![(0, q(1)), (1, Rational::new(-1, 2))]]);
    }

    #[test]
    fn inconsistent_augmented_system() {
        let mut e = Echelon::new(3);
        e.insert(&row(&[1, 2, 1]));
        e.insert(&row(&[2, 4, 3]));
        assert!(e.particular_solution().is_none());
    }
}
