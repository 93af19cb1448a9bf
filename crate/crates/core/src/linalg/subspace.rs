use std::fmt;

use super::echelon::{dense_to_sparse, kernel_rref, span_rref, SparseRow};
use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{check_dim, Result};

/// A subspace of `Q^m` held as its reduced row echelon basis. Two subspaces
/// are equal exactly when their basis matrices are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_rref_rows(ambient_dim: usize, rows: Vec<SparseRow>) -> Self {
        let pivots = rows.iter().map(|r| r[0].0).collect();
        Subspace {
            ambient_dim,
            basis: Matrix::from_sparse_rows(ambient_dim, &rows),
            pivots,
        }
    }

    pub(crate) fn from_sparse_span(
        ambient_dim: usize,
        rows: impl IntoIterator<Item = SparseRow>,
    ) -> Self {
        Self::from_rref_rows(ambient_dim, span_rref(ambient_dim, rows))
    }

    /// Solution space of a homogeneous system given by sparse equation rows.
    pub(crate) fn from_sparse_kernel(
        ambient_dim: usize,
        equations: impl IntoIterator<Item = SparseRow>,
    ) -> Self {
        Self::from_rref_rows(ambient_dim, kernel_rref(ambient_dim, equations))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_rref_rows(ambient_dim, Vec::new())
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_rref_rows(
            ambient_dim,
            (0..ambient_dim).map(|i| vec![(i, Rational::one())]).collect(),
        )
    }

    /// Span of arbitrary generators.
    pub fn span(ambient_dim: usize, generators: Vec<Vec<Rational>>) -> Result<Self> {
        for g in &generators {
            check_dim("subspace generator", ambient_dim, g.len())?;
        }
        Ok(Self::from_sparse_span(
            ambient_dim,
            generators.iter().map(|g| dense_to_sparse(g)),
        ))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that carry no pivot; the unit vectors on these columns
    /// span a fixed complement of `self`.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v - sum_r v[pivot_r] * basis_r`: the projection of `v` onto the
    /// coordinate complement along `self`. Zero iff `v` is a member.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        check_dim("subspace reduction", self.ambient_dim, v.len())?;
        Ok(self.reduce_unchecked(v))
    }

    pub(crate) fn reduce_unchecked(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (c, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    out[c] -= &f * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Rational::is_zero))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_dim("subspace inclusion", other.ambient_dim, self.ambient_dim)?;
        for v in self.vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim("subspace sum", self.ambient_dim, other.ambient_dim)?;
        Ok(Self::from_sparse_span(
            self.ambient_dim,
            self.vectors().chain(other.vectors()).map(dense_to_sparse),
        ))
    }

    /// Linear equations cutting out `self`: a basis of the annihilator.
    pub fn equations(&self) -> Vec<SparseRow> {
        // one equation per free column f: x_f - sum_r basis_r[f] x_{pivot_r} = 0
        self.non_pivots()
            .into_iter()
            .map(|f| {
                let mut eq: SparseRow = vec![(f, Rational::one())];
                for (r, &p) in self.pivots.iter().enumerate() {
                    let b = &self.basis[(r, f)];
                    if !b.is_zero() {
                        eq.push((p, -b));
                    }
                }
                eq.sort_by_key(|e| e.0);
                eq
            })
            .collect()
    }

    /// Intersection as the kernel of the stacked annihilator equations.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        check_dim("subspace intersection", self.ambient_dim, other.ambient_dim)?;
        Ok(Self::from_sparse_kernel(
            self.ambient_dim,
            self.equations().into_iter().chain(other.equations()),
        ))
    }

    /// Image of the subspace under a linear map given as a matrix acting on
    /// column vectors.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        check_dim("subspace image", self.ambient_dim, map.cols())?;
        let gens = self
            .vectors()
            .map(|v| map.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(map.rows(), gens)
    }
}

impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient_dim", &self.ambient_dim)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}: {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersection(b)
}

pub fn subspace_contains(a: &Subspace, v: &[Rational]) -> Result<bool> {
    a.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn lattice_examples() {
        let x = Subspace::span(2, vec![v(&[1, 0])]).unwrap();
        let y = Subspace::span(2, vec![v(&[0, 1])]).unwrap();
        let d = Subspace::span(2, vec![v(&[1, 1])]).unwrap();
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(2));
        assert_eq!(x.intersection(&x).unwrap(), x);
        assert_eq!(x.intersection(&d).unwrap(), Subspace::zero(2));
    }

    #[test]
    fn membership_and_mismatch() {
        let s = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert!(s.contains(&v(&[1, 2, 1])).unwrap());
        assert!(!s.contains(&v(&[0, 0, 1])).unwrap());
        assert!(s.contains(&v(&[1, 2])).is_err());
        assert!(s.sum(&Subspace::zero(2)).is_err());
        assert!(s.intersection(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn canonical_under_generator_change() {
        let a = Subspace::span(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, vec![v(&[1, 3, 4]), v(&[2, 3, 5]), v(&[1, 2, 3])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn equations_cut_out_the_subspace() {
        let s = Subspace::span(4, vec![v(&[1, 0, 2, 0]), v(&[0, 1, -1, 3])]).unwrap();
        let again = Subspace::from_sparse_kernel(4, s.equations());
        assert_eq!(again, s);
    }

    #[test]
    fn complement_reduction() {
        let s = Subspace::span(3, vec![v(&[1, 0, 1])]).unwrap();
        assert_eq!(s.non_pivots(), vec![1, 2]);
        assert_eq!(s.reduce(&v(&[2, 5, 3])).unwrap(), v(&[0, 5, 1]));
    }
}
