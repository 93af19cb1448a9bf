use std::fmt;

use crate::error::{check_dim, Result};
use crate::linalg::{Matrix, Rational};

/// Structure constants of an `n`-dimensional algebra:
/// `[e_i, e_j] = sum_k c[k][i][j] e_k`.
///
/// Coefficients are stored flat at `(k * n + i) * n + j`; the same layout is
/// used when tensors are vectorized into `Q^(n^3)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    c: Vec<Rational>,
    labels: Option<Vec<String>>,
}

#[inline]
pub(crate) fn flat(n: usize, k: usize, i: usize, j: usize) -> usize {
    (k * n + i) * n + j
}

impl StructureTensor {
    pub fn zeros(dim: usize) -> Self {
        StructureTensor {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
            labels: None,
        }
    }

    /// From a list of nonzero brackets `(i, j, [(k, coeff)])`, 0-based.
    pub fn from_brackets<I, T>(dim: usize, brackets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
        T: IntoIterator<Item = (usize, Rational)>,
    {
        let mut t = StructureTensor::zeros(dim);
        for (i, j, terms) in brackets {
            for (k, v) in terms {
                t.c[flat(dim, k, i, j)] += v;
            }
        }
        t
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "one label per basis element");
        self.labels = Some(labels);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of basis element `i`; falls back to `e{i+1}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    pub fn coeff(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.c[flat(self.dim, k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, v: Rational) {
        let n = self.dim;
        self.c[flat(n, k, i, j)] = v;
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.c
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.coeff(k, i, j).clone()).collect()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        check_dim("bracket (left argument)", self.dim, x.len())?;
        check_dim("bracket (right argument)", self.dim, y.len())?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.coeff(k, i, j);
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    /// Nonzero brackets as `(i, j, [(k, coeff)])`, in `(i, j)` order.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<(usize, Rational)>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<_> = (0..n)
                    .filter(|&k| !self.coeff(k, i, j).is_zero())
                    .map(|k| (k, self.coeff(k, i, j).clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push((i, j, terms));
                }
            }
        }
        out
    }

    /// The product `{x, y} = [y, x]`; turns a right Leibniz table into a left one.
    pub fn opposite(&self) -> StructureTensor {
        let n = self.dim;
        let mut t = self.clone();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    t.c[flat(n, k, i, j)] = self.coeff(k, j, i).clone();
                }
            }
        }
        t
    }

    /// The bracket viewed as a bilinear map.
    pub fn as_bilinear(&self) -> BilinearTensor {
        BilinearTensor {
            dim: self.dim,
            b: self.c.clone(),
        }
    }
}

impl fmt::Debug for StructureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructureTensor(dim {}", self.dim)?;
        for (i, j, terms) in self.nonzero_brackets() {
            write!(f, ", [{},{}]=", self.label(i), self.label(j))?;
            for (idx, (k, v)) in terms.iter().enumerate() {
                if idx > 0 {
                    write!(f, "+")?;
                }
                write!(f, "{v}*{}", self.label(*k))?;
            }
        }
        write!(f, ")")
    }
}

/// A bilinear map `B: L x L -> L`, `B(e_i, e_j) = sum_k b[k][i][j] e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BilinearTensor {
    dim: usize,
    b: Vec<Rational>,
}

impl BilinearTensor {
    pub fn zeros(dim: usize) -> Self {
        BilinearTensor {
            dim,
            b: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// From entries `(i, j, [(k, coeff)])`, 0-based.
    pub fn from_values<I, T>(dim: usize, values: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
        T: IntoIterator<Item = (usize, Rational)>,
    {
        let mut t = BilinearTensor::zeros(dim);
        for (i, j, terms) in values {
            for (k, v) in terms {
                t.b[flat(dim, k, i, j)] += v;
            }
        }
        t
    }

    /// From a vector in the flat `(k, i, j)` layout of length `dim^3`.
    pub fn from_flat(dim: usize, b: Vec<Rational>) -> Result<Self> {
        check_dim("bilinear tensor", dim * dim * dim, b.len())?;
        Ok(BilinearTensor { dim, b })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.b[flat(self.dim, k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, v: Rational) {
        let n = self.dim;
        self.b[flat(n, k, i, j)] = v;
    }

    pub fn as_flat(&self) -> &[Rational] {
        &self.b
    }

    /// Coordinates of `B(e_i, e_j)`.
    pub fn value(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.get(k, i, j).clone()).collect()
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        check_dim("bilinear map (left argument)", self.dim, x.len())?;
        check_dim("bilinear map (right argument)", self.dim, y.len())?;
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                let w = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &w * self.get(k, i, j);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.b.iter().all(Rational::is_zero)
    }

    /// `B^T(x, y) = B(y, x)`.
    pub fn swapped(&self) -> BilinearTensor {
        let n = self.dim;
        let mut out = BilinearTensor::zeros(n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    out.b[flat(n, k, i, j)] = self.get(k, j, i).clone();
                }
            }
        }
        out
    }

    pub fn add(&self, other: &BilinearTensor) -> Result<BilinearTensor> {
        check_dim("bilinear sum", self.dim, other.dim)?;
        Ok(BilinearTensor {
            dim: self.dim,
            b: self.b.iter().zip(&other.b).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &BilinearTensor) -> Result<BilinearTensor> {
        check_dim("bilinear difference", self.dim, other.dim)?;
        Ok(BilinearTensor {
            dim: self.dim,
            b: self.b.iter().zip(&other.b).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> BilinearTensor {
        BilinearTensor {
            dim: self.dim,
            b: self.b.iter().map(|a| a * s).collect(),
        }
    }

    /// `B+(x, y) = B(x, y) + B(y, x)`.
    pub fn symmetric_part(&self) -> BilinearTensor {
        self.add(&self.swapped()).expect("same dimension")
    }

    /// `B-(x, y) = B(x, y) - B(y, x)`.
    pub fn skew_part(&self) -> BilinearTensor {
        self.sub(&self.swapped()).expect("same dimension")
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swapped()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.symmetric_part().is_zero()
    }

    pub fn nonzero_values(&self) -> Vec<(usize, usize, Vec<(usize, Rational)>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<_> = (0..n)
                    .filter(|&k| !self.get(k, i, j).is_zero())
                    .map(|k| (k, self.get(k, i, j).clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push((i, j, terms));
                }
            }
        }
        out
    }
}

/// Serialized sparsely as `[i, j, [[k, coeff], ...]]` triples, 0-based.
impl serde::Serialize for BilinearTensor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("BilinearTensor", 2)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("values", &self.nonzero_values())?;
        st.end()
    }
}

impl fmt::Debug for BilinearTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearTensor(dim {}", self.dim)?;
        for (i, j, terms) in self.nonzero_values() {
            write!(f, ", B(e{},e{})={:?}", i + 1, j + 1, terms)?;
        }
        write!(f, ")")
    }
}

pub fn symmetric_part(b: &BilinearTensor) -> BilinearTensor {
    b.symmetric_part()
}

pub fn skew_part(b: &BilinearTensor) -> BilinearTensor {
    b.skew_part()
}

/// A linear self-map; column `j` holds the coordinates of the image of `e_j`.
/// Vectorized row-major into `Q^(n^2)`: entry `(r, c)` sits at `r * n + c`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMapMatrix {
    m: Matrix,
}

impl LinearMapMatrix {
    pub fn zero(dim: usize) -> Self {
        LinearMapMatrix {
            m: Matrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        LinearMapMatrix {
            m: Matrix::identity(dim),
        }
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        check_dim("linear map (square)", m.rows(), m.cols())?;
        Ok(LinearMapMatrix { m })
    }

    /// From the images of the basis vectors.
    pub fn from_images(dim: usize, images: Vec<Vec<Rational>>) -> Result<Self> {
        check_dim("linear map images", dim, images.len())?;
        let m = Matrix::from_rows(dim, images)?.transpose();
        Ok(LinearMapMatrix { m })
    }

    pub fn from_flat(dim: usize, v: &[Rational]) -> Result<Self> {
        check_dim("vectorized linear map", dim * dim, v.len())?;
        let rows = v.chunks(dim.max(1)).map(|c| c.to_vec()).take(dim).collect();
        Ok(LinearMapMatrix {
            m: Matrix::from_rows(dim, rows)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn to_flat(&self) -> Vec<Rational> {
        self.m.entries().to_vec()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Rational {
        &self.m[(r, c)]
    }

    pub fn image(&self, j: usize) -> Vec<Rational> {
        self.m.column(j)
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.m.mul_vec(v)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn add(&self, other: &LinearMapMatrix) -> Result<LinearMapMatrix> {
        Ok(LinearMapMatrix {
            m: self.m.add(&other.m)?,
        })
    }

    pub fn sub(&self, other: &LinearMapMatrix) -> Result<LinearMapMatrix> {
        Ok(LinearMapMatrix {
            m: self.m.sub(&other.m)?,
        })
    }

    pub fn scale(&self, s: &Rational) -> LinearMapMatrix {
        LinearMapMatrix { m: self.m.scale(s) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMapMatrix) -> Result<LinearMapMatrix> {
        Ok(LinearMapMatrix {
            m: self.m.mul(&other.m)?,
        })
    }
}

impl serde::Serialize for LinearMapMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.m.serialize(serializer)
    }
}

impl fmt::Debug for LinearMapMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap{:?}", self.m)
    }
}
