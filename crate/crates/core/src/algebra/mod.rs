//! Left Leibniz algebras given by structure constants, and their basic
//! invariants: Leibniz kernel, left center, center, ideals and quotients.

mod tensor;

pub use tensor::{skew_part, symmetric_part, BilinearTensor, LinearMapMatrix, StructureTensor};
pub(crate) use tensor::flat;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::linalg::echelon::{dense_to_sparse, SparseRow};
use crate::linalg::{Matrix, Rational, Subspace};

/// A basis triple on which the left Leibniz identity fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `[e_i,[e_j,e_k]] - [e_j,[e_i,e_k]] - [[e_i,e_j],e_k]`
    pub defect: Vec<Rational>,
}

/// Checks `[x,[y,z]] = [y,[x,z]] + [[x,y],z]` on all basis triples.
pub fn check_left_leibniz(t: &StructureTensor) -> Vec<Violation> {
    let n = t.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut defect = vec![Rational::zero(); n];
                for l in 0..n {
                    let a = t.coeff(l, j, k);
                    let b = t.coeff(l, i, k);
                    let c = t.coeff(l, i, j);
                    for (m, d) in defect.iter_mut().enumerate() {
                        if !a.is_zero() {
                            *d += a * t.coeff(m, i, l);
                        }
                        if !b.is_zero() {
                            *d -= b * t.coeff(m, j, l);
                        }
                        if !c.is_zero() {
                            *d -= c * t.coeff(m, l, k);
                        }
                    }
                }
                if defect.iter().any(|d| !d.is_zero()) {
                    out.push(Violation { i, j, k, defect });
                }
            }
        }
    }
    out
}

pub fn opposite(t: &StructureTensor) -> StructureTensor {
    t.opposite()
}

/// A structure tensor known to satisfy the left Leibniz identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LeibnizAlgebra {
    tensor: StructureTensor,
}

impl LeibnizAlgebra {
    pub fn new(tensor: StructureTensor) -> Result<Self> {
        let violations = check_left_leibniz(&tensor);
        match violations.first() {
            None => Ok(LeibnizAlgebra { tensor }),
            Some(v) => Err(Error::NotLeibniz {
                count: violations.len(),
                first: (v.i, v.j, v.k),
            }),
        }
    }

    /// Validates a right Leibniz table by passing to the opposite product.
    pub fn from_right(tensor: &StructureTensor) -> Result<Self> {
        Self::new(tensor.opposite())
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn into_tensor(self) -> StructureTensor {
        self.tensor
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.tensor.bracket(x, y)
    }

    pub(crate) fn basis_vector(&self, i: usize) -> Vec<Rational> {
        unit(self.dim(), i)
    }

    /// `Leib(L)`, spanned by `[e_i,e_i]` and `[e_i,e_j] + [e_j,e_i]`.
    pub fn leibniz_kernel(&self) -> Subspace {
        let n = self.dim();
        let t = &self.tensor;
        let gens = (0..n).flat_map(move |i| {
            (i..n).map(move |j| {
                let v: Vec<Rational> = if i == j {
                    t.basis_bracket(i, i)
                } else {
                    (0..n).map(|k| t.coeff(k, i, j) + t.coeff(k, j, i)).collect()
                };
                dense_to_sparse(&v)
            })
        });
        Subspace::from_sparse_span(n, gens)
    }

    fn left_center_equations(&self) -> impl Iterator<Item = SparseRow> + '_ {
        let n = self.dim();
        // sum_i x_i c[k][i][j] = 0 for all j, k
        (0..n).flat_map(move |j| {
            (0..n).map(move |k| {
                dense_to_sparse(&(0..n).map(|i| self.tensor.coeff(k, i, j).clone()).collect::<Vec<_>>())
            })
        })
    }

    fn right_annihilator_equations(&self) -> impl Iterator<Item = SparseRow> + '_ {
        let n = self.dim();
        (0..n).flat_map(move |j| {
            (0..n).map(move |k| {
                dense_to_sparse(&(0..n).map(|i| self.tensor.coeff(k, j, i).clone()).collect::<Vec<_>>())
            })
        })
    }

    /// `Z^l(L) = {x : [x, y] = 0 for all y}`.
    pub fn left_center(&self) -> Subspace {
        Subspace::from_sparse_kernel(self.dim(), self.left_center_equations())
    }

    /// `Z(L) = {x : [x, y] = [y, x] = 0 for all y}`.
    pub fn center(&self) -> Subspace {
        Subspace::from_sparse_kernel(
            self.dim(),
            self.left_center_equations().chain(self.right_annihilator_equations()),
        )
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        check_dim("ideal test", self.dim(), s.ambient_dim())?;
        for v in s.vectors() {
            for j in 0..self.dim() {
                let e = self.basis_vector(j);
                if !s.contains(&self.tensor.bracket_unchecked(&e, v))?
                    || !s.contains(&self.tensor.bracket_unchecked(v, &e))?
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff `c[k][i][j] = -c[k][j][i]` everywhere.
    pub fn is_lie(&self) -> bool {
        is_antisymmetric(&self.tensor)
    }

    /// `L / I` on the complement spanned by the non-pivot coordinates of
    /// `I`'s canonical basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let n = self.dim();
        let complement = ideal.non_pivots();
        let m = complement.len();
        let mut projection = Matrix::zeros(m, n);
        for c in 0..n {
            let red = ideal.reduce_unchecked(&unit(n, c));
            for (a, &f) in complement.iter().enumerate() {
                projection[(a, c)] = red[f].clone();
            }
        }
        let mut t = StructureTensor::zeros(m);
        for (a, &fa) in complement.iter().enumerate() {
            for (b, &fb) in complement.iter().enumerate() {
                let img = projection.mul_vec(&self.tensor.basis_bracket(fa, fb))?;
                for (k, v) in img.into_iter().enumerate() {
                    t.set(k, a, b, v);
                }
            }
        }
        if let Some(labels) = self.tensor.labels() {
            t = t.with_labels(complement.iter().map(|&f| labels[f].clone()).collect());
        }
        Ok(Quotient {
            tensor: t,
            projection,
            complement,
        })
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub fn is_antisymmetric(t: &StructureTensor) -> bool {
    let n = t.dim();
    (0..n).all(|k| {
        (0..n).all(|i| (i..n).all(|j| (t.coeff(k, i, j) + t.coeff(k, j, i)).is_zero()))
    })
}

/// A quotient algebra together with the coordinate projection `L -> L/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub tensor: StructureTensor,
    /// `(n - dim I) x n` matrix of the projection.
    pub projection: Matrix,
    /// Basis indices of `L` whose images form the quotient basis.
    pub complement: Vec<usize>,
}

impl Quotient {
    /// Lifts quotient coordinates back along the complement section.
    pub fn lift(&self, v: &[Rational], ambient: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); ambient];
        for (a, &f) in self.complement.iter().enumerate() {
            out[f] = v[a].clone();
        }
        out
    }
}

/// A representation of a Lie algebra: one `module_dim x module_dim` matrix
/// per Lie basis element, with `(X.v)` given by matrix-vector product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAction {
    lie_dim: usize,
    module_dim: usize,
    action: Vec<Matrix>,
}

impl ModuleAction {
    /// Checks `X.(Y.v) - Y.(X.v) = [X,Y].v` on all basis pairs.
    pub fn new(lie: &StructureTensor, module_dim: usize, action: Vec<Matrix>) -> Result<Self> {
        check_dim("module action count", lie.dim(), action.len())?;
        for a in &action {
            check_dim("module action rows", module_dim, a.rows())?;
            check_dim("module action cols", module_dim, a.cols())?;
        }
        let out = ModuleAction {
            lie_dim: lie.dim(),
            module_dim,
            action,
        };
        if let Some((a, b)) = out.first_axiom_failure(lie) {
            return Err(Error::InvalidModule(a, b));
        }
        Ok(out)
    }

    pub fn trivial(lie: &StructureTensor, module_dim: usize) -> Self {
        ModuleAction {
            lie_dim: lie.dim(),
            module_dim,
            action: vec![Matrix::zeros(module_dim, module_dim); lie.dim()],
        }
    }

    pub(crate) fn first_axiom_failure(&self, lie: &StructureTensor) -> Option<(usize, usize)> {
        let n = self.lie_dim;
        for a in 0..n {
            for b in (a + 1)..n {
                let ab = self.action[a].mul(&self.action[b]).expect("square");
                let ba = self.action[b].mul(&self.action[a]).expect("square");
                let lhs = ab.sub(&ba).expect("square");
                let mut rhs = Matrix::zeros(self.module_dim, self.module_dim);
                for k in 0..n {
                    let c = lie.coeff(k, a, b);
                    if !c.is_zero() {
                        rhs = rhs.add(&self.action[k].scale(c)).expect("square");
                    }
                }
                if lhs != rhs {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn lie_dim(&self) -> usize {
        self.lie_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn action(&self, x: usize) -> &Matrix {
        &self.action[x]
    }
}

/// `L ⊕ V` with `[X + a, Y + b] = [X, Y] + X.b`; Lie basis first, then the
/// module basis.
pub fn hemisemidirect(lie: &StructureTensor, module: &ModuleAction) -> Result<StructureTensor> {
    if !is_antisymmetric(lie) || !check_left_leibniz(lie).is_empty() {
        return Err(Error::NotLie);
    }
    check_dim("module over Lie algebra", lie.dim(), module.lie_dim())?;
    if let Some((a, b)) = module.first_axiom_failure(lie) {
        return Err(Error::InvalidModule(a, b));
    }
    let l = lie.dim();
    let m = module.module_dim();
    let n = l + m;
    let mut t = StructureTensor::zeros(n);
    for (i, j, terms) in lie.nonzero_brackets() {
        for (k, v) in terms {
            t.set(k, i, j, v);
        }
    }
    for x in 0..l {
        let a = module.action(x);
        for s in 0..m {
            for r in 0..m {
                if !a[(r, s)].is_zero() {
                    t.set(l + r, x, l + s, a[(r, s)].clone());
                }
            }
        }
    }
    if let Some(labels) = lie.labels() {
        let mut all = labels.to_vec();
        all.extend((1..=m).map(|i| format!("v{i}")));
        t = t.with_labels(all);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn sl2() -> StructureTensor {
        // h, e, f
        StructureTensor::from_brackets(
            3,
            vec![
                (0, 1, vec![(1, q(2))]),
                (1, 0, vec![(1, q(-2))]),
                (0, 2, vec![(2, q(-2))]),
                (2, 0, vec![(2, q(2))]),
                (1, 2, vec![(0, q(1))]),
                (2, 1, vec![(0, q(-1))]),
            ],
        )
    }

    fn heisenberg() -> StructureTensor {
        StructureTensor::from_brackets(3, vec![(0, 1, vec![(2, q(1))]), (1, 0, vec![(2, q(-1))])])
    }

    fn r2() -> StructureTensor {
        StructureTensor::from_brackets(2, vec![(0, 1, vec![(1, q(1))]), (1, 0, vec![(1, q(-1))])])
    }

    fn sec4_one() -> LeibnizAlgebra {
        let v = ModuleAction::new(&r2(), 1, vec![Matrix::from_i64(&[&[1]]), Matrix::from_i64(&[&[0]])])
            .unwrap();
        LeibnizAlgebra::new(hemisemidirect(&r2(), &v).unwrap()).unwrap()
    }

    fn vecq(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn leibniz_identity_examples() {
        assert!(check_left_leibniz(&StructureTensor::zeros(4)).is_empty());
        assert!(check_left_leibniz(&sl2()).is_empty());
        let bad = StructureTensor::from_brackets(2, vec![(0, 1, vec![(0, q(1))])]);
        let v = check_left_leibniz(&bad);
        assert!(!v.is_empty());
        let hit = v.iter().find(|v| (v.i, v.j, v.k) == (0, 1, 1)).unwrap();
        assert_eq!(hit.defect, vecq(&[-1, 0]));
    }

    #[test]
    fn one_dimensional_self_bracket_is_rejected() {
        let t = StructureTensor::from_brackets(1, vec![(0, 0, vec![(0, q(3))])]);
        assert!(LeibnizAlgebra::new(t).is_err());
        assert!(LeibnizAlgebra::new(StructureTensor::zeros(1)).is_ok());
        assert!(LeibnizAlgebra::new(StructureTensor::zeros(0)).is_ok());
    }

    #[test]
    fn opposite_examples() {
        let ab = StructureTensor::zeros(3);
        assert_eq!(ab.opposite(), ab);
        let s = sl2();
        assert_eq!(s.opposite().opposite(), s);
        let neg = s.opposite();
        assert_eq!(neg.coeff(1, 0, 1), &q(-2));
        assert!(check_left_leibniz(&neg).is_empty());
    }

    #[test]
    fn bracket_examples() {
        let s = sl2();
        assert_eq!(s.bracket(&vecq(&[0, 0, 0]), &vecq(&[1, 2, 3])).unwrap(), vecq(&[0, 0, 0]));
        assert_eq!(s.bracket(&vecq(&[1, 0, 0]), &vecq(&[0, 1, 0])).unwrap(), vecq(&[0, 2, 0]));
        assert!(s.bracket(&vecq(&[1, 0]), &vecq(&[0, 1, 0])).is_err());
        // x . v = v
        let l = sec4_one();
        assert_eq!(l.bracket(&vecq(&[1, 0, 0]), &vecq(&[0, 0, 1])).unwrap(), vecq(&[0, 0, 1]));
    }

    #[test]
    fn kernels_and_centers() {
        let s = LeibnizAlgebra::new(sl2()).unwrap();
        assert!(s.leibniz_kernel().is_zero());
        assert!(s.left_center().is_zero());
        assert!(s.center().is_zero());
        assert!(s.is_lie());

        let ab = LeibnizAlgebra::new(StructureTensor::zeros(3)).unwrap();
        assert_eq!(ab.left_center(), Subspace::full(3));
        assert_eq!(ab.center(), Subspace::full(3));
        assert!(ab.is_lie());

        let h = LeibnizAlgebra::new(heisenberg()).unwrap();
        assert_eq!(h.center(), Subspace::span(3, vec![vecq(&[0, 0, 1])]).unwrap());

        let l = sec4_one();
        let v = Subspace::span(3, vec![vecq(&[0, 0, 1])]).unwrap();
        assert_eq!(l.leibniz_kernel(), v);
        assert_eq!(l.left_center(), v);
        assert!(l.center().is_zero());
        assert!(!l.is_lie());
    }

    #[test]
    fn ideals() {
        let s = LeibnizAlgebra::new(sl2()).unwrap();
        assert!(s.is_ideal(&Subspace::zero(3)).unwrap());
        let e = Subspace::span(3, vec![vecq(&[0, 1, 0])]).unwrap();
        assert!(!s.is_ideal(&e).unwrap());
        assert_eq!(s.quotient(&e), Err(Error::NotIdeal));
        let l = sec4_one();
        assert!(l.is_ideal(&l.leibniz_kernel()).unwrap());
    }

    #[test]
    fn quotients() {
        let l = sec4_one();
        let same = l.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(same.tensor, *l.tensor());
        assert_eq!(same.projection, Matrix::identity(3));

        let q_ = l.quotient(&l.leibniz_kernel()).unwrap();
        assert_eq!(q_.tensor, r2());
        assert_eq!(q_.complement, vec![0, 1]);
        assert!(is_antisymmetric(&q_.tensor));
    }

    #[test]
    fn module_axiom_is_checked() {
        // y acting nontrivially on a 1-dim module breaks [x,y].v = x.(y.v) - y.(x.v)
        let bad = ModuleAction::new(&r2(), 1, vec![Matrix::from_i64(&[&[1]]), Matrix::from_i64(&[&[1]])]);
        assert_eq!(bad, Err(Error::InvalidModule(0, 1)));
        let triv = ModuleAction::trivial(&sl2(), 2);
        let t = hemisemidirect(&sl2(), &triv).unwrap();
        assert_eq!(t.dim(), 5);
        assert_eq!(t.nonzero_brackets().len(), sl2().nonzero_brackets().len());
        assert_eq!(hemisemidirect(&sec4_one().into_tensor(), &ModuleAction::trivial(&r2(), 1)), Err(Error::NotLie));
    }
}
