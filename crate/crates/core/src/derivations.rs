//! Derivations, inner derivations, and the two completeness notions.
//!
//! * [`Definition::Def1`]: `Z(L/Leib(L)) = 0` and every derivation agrees
//!   with some left multiplication modulo `Leib(L)`.
//! * [`Definition::Def2`]: `Z(L) = 0` and every derivation is inner.

use std::fmt;

use serde::Serialize;

use crate::algebra::{LeibnizAlgebra, LinearMapMatrix};
use crate::error::{check_dim, Result};
use crate::linalg::echelon::{dense_to_sparse, normalize_row, SparseRow};
use crate::linalg::{Matrix, Rational, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Definition {
    #[serde(rename = "def1")]
    Def1,
    #[serde(rename = "def2")]
    Def2,
}

impl fmt::Display for Definition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Definition::Def1 => write!(f, "def1 (center of L/Leib(L) trivial, derivations inner modulo Leib(L))"),
            Definition::Def2 => write!(f, "def2 (center trivial, all derivations inner)"),
        }
    }
}

/// `D([x,y]) = [D(x),y] + [x,D(y)]` on basis pairs.
pub fn is_derivation(l: &LeibnizAlgebra, d: &LinearMapMatrix) -> Result<bool> {
    check_dim("derivation test", l.dim(), d.dim())?;
    let n = l.dim();
    let t = l.tensor();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.apply(&t.basis_bracket(i, j))?;
            let a = t.bracket_unchecked(&d.image(i), &l.basis_vector(j));
            let b = t.bracket_unchecked(&l.basis_vector(i), &d.image(j));
            if lhs.iter().zip(a.iter().zip(&b)).any(|(x, (y, z))| *x != y + z) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One equation per `(i, j, k)` in the unknowns `d[r][c]` at `r * n + c`:
/// `sum_l c[l][i][j] d[k][l] - sum_l d[l][i] c[k][l][j] - sum_l d[l][j] c[k][i][l] = 0`.
pub(crate) fn derivation_equations(l: &LeibnizAlgebra) -> impl Iterator<Item = SparseRow> + '_ {
    let n = l.dim();
    let t = l.tensor();
    (0..n).flat_map(move |i| {
        (0..n).flat_map(move |j| {
            (0..n).map(move |k| {
                let mut terms = Vec::new();
                for m in 0..n {
                    terms.push((k * n + m, t.coeff(m, i, j).clone()));
                    terms.push((m * n + i, -t.coeff(k, m, j)));
                    terms.push((m * n + j, -t.coeff(k, i, m)));
                }
                normalize_row(terms)
            })
        })
    })
}

/// `Der(L)` as a subspace of vectorized `n x n` matrices.
pub fn derivation_space(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    Subspace::from_sparse_kernel(n * n, derivation_equations(l))
}

/// `L_x : y -> [x, y]`.
pub fn left_multiplication(l: &LeibnizAlgebra, x: &[Rational]) -> Result<LinearMapMatrix> {
    check_dim("left multiplication", l.dim(), x.len())?;
    let n = l.dim();
    let images = (0..n)
        .map(|j| l.tensor().bracket_unchecked(x, &l.basis_vector(j)))
        .collect();
    LinearMapMatrix::from_images(n, images)
}

/// Span of `L_{e_i}` in vectorized form.
pub fn inner_derivation_space(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    let gens = (0..n).map(|i| {
        let lm = left_multiplication(l, &l.basis_vector(i)).expect("basis vector");
        dense_to_sparse(&lm.to_flat())
    });
    Subspace::from_sparse_span(n * n, gens)
}

/// Basis derivation together with an element `x` satisfying
/// `Im(D - L_x) ⊆ Leib(L)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InnerWitness {
    pub derivation: LinearMapMatrix,
    pub x: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    pub definition: Definition,
    pub verdict: bool,
    /// The nonzero center that breaks condition (a). For def1 this is the
    /// center of `L/Leib(L)` lifted along the quotient's coordinate section.
    pub center_obstruction: Option<Subspace>,
    /// A derivation violating condition (b).
    pub derivation_obstruction: Option<LinearMapMatrix>,
    pub witnesses: Vec<InnerWitness>,
}

fn basis_maps(space: &Subspace, n: usize) -> Vec<LinearMapMatrix> {
    space
        .vectors()
        .map(|v| LinearMapMatrix::from_flat(n, v).expect("vectorized map"))
        .collect()
}

pub fn is_complete_def2(l: &LeibnizAlgebra) -> CompletenessReport {
    let n = l.dim();
    let center = l.center();
    let der = derivation_space(l);
    let inner = inner_derivation_space(l);
    let derivation_obstruction = der
        .vectors()
        .find(|v| !inner.contains(v).expect("same ambient"))
        .map(|v| LinearMapMatrix::from_flat(n, v).expect("vectorized map"));
    let center_obstruction = (!center.is_zero()).then_some(center);
    CompletenessReport {
        definition: Definition::Def2,
        verdict: center_obstruction.is_none() && derivation_obstruction.is_none(),
        center_obstruction,
        derivation_obstruction,
        witnesses: Vec::new(),
    }
}

/// Condition (b) is decided per basis derivation `D` by solving
/// `π∘(D - L_x) = 0` for `x`, with `π` the projection onto `L/Leib(L)`.
pub fn is_complete_def1(l: &LeibnizAlgebra) -> CompletenessReport {
    let n = l.dim();
    let leib = l.leibniz_kernel();
    let quotient = l.quotient(&leib).expect("Leib(L) is an ideal");
    let qcenter = LeibnizAlgebra::new(quotient.tensor.clone())
        .expect("quotient of a Leibniz algebra")
        .center();
    let center_obstruction = (!qcenter.is_zero()).then(|| {
        let lifted = qcenter.vectors().map(|v| quotient.lift(v, n)).collect();
        Subspace::span(n, lifted).expect("lifted vectors")
    });

    // column i of the system: coordinates of π∘L_{e_i}, flattened over (row a, column j)
    let proj = &quotient.projection;
    let m = proj.rows();
    let mut system = Matrix::zeros(m * n, n);
    for i in 0..n {
        let lm = left_multiplication(l, &l.basis_vector(i)).expect("basis vector");
        let pl = proj.mul(lm.matrix()).expect("shapes agree");
        for a in 0..m {
            for j in 0..n {
                system[(a * n + j, i)] = pl[(a, j)].clone();
            }
        }
    }

    let mut witnesses = Vec::new();
    let mut derivation_obstruction = None;
    for d in basis_maps(&derivation_space(l), n) {
        let pd = proj.mul(d.matrix()).expect("shapes agree");
        let rhs: Vec<Rational> = pd.entries().to_vec();
        match system.solve(&rhs).expect("shapes agree") {
            Some(x) => witnesses.push(InnerWitness { derivation: d, x }),
            None => {
                if derivation_obstruction.is_none() {
                    derivation_obstruction = Some(d);
                }
            }
        }
    }
    CompletenessReport {
        definition: Definition::Def1,
        verdict: center_obstruction.is_none() && derivation_obstruction.is_none(),
        center_obstruction,
        derivation_obstruction,
        witnesses,
    }
}

pub fn is_complete(l: &LeibnizAlgebra, def: Definition) -> CompletenessReport {
    match def {
        Definition::Def1 => is_complete_def1(l),
        Definition::Def2 => is_complete_def2(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureTensor;
    use crate::catalog;
    use crate::linalg::q;

    fn vecq(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn derivation_membership() {
        let ab = LeibnizAlgebra::new(StructureTensor::zeros(3)).unwrap();
        assert!(is_derivation(&ab, &LinearMapMatrix::identity(3)).unwrap());
        let sl2 = catalog::sl2();
        assert!(!is_derivation(&sl2, &LinearMapMatrix::identity(3)).unwrap());
        assert!(is_derivation(&sl2, &LinearMapMatrix::identity(2)).is_err());

        // δ(x) = δ(y) = 0, δ(v) = v
        let l = catalog::example_sec4_one();
        let delta = LinearMapMatrix::from_images(3, vec![vecq(&[0, 0, 0]), vecq(&[0, 0, 0]), vecq(&[0, 0, 1])]).unwrap();
        assert!(is_derivation(&l, &delta).unwrap());
    }

    #[test]
    fn derivation_space_dimensions() {
        // oracle: independent sympy rank computation
        let ab = LeibnizAlgebra::new(StructureTensor::zeros(2)).unwrap();
        assert_eq!(derivation_space(&ab), Subspace::full(4));
        assert_eq!(derivation_space(&catalog::sl2()).dim(), 3);
        assert_eq!(derivation_space(&catalog::heisenberg()).dim(), 6);
        assert_eq!(derivation_space(&catalog::example_sec4_one()).dim(), 3);
        assert_eq!(derivation_space(&catalog::example_sec4_two()).dim(), 6);
        let solv = catalog::example_solvable(5).unwrap();
        assert_eq!(derivation_space(&solv).dim(), 3);
    }

    #[test]
    fn every_basis_derivation_passes_the_identity() {
        for l in [catalog::heisenberg(), catalog::example_sec4_two(), catalog::example_solvable(4).unwrap()] {
            for d in basis_maps(&derivation_space(&l), l.dim()) {
                assert!(is_derivation(&l, &d).unwrap());
            }
        }
    }

    #[test]
    fn left_multiplication_examples() {
        let sl2 = catalog::sl2();
        assert!(left_multiplication(&sl2, &vecq(&[0, 0, 0])).unwrap().is_zero());
        let lh = left_multiplication(&sl2, &vecq(&[1, 0, 0])).unwrap();
        assert_eq!(lh.image(0), vecq(&[0, 0, 0]));
        assert_eq!(lh.image(1), vecq(&[0, 2, 0]));
        assert_eq!(lh.image(2), vecq(&[0, 0, -2]));
        let l = catalog::example_sec4_one();
        assert!(left_multiplication(&l, &vecq(&[0, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn inner_derivation_dimensions() {
        let ab = LeibnizAlgebra::new(StructureTensor::zeros(3)).unwrap();
        assert!(inner_derivation_space(&ab).is_zero());
        let sl2 = catalog::sl2();
        assert_eq!(inner_derivation_space(&sl2), derivation_space(&sl2));
        assert_eq!(inner_derivation_space(&sl2).dim(), 3);
        assert_eq!(inner_derivation_space(&catalog::heisenberg()).dim(), 2);
    }

    #[test]
    fn completeness_controls() {
        let sl2 = catalog::sl2();
        assert!(is_complete_def1(&sl2).verdict);
        assert!(is_complete_def2(&sl2).verdict);

        let h = catalog::heisenberg();
        let r2 = is_complete_def2(&h);
        assert!(!r2.verdict);
        assert_eq!(r2.center_obstruction, Some(Subspace::span(3, vec![vecq(&[0, 0, 1])]).unwrap()));
        let r1 = is_complete_def1(&h);
        assert!(!r1.verdict);
        assert!(r1.center_obstruction.is_some());
    }

    #[test]
    fn completeness_of_hemisemidirect_examples() {
        for l in [catalog::example_sec4_one(), catalog::example_sec4_two()] {
            let r1 = is_complete_def1(&l);
            assert!(r1.verdict, "{r1:?}");
            assert_eq!(r1.witnesses.len(), derivation_space(&l).dim());
            let r2 = is_complete_def2(&l);
            assert!(!r2.verdict);
            assert!(r2.center_obstruction.is_none());
            assert!(r2.derivation_obstruction.is_some());
        }
    }

    #[test]
    fn completeness_of_the_solvable_family_as_computed() {
        // oracle: independent sympy decider. y spans the center of L/Leib(L).
        for n in [4, 5] {
            let l = catalog::example_solvable(n).unwrap();
            let r1 = is_complete_def1(&l);
            assert!(!r1.verdict);
            let y = catalog::example_solvable_y(n);
            let mut expected = vec![q(0); n + 2];
            expected[y] = q(1);
            assert_eq!(r1.center_obstruction, Some(Subspace::span(n + 2, vec![expected]).unwrap()));
            assert!(r1.derivation_obstruction.is_none());
            assert!(is_complete_def2(&l).verdict);
        }
    }

    #[test]
    fn def1_witnesses_satisfy_the_condition() {
        let l = catalog::example_sec4_two();
        let leib = l.leibniz_kernel();
        for w in is_complete_def1(&l).witnesses {
            let diff = w.derivation.sub(&left_multiplication(&l, &w.x).unwrap()).unwrap();
            for j in 0..l.dim() {
                assert!(leib.contains(&diff.image(j)).unwrap());
            }
        }
    }

    #[test]
    fn empty_algebra_is_vacuously_complete() {
        let z = LeibnizAlgebra::new(StructureTensor::zeros(0)).unwrap();
        assert!(is_complete_def1(&z).verdict);
        assert!(is_complete_def2(&z).verdict);
    }
}
