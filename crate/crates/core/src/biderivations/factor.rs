//! Solving `B(x,y) - [φ(x),y] ∈ S` (left) and `B(x,y) - [ψ(y),x] ∈ S`
//! (right) for a linear map, with a certificate when no map exists.
//!
//! Membership in `S` is imposed by reducing both sides along `S` onto the
//! coordinate complement (the non-pivot coordinates of its echelon basis).
//! The system splits into one block per basis vector: on the left side the
//! unknowns of block `i` are the coordinates of `φ(e_i)`. Each block is
//! eliminated equation by equation so the first inconsistency can be
//! reported together with the steps that led to it.

use serde::Serialize;

use super::{is_left_biderivation, is_right_biderivation};
use crate::algebra::{BilinearTensor, LeibnizAlgebra, LinearMapMatrix, StructureTensor};
use crate::error::{check_dim, Result};
use crate::linalg::{Rational, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `B(x,y) = [φ(x),y] + p(x,y)`
    Left,
    /// `B(x,y) = [ψ(y),x] + q(x,y)`
    Right,
}

impl Side {
    fn map_name(self) -> &'static str {
        match self {
            Side::Left => "phi",
            Side::Right => "psi",
        }
    }
}

/// One equation of a block: coordinate `k` of the condition at `B(e_i,e_j)`,
/// already reduced along `S`. `coefficients` are indexed by the coordinates
/// of the block's unknown vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationRow {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coefficients: Vec<(usize, Rational)>,
    pub rhs: Rational,
}

/// An equation that produced a new pivot, shown after reduction by the
/// earlier steps and scaled so the pivot coefficient is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationStep {
    pub equation: EquationRow,
    pub pivot: usize,
    pub reduced: Vec<(usize, Rational)>,
    pub reduced_rhs: Rational,
}

/// Proof that no map exists: after the recorded steps, `equation` reduces to
/// `0 = defect` with `defect != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub block: usize,
    pub steps: Vec<EliminationStep>,
    pub equation: EquationRow,
    pub defect: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationResult {
    pub side: Side,
    pub feasible: bool,
    /// φ for the left side, ψ for the right side; free coordinates are zero.
    pub map: Option<LinearMapMatrix>,
    /// p (left) or q (right).
    pub residual: Option<BilinearTensor>,
    pub residual_subspace: Subspace,
    pub certificate: Option<Certificate>,
    /// Only computed when `S` is the Leibniz kernel: whether p is a left
    /// biderivation (left side) or q a right one (right side).
    pub residual_biderivation: Option<bool>,
}

impl FactorizationResult {
    /// Recomputes the residual from `map` and checks it lands in the
    /// residual subspace. Always false for infeasible results.
    pub fn verify(&self, l: &LeibnizAlgebra, b: &BilinearTensor) -> Result<bool> {
        let Some(map) = &self.map else {
            return Ok(false);
        };
        let r = residual(l, b, map, self.side)?;
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                if !self.residual_subspace.contains(&r.value(i, j))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Human-readable account of the certificate, one line per step.
    pub fn explain(&self, t: &StructureTensor) -> Vec<String> {
        match &self.certificate {
            None => Vec::new(),
            Some(c) => c.explain(t, self.side),
        }
    }
}

fn unknown(t: &StructureTensor, side: Side, block: usize, r: usize) -> String {
    format!("{}({})_{}", side.map_name(), t.label(block), t.label(r))
}

fn linear_form(t: &StructureTensor, side: Side, block: usize, terms: &[(usize, Rational)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (r, c)) in terms.iter().enumerate() {
        let name = unknown(t, side, block, *r);
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            s.push_str(&format!("{abs}*"));
        }
        s.push_str(&name);
    }
    s
}

impl Certificate {
    pub fn explain(&self, t: &StructureTensor, side: Side) -> Vec<String> {
        let at = |e: &EquationRow| format!("B({},{})_{}", t.label(e.i), t.label(e.j), t.label(e.k));
        let mut out = Vec::new();
        for s in &self.steps {
            out.push(format!(
                "{}: {} = {}  gives  {} = {}",
                at(&s.equation),
                linear_form(t, side, self.block, &s.equation.coefficients),
                s.equation.rhs,
                linear_form(t, side, self.block, &s.reduced),
                s.reduced_rhs
            ));
        }
        out.push(format!(
            "{}: {} = {}  reduces to  0 = {}, which is absurd",
            at(&self.equation),
            linear_form(t, side, self.block, &self.equation.coefficients),
            self.equation.rhs,
            self.defect
        ));
        out
    }
}

enum Outcome {
    Redundant,
    Pivot(EliminationStep),
    Inconsistent(Rational),
}

/// Fully reduced rows `(coefficients, rhs, pivot)` for one block.
struct Block {
    rows: Vec<(Vec<Rational>, Rational, usize)>,
    n: usize,
}

impl Block {
    fn new(n: usize) -> Self {
        Block { rows: Vec::new(), n }
    }

    fn push(&mut self, eq: &EquationRow) -> Outcome {
        let mut coeffs = vec![Rational::zero(); self.n];
        for (r, c) in &eq.coefficients {
            coeffs[*r] = c.clone();
        }
        let mut rhs = eq.rhs.clone();
        for (row, row_rhs, p) in &self.rows {
            if coeffs[*p].is_zero() {
                continue;
            }
            let f = coeffs[*p].clone();
            for (a, b) in coeffs.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            rhs -= &f * row_rhs;
        }
        let Some(p) = coeffs.iter().position(|c| !c.is_zero()) else {
            return if rhs.is_zero() {
                Outcome::Redundant
            } else {
                Outcome::Inconsistent(rhs)
            };
        };
        let inv = coeffs[p].recip().expect("nonzero pivot");
        for c in coeffs.iter_mut() {
            *c = &*c * &inv;
        }
        rhs = &rhs * &inv;
        for (row, row_rhs, _) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (a, b) in row.iter_mut().zip(&coeffs) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            *row_rhs -= &f * &rhs;
        }
        let reduced = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (r, c.clone()))
            .collect();
        self.rows.push((coeffs, rhs.clone(), p));
        Outcome::Pivot(EliminationStep {
            equation: eq.clone(),
            pivot: p,
            reduced,
            reduced_rhs: rhs,
        })
    }

    fn solution(&self) -> Vec<Rational> {
        let mut u = vec![Rational::zero(); self.n];
        for (_, rhs, p) in &self.rows {
            u[*p] = rhs.clone();
        }
        u
    }
}

pub(crate) fn residual(
    l: &LeibnizAlgebra,
    b: &BilinearTensor,
    map: &LinearMapMatrix,
    side: Side,
) -> Result<BilinearTensor> {
    check_dim("factorization map", l.dim(), map.dim())?;
    let n = l.dim();
    let t = l.tensor();
    let mut out = BilinearTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let bracket = match side {
                Side::Left => t.bracket_unchecked(&map.image(i), &l.basis_vector(j)),
                Side::Right => t.bracket_unchecked(&map.image(j), &l.basis_vector(i)),
            };
            for (k, (v, c)) in b.value(i, j).into_iter().zip(bracket).enumerate() {
                out.set(k, i, j, v - c);
            }
        }
    }
    Ok(out)
}

fn factor(l: &LeibnizAlgebra, b: &BilinearTensor, s: &Subspace, side: Side) -> Result<FactorizationResult> {
    let n = l.dim();
    check_dim("factorization tensor", n, b.dim())?;
    check_dim("factorization subspace", n, s.ambient_dim())?;
    let t = l.tensor();
    let free = s.non_pivots();
    // reduced[r][a] = reduce_S([e_r, e_a])
    let reduced: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|r| (0..n).map(|a| s.reduce_unchecked(&t.basis_bracket(r, a))).collect())
        .collect();

    let mut images = Vec::with_capacity(n);
    for block in 0..n {
        let mut solver = Block::new(n);
        let mut steps = Vec::new();
        for other in 0..n {
            // left: equation at B(e_block, e_other); right: at B(e_other, e_block)
            let (i, j) = match side {
                Side::Left => (block, other),
                Side::Right => (other, block),
            };
            let target = s.reduce_unchecked(&b.value(i, j));
            for &k in &free {
                let coefficients = (0..n)
                    .filter(|&r| !reduced[r][other][k].is_zero())
                    .map(|r| (r, reduced[r][other][k].clone()))
                    .collect();
                let eq = EquationRow {
                    i,
                    j,
                    k,
                    coefficients,
                    rhs: target[k].clone(),
                };
                match solver.push(&eq) {
                    Outcome::Redundant => {}
                    Outcome::Pivot(step) => steps.push(step),
                    Outcome::Inconsistent(defect) => {
                        return Ok(FactorizationResult {
                            side,
                            feasible: false,
                            map: None,
                            residual: None,
                            residual_subspace: s.clone(),
                            certificate: Some(Certificate {
                                block,
                                steps,
                                equation: eq,
                                defect,
                            }),
                            residual_biderivation: None,
                        });
                    }
                }
            }
        }
        images.push(solver.solution());
    }

    let map = LinearMapMatrix::from_images(n, images)?;
    let res = residual(l, b, &map, side)?;
    let residual_biderivation = if *s == l.leibniz_kernel() {
        Some(match side {
            Side::Left => is_left_biderivation(l, &res)?,
            Side::Right => is_right_biderivation(l, &res)?,
        })
    } else {
        None
    };
    Ok(FactorizationResult {
        side,
        feasible: true,
        map: Some(map),
        residual: Some(res),
        residual_subspace: s.clone(),
        certificate: None,
        residual_biderivation,
    })
}

/// Finds φ with `B(x,y) - [φ(x),y] ∈ S` for all x, y.
pub fn factor_left_modulo(l: &LeibnizAlgebra, b: &BilinearTensor, s: &Subspace) -> Result<FactorizationResult> {
    factor(l, b, s, Side::Left)
}

/// Finds ψ with `B(x,y) - [ψ(y),x] ∈ S` for all x, y.
pub fn factor_right_modulo(l: &LeibnizAlgebra, b: &BilinearTensor, s: &Subspace) -> Result<FactorizationResult> {
    factor(l, b, s, Side::Right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::q;

    #[test]
    fn bracket_factors_through_identity() {
        let sl2 = catalog::sl2();
        let b = sl2.tensor().as_bilinear();
        let left = factor_left_modulo(&sl2, &b, &Subspace::zero(3)).unwrap();
        assert!(left.feasible);
        assert_eq!(left.map, Some(LinearMapMatrix::identity(3)));
        assert!(left.residual.as_ref().unwrap().is_zero());
        assert!(left.verify(&sl2, &b).unwrap());

        let right = factor_right_modulo(&sl2, &b, &Subspace::zero(3)).unwrap();
        assert_eq!(right.map, Some(LinearMapMatrix::identity(3).scale(&q(-1))));
        assert!(right.verify(&sl2, &b).unwrap());
    }

    #[test]
    fn zero_tensor_factors_with_zero_map() {
        let l = catalog::example_sec4_one();
        for s in [Subspace::zero(3), l.leibniz_kernel()] {
            let r = factor_right_modulo(&l, &BilinearTensor::zeros(3), &s).unwrap();
            assert!(r.feasible);
            assert_eq!(r.map, Some(LinearMapMatrix::zero(3)));
        }
    }

    #[test]
    fn sec4_one_certificate_follows_the_contradiction_chain() {
        let l = catalog::example_sec4_one();
        let r = factor_left_modulo(&l, &catalog::sec4_one_f(), &Subspace::zero(3)).unwrap();
        assert!(!r.feasible);
        let c = r.certificate.as_ref().unwrap();
        let (x, y, v) = (0, 1, 2);
        assert_eq!(c.block, v);
        let chain: Vec<_> = c
            .steps
            .iter()
            .map(|s| (s.equation.i, s.equation.j, s.equation.k, s.reduced.clone(), s.reduced_rhs.clone()))
            .collect();
        assert_eq!(
            chain,
            vec![
                // [φ(v), x] has y-coordinate -B, so B = 0
                (v, x, y, vec![(y, q(1))], q(0)),
                // [φ(v), y] has y-coordinate A, so A = 0
                (v, y, y, vec![(x, q(1))], q(0)),
            ]
        );
        assert_eq!((c.equation.i, c.equation.j, c.equation.k), (v, v, v));
        assert_eq!(c.defect, q(1));
        let text = r.explain(l.tensor());
        assert_eq!(text.len(), 3);
        assert!(text[2].contains("absurd"));
    }

    #[test]
    fn sec4_two_is_infeasible_on_both_sides() {
        let l = catalog::example_sec4_two();
        let f = catalog::sec4_two_f();
        let left = factor_left_modulo(&l, &f, &Subspace::zero(4)).unwrap();
        let right = factor_right_modulo(&l, &f, &Subspace::zero(4)).unwrap();
        assert!(!left.feasible && !right.feasible);
        assert!(!left.certificate.unwrap().defect.is_zero());
        // modulo the Leibniz kernel the obstruction disappears
        let leib = l.leibniz_kernel();
        let left = factor_left_modulo(&l, &f, &leib).unwrap();
        assert!(left.feasible);
        assert_eq!(left.residual_biderivation, Some(true));
        assert!(left.verify(&l, &f).unwrap());
    }

    #[test]
    fn dimension_errors() {
        let l = catalog::sl2();
        assert!(factor_left_modulo(&l, &BilinearTensor::zeros(2), &Subspace::zero(3)).is_err());
        assert!(factor_left_modulo(&l, &BilinearTensor::zeros(3), &Subspace::zero(2)).is_err());
    }
}
