//! Biderivations of the form `[g(x), y]`: the commuting-map propositions,
//! the σ/θ conditions for complete algebras, and the converse construction
//! for algebras complete in the second sense.

use serde::Serialize;

use super::factor::{factor_left_modulo, factor_right_modulo, Side};
use super::{
    basis_tensors, bider_from_map, biderivation_space, commuting_map_space, g_left_terms,
    is_biderivation, skew_commuting_map_space,
};
use crate::algebra::{BilinearTensor, LeibnizAlgebra, LinearMapMatrix};
use crate::derivations::{is_complete, Definition};
use crate::error::{check_dim, Error, Result};
use crate::linalg::echelon::normalize_row;
use crate::linalg::{Rational, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Skew,
}

/// Linear maps (vectorized row-major) whose image lies in `target`.
pub fn maps_into(n: usize, target: &Subspace) -> Subspace {
    let mut gens = Vec::new();
    for z in target.vectors() {
        for c in 0..n {
            let mut g = vec![Rational::zero(); n * n];
            for a in 0..n {
                g[a * n + c] = z[a].clone();
            }
            gens.push(g);
        }
    }
    Subspace::span(n * n, gens).expect("generator length n*n")
}

/// Solutions of the homogeneous left system `[g(x), y] = 0`; two left
/// factorizations of the same tensor with `S = 0` differ by such a map.
pub fn left_factor_kernel(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                eqs.push(normalize_row(g_left_terms(l, i, j, k, 1)));
            }
        }
    }
    Subspace::from_sparse_kernel(n * n, eqs)
}

#[derive(Clone, Debug, Serialize)]
pub struct PropositionReport {
    pub commuting_dim: usize,
    pub skew_commuting_dim: usize,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Every commuting map gives a skew-symmetric biderivation, every
/// skew-commuting map a symmetric one. Checked on basis maps.
pub fn verify_prop_commuting(l: &LeibnizAlgebra) -> PropositionReport {
    let n = l.dim();
    let comm = commuting_map_space(l);
    let skew = skew_commuting_map_space(l);
    let mut violations = Vec::new();
    for (space, name, sym) in [(&comm, "commuting", Symmetry::Skew), (&skew, "skew-commuting", Symmetry::Symmetric)] {
        for (idx, v) in space.vectors().enumerate() {
            let g = LinearMapMatrix::from_flat(n, v).expect("vectorized map");
            let b = bider_from_map(l, &g).expect("dims");
            if !is_biderivation(l, &b).expect("dims") {
                violations.push(format!("{name} basis map {idx}: [g(x),y] is not a biderivation"));
            }
            let ok = match sym {
                Symmetry::Skew => b.symmetric_part().is_zero(),
                Symmetry::Symmetric => b.skew_part().is_zero(),
            };
            if !ok {
                violations.push(format!("{name} basis map {idx}: [g(x),y] is not {sym:?}"));
            }
        }
    }
    PropositionReport {
        commuting_dim: comm.dim(),
        skew_commuting_dim: skew.dim(),
        passed: violations.is_empty(),
        violations,
    }
}

/// Outcome for one symmetry part of a biderivation: the left and right maps
/// and their difference (symmetric part) or sum (skew part).
#[derive(Clone, Debug, Serialize)]
pub struct PartCheck {
    pub symmetry: Symmetry,
    pub part: BilinearTensor,
    pub phi: Option<LinearMapMatrix>,
    pub psi: Option<LinearMapMatrix>,
    pub combined: Option<LinearMapMatrix>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaThetaReport {
    pub definition: Definition,
    pub symmetric: PartCheck,
    pub skew: PartCheck,
    pub holds: bool,
}

fn check_part(
    l: &LeibnizAlgebra,
    part: BilinearTensor,
    symmetry: Symmetry,
    def: Definition,
) -> Result<PartCheck> {
    let n = l.dim();
    let leib = l.leibniz_kernel();
    let s = match def {
        Definition::Def1 => leib.clone(),
        Definition::Def2 => Subspace::zero(n),
    };
    let left = factor_left_modulo(l, &part, &s)?;
    let right = factor_right_modulo(l, &part, &s)?;
    let (Some(phi), Some(psi)) = (left.map, right.map) else {
        return Ok(PartCheck {
            symmetry,
            part,
            phi: None,
            psi: None,
            combined: None,
            holds: false,
        });
    };
    let combined = match symmetry {
        Symmetry::Symmetric => phi.sub(&psi)?,
        Symmetry::Skew => phi.add(&psi)?,
    };
    let holds = match def {
        // [combined(x), y] ∈ Leib(L)
        Definition::Def1 => {
            let b = bider_from_map(l, &combined)?;
            (0..n).all(|i| (0..n).all(|j| leib.contains(&b.value(i, j)).expect("dims")))
        }
        // combined(x) ∈ Z^l(L)
        Definition::Def2 => {
            let zl = l.left_center();
            (0..n).all(|i| zl.contains(&combined.image(i)).expect("dims"))
        }
    };
    Ok(PartCheck {
        symmetry,
        part,
        phi: Some(phi),
        psi: Some(psi),
        combined: Some(combined),
        holds,
    })
}

/// For `L` complete under `def` and a biderivation `B`: the symmetric part
/// satisfies the condition for `σ = φ - ψ`, the skew part for `θ = φ + ψ`.
/// Under the first definition the condition is `[σ(x),y] ∈ Leib(L)`, under
/// the second `Im σ ⊆ Z^l(L)`.
pub fn verify_sigma_theta(l: &LeibnizAlgebra, b: &BilinearTensor, def: Definition) -> Result<SigmaThetaReport> {
    check_dim("sigma/theta tensor", l.dim(), b.dim())?;
    if !is_biderivation(l, b)? {
        return Err(Error::NotBiderivation);
    }
    if !is_complete(l, def).verdict {
        return Err(Error::NotComplete(def));
    }
    let half = Rational::new(1, 2);
    let symmetric = check_part(l, b.symmetric_part().scale(&half), Symmetry::Symmetric, def)?;
    let skew = check_part(l, b.skew_part().scale(&half), Symmetry::Skew, def)?;
    Ok(SigmaThetaReport {
        definition: def,
        holds: symmetric.holds && skew.holds,
        symmetric,
        skew,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConverseEntry {
    /// Index of the biderivation in the basis of the biderivation space.
    pub basis_index: usize,
    pub symmetry: Symmetry,
    pub part: BilinearTensor,
    pub g: Option<LinearMapMatrix>,
    /// g is skew-commuting (symmetric part) or commuting (skew part).
    pub in_map_space: bool,
    pub reproduces: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConverseReport {
    pub entries: Vec<ConverseEntry>,
    pub passed: bool,
}

/// Builds `g = π∘φ` for one symmetry part, `π` reducing along `Z^l(L)`.
pub fn converse_for_part(
    l: &LeibnizAlgebra,
    part: &BilinearTensor,
    symmetry: Symmetry,
    basis_index: usize,
) -> Result<ConverseEntry> {
    let n = l.dim();
    let zl = l.left_center();
    let fact = factor_left_modulo(l, part, &Subspace::zero(n))?;
    debug_assert_eq!(fact.side, Side::Left);
    let Some(phi) = fact.map else {
        return Ok(ConverseEntry {
            basis_index,
            symmetry,
            part: part.clone(),
            g: None,
            in_map_space: false,
            reproduces: false,
        });
    };
    let images = (0..n).map(|i| zl.reduce_unchecked(&phi.image(i))).collect();
    let g = LinearMapMatrix::from_images(n, images)?;
    let space = match symmetry {
        Symmetry::Symmetric => skew_commuting_map_space(l),
        Symmetry::Skew => commuting_map_space(l),
    };
    let in_map_space = space.contains(&g.to_flat())?;
    let reproduces = bider_from_map(l, &g)? == *part;
    Ok(ConverseEntry {
        basis_index,
        symmetry,
        part: part.clone(),
        g: Some(g),
        in_map_space,
        reproduces,
    })
}

/// For every basis biderivation, realizes its nonzero symmetric and skew
/// halves as `[g(x),y]` with `g` skew-commuting, resp. commuting.
pub fn converse_def2_sym_skew(l: &LeibnizAlgebra) -> Result<ConverseReport> {
    if !is_complete(l, Definition::Def2).verdict {
        return Err(Error::NotComplete(Definition::Def2));
    }
    let n = l.dim();
    let half = Rational::new(1, 2);
    let mut entries = Vec::new();
    for (idx, b) in basis_tensors(&biderivation_space(l), n).into_iter().enumerate() {
        for (symmetry, part) in [
            (Symmetry::Symmetric, b.symmetric_part().scale(&half)),
            (Symmetry::Skew, b.skew_part().scale(&half)),
        ] {
            if part.is_zero() {
                continue;
            }
            entries.push(converse_for_part(l, &part, symmetry, idx)?);
        }
    }
    Ok(ConverseReport {
        passed: entries.iter().all(|e| e.in_map_space && e.reproduces),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureTensor;
    use crate::catalog;

    #[test]
    fn homogeneous_solutions_are_maps_into_left_center() {
        for l in [catalog::sl2(), catalog::heisenberg(), catalog::example_sec4_two()] {
            assert_eq!(left_factor_kernel(&l), maps_into(l.dim(), &l.left_center()));
        }
    }

    #[test]
    fn propositions_hold_on_controls() {
        for l in [
            catalog::abelian(3),
            catalog::sl2(),
            catalog::heisenberg(),
            catalog::example_sec4_one(),
        ] {
            let r = verify_prop_commuting(&l);
            assert!(r.passed, "{:?}", r.violations);
        }
    }

    #[test]
    fn sigma_theta_on_sl2_bracket() {
        let sl2 = catalog::sl2();
        let r = verify_sigma_theta(&sl2, &sl2.tensor().as_bilinear(), Definition::Def2).unwrap();
        assert!(r.holds);
        assert!(r.skew.combined.as_ref().unwrap().is_zero());
        let zero = verify_sigma_theta(&sl2, &BilinearTensor::zeros(3), Definition::Def1).unwrap();
        assert!(zero.holds);
        assert_eq!(zero.symmetric.phi, Some(LinearMapMatrix::zero(3)));
    }

    #[test]
    fn sigma_theta_preconditions() {
        let sl2 = catalog::sl2();
        let bad = BilinearTensor::from_values(3, [(0, 0, vec![(0, Rational::one())])]);
        assert_eq!(
            verify_sigma_theta(&sl2, &bad, Definition::Def2).unwrap_err(),
            Error::NotBiderivation
        );
        let h = catalog::heisenberg();
        assert_eq!(
            verify_sigma_theta(&h, &BilinearTensor::zeros(3), Definition::Def1).unwrap_err(),
            Error::NotComplete(Definition::Def1)
        );
    }

    #[test]
    fn sigma_theta_on_sec4_examples() {
        for l in [catalog::example_sec4_one(), catalog::example_sec4_two()] {
            for b in basis_tensors(&biderivation_space(&l), l.dim()) {
                assert!(verify_sigma_theta(&l, &b, Definition::Def1).unwrap().holds);
            }
        }
    }

    #[test]
    fn converse_on_sl2() {
        let sl2 = catalog::sl2();
        let r = converse_def2_sym_skew(&sl2).unwrap();
        assert!(r.passed);
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].symmetry, Symmetry::Skew);
        let g = r.entries[0].g.as_ref().unwrap();
        // the space generator is a rescaled bracket, so g is a multiple of the identity
        assert!(g.sub(&LinearMapMatrix::identity(3).scale(g.entry(0, 0))).unwrap().is_zero());

        let zero = converse_for_part(&sl2, &BilinearTensor::zeros(3), Symmetry::Symmetric, 0).unwrap();
        assert_eq!(zero.g, Some(LinearMapMatrix::zero(3)));
        assert!(zero.in_map_space && zero.reproduces);
    }

    #[test]
    fn converse_rejects_incomplete_algebras() {
        let a = LeibnizAlgebra::new(StructureTensor::zeros(2)).unwrap();
        assert_eq!(
            converse_def2_sym_skew(&a).unwrap_err(),
            Error::NotComplete(Definition::Def2)
        );
    }
}
