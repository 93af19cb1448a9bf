//! Biderivations and related bilinear/linear map spaces.
//!
//! Bilinear maps are vectorized in the `(k, i, j)` layout of
//! [`BilinearTensor`], linear maps row-major as in [`LinearMapMatrix`].
//!
//! * left biderivation: `B(x,[y,z]) = [B(x,y),z] + [y,B(x,z)]`
//! * right biderivation: `B([x,y],z) = [x,B(y,z)] + [B(x,z),y]`
//! * biderivation: both of the above
//! * Loday-style: `B([x,y],z) = [x,B(y,z)] - [y,B(x,z)]` together with the
//!   left identity

mod factor;
mod maps;

pub use factor::{
    factor_left_modulo, factor_right_modulo, Certificate, EliminationStep, EquationRow,
    FactorizationResult, Side,
};
pub use maps::{
    converse_def2_sym_skew, converse_for_part, left_factor_kernel, maps_into, verify_prop_commuting, verify_sigma_theta,
    ConverseEntry, ConverseReport, PartCheck, PropositionReport, SigmaThetaReport, Symmetry,
};

use crate::algebra::{flat, BilinearTensor, LeibnizAlgebra, LinearMapMatrix};
use crate::error::{check_dim, Result};
use crate::linalg::echelon::{normalize_row, SparseRow};
use crate::linalg::{Rational, Subspace};

fn left_equations(l: &LeibnizAlgebra) -> impl Iterator<Item = SparseRow> + '_ {
    let n = l.dim();
    let t = l.tensor();
    triples(n).flat_map(move |(x, y, z)| {
        (0..n).map(move |k| {
            let mut terms = Vec::with_capacity(3 * n);
            for m in 0..n {
                terms.push((flat(n, k, x, m), t.coeff(m, y, z).clone()));
                terms.push((flat(n, m, x, y), -t.coeff(k, m, z)));
                terms.push((flat(n, m, x, z), -t.coeff(k, y, m)));
            }
            normalize_row(terms)
        })
    })
}

/// First-slot identity: the right biderivation condition
/// `B([x,y],z) - [x,B(y,z)] - [B(x,z),y]`, or with `loday` set
/// `B([x,y],z) - [x,B(y,z)] + [y,B(x,z)]`.
fn first_slot_equations(l: &LeibnizAlgebra, loday: bool) -> impl Iterator<Item = SparseRow> + '_ {
    let n = l.dim();
    let t = l.tensor();
    triples(n).flat_map(move |(x, y, z)| {
        (0..n).map(move |k| {
            let mut terms = Vec::with_capacity(3 * n);
            for m in 0..n {
                terms.push((flat(n, k, m, z), t.coeff(m, x, y).clone()));
                terms.push((flat(n, m, y, z), -t.coeff(k, x, m)));
                if loday {
                    terms.push((flat(n, m, x, z), t.coeff(k, y, m).clone()));
                } else {
                    terms.push((flat(n, m, x, z), -t.coeff(k, m, y)));
                }
            }
            normalize_row(terms)
        })
    })
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

pub fn left_biderivation_space(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    Subspace::from_sparse_kernel(n * n * n, left_equations(l))
}

pub fn right_biderivation_space(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    Subspace::from_sparse_kernel(n * n * n, first_slot_equations(l, false))
}

/// Intersection of the left and right biderivation spaces.
pub fn biderivation_space(l: &LeibnizAlgebra) -> Subspace {
    left_biderivation_space(l)
        .intersection(&right_biderivation_space(l))
        .expect("same ambient dimension")
}

/// Direct kernel of the stacked left and right systems; agrees with
/// [`biderivation_space`] but shares no intermediate results with it.
pub fn biderivation_space_stacked(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    Subspace::from_sparse_kernel(
        n * n * n,
        left_equations(l).chain(first_slot_equations(l, false)),
    )
}

pub fn loday_biderivation_space(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    Subspace::from_sparse_kernel(
        n * n * n,
        first_slot_equations(l, true).chain(left_equations(l)),
    )
}

pub fn basis_tensors(space: &Subspace, n: usize) -> Vec<BilinearTensor> {
    space
        .vectors()
        .map(|v| BilinearTensor::from_flat(n, v.to_vec()).expect("vectorized tensor"))
        .collect()
}

fn vec_eq(a: &[Rational], b: &[Rational]) -> bool {
    a == b
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Evaluates `B(x,[y,z]) = [B(x,y),z] + [y,B(x,z)]` on basis triples.
pub fn is_left_biderivation(l: &LeibnizAlgebra, b: &BilinearTensor) -> Result<bool> {
    check_dim("biderivation test", l.dim(), b.dim())?;
    let t = l.tensor();
    let n = l.dim();
    Ok(triples(n).all(|(x, y, z)| {
        let lhs = b.apply(&l.basis_vector(x), &t.basis_bracket(y, z)).expect("dims");
        let r1 = t.bracket_unchecked(&b.value(x, y), &l.basis_vector(z));
        let r2 = t.bracket_unchecked(&l.basis_vector(y), &b.value(x, z));
        vec_eq(&lhs, &add(&r1, &r2))
    }))
}

/// Evaluates `B([x,y],z) = [x,B(y,z)] + [B(x,z),y]` on basis triples.
pub fn is_right_biderivation(l: &LeibnizAlgebra, b: &BilinearTensor) -> Result<bool> {
    check_dim("biderivation test", l.dim(), b.dim())?;
    let t = l.tensor();
    let n = l.dim();
    Ok(triples(n).all(|(x, y, z)| {
        let lhs = b.apply(&t.basis_bracket(x, y), &l.basis_vector(z)).expect("dims");
        let r1 = t.bracket_unchecked(&l.basis_vector(x), &b.value(y, z));
        let r2 = t.bracket_unchecked(&b.value(x, z), &l.basis_vector(y));
        vec_eq(&lhs, &add(&r1, &r2))
    }))
}

pub fn is_biderivation(l: &LeibnizAlgebra, b: &BilinearTensor) -> Result<bool> {
    Ok(is_left_biderivation(l, b)? && is_right_biderivation(l, b)?)
}

pub fn is_loday_biderivation(l: &LeibnizAlgebra, b: &BilinearTensor) -> Result<bool> {
    if !is_left_biderivation(l, b)? {
        return Ok(false);
    }
    let t = l.tensor();
    let n = l.dim();
    Ok(triples(n).all(|(x, y, z)| {
        let lhs = b.apply(&t.basis_bracket(x, y), &l.basis_vector(z)).expect("dims");
        let r1 = t.bracket_unchecked(&l.basis_vector(x), &b.value(y, z));
        let r2 = t.bracket_unchecked(&l.basis_vector(y), &b.value(x, z));
        vec_eq(&lhs, &sub(&r1, &r2))
    }))
}

/// `(x, y) -> [g(x), y]`.
pub fn bider_from_map(l: &LeibnizAlgebra, g: &LinearMapMatrix) -> Result<BilinearTensor> {
    check_dim("map to bilinear", l.dim(), g.dim())?;
    let n = l.dim();
    let t = l.tensor();
    let mut out = BilinearTensor::zeros(n);
    for i in 0..n {
        let gi = g.image(i);
        for j in 0..n {
            let v = t.bracket_unchecked(&gi, &l.basis_vector(j));
            for (k, c) in v.into_iter().enumerate() {
                out.set(k, i, j, c);
            }
        }
    }
    Ok(out)
}

/// Unknown `g[a][c]` at `a * n + c`; coordinate `k` of `[g(e_i), e_j]` is
/// `sum_a g[a][i] c[k][a][j]`.
fn g_left_terms(l: &LeibnizAlgebra, i: usize, j: usize, k: usize, sign: i64) -> Vec<(usize, Rational)> {
    let n = l.dim();
    let s = Rational::from_integer(sign);
    (0..n).map(|a| (a * n + i, l.tensor().coeff(k, a, j) * &s)).collect()
}

fn g_right_terms(l: &LeibnizAlgebra, i: usize, j: usize, k: usize, sign: i64) -> Vec<(usize, Rational)> {
    // coordinate k of [e_i, g(e_j)]
    let n = l.dim();
    let s = Rational::from_integer(sign);
    (0..n).map(|a| (a * n + j, l.tensor().coeff(k, i, a) * &s)).collect()
}

/// Linear maps with `[g(x),x] = [x,g(x)] = 0`, via the polarized conditions
/// `[g(e_i),e_j] + [g(e_j),e_i] = 0` and `[e_i,g(e_j)] + [e_j,g(e_i)] = 0`.
pub fn commuting_map_space(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let mut a = g_left_terms(l, i, j, k, 1);
                a.extend(g_left_terms(l, j, i, k, 1));
                eqs.push(normalize_row(a));
                let mut b = g_right_terms(l, i, j, k, 1);
                b.extend(g_right_terms(l, j, i, k, 1));
                eqs.push(normalize_row(b));
            }
        }
    }
    Subspace::from_sparse_kernel(n * n, eqs)
}

/// Linear maps with `[g(x), y] = [g(y), x]`.
pub fn skew_commuting_map_space(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                let mut a = g_left_terms(l, i, j, k, 1);
                a.extend(g_left_terms(l, j, i, k, -1));
                eqs.push(normalize_row(a));
            }
        }
    }
    Subspace::from_sparse_kernel(n * n, eqs)
}

pub fn is_commuting(l: &LeibnizAlgebra, g: &LinearMapMatrix) -> Result<bool> {
    commuting_map_space(l).contains(&g.to_flat())
}

pub fn is_skew_commuting(l: &LeibnizAlgebra, g: &LinearMapMatrix) -> Result<bool> {
    skew_commuting_map_space(l).contains(&g.to_flat())
}

/// Biderivations that are symmetric (resp. skew-symmetric).
pub fn symmetric_biderivations(l: &LeibnizAlgebra, symmetric: bool) -> Subspace {
    let n = l.dim();
    let bider = biderivation_space(l);
    let sign = if symmetric { -1 } else { 1 };
    // B(i,j) - B(j,i) = 0, resp. B(i,j) + B(j,i) = 0
    let mut eqs = Vec::new();
    for k in 0..n {
        for i in 0..n {
            for j in i..n {
                let mut terms = vec![(flat(n, k, i, j), Rational::one())];
                terms.push((flat(n, k, j, i), Rational::from_integer(sign)));
                let row = normalize_row(terms);
                if !row.is_empty() {
                    eqs.push(row);
                }
            }
        }
    }
    Subspace::from_sparse_kernel(n * n * n, eqs)
        .intersection(&bider)
        .expect("same ambient dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureTensor;
    use crate::catalog;
    use crate::linalg::q;

    fn abelian(n: usize) -> LeibnizAlgebra {
        LeibnizAlgebra::new(StructureTensor::zeros(n)).unwrap()
    }

    #[test]
    fn biderivation_membership() {
        let sl2 = catalog::sl2();
        assert!(is_biderivation(&sl2, &sl2.tensor().as_bilinear()).unwrap());

        let l = catalog::example_sec4_one();
        assert!(is_biderivation(&l, &catalog::sec4_one_f()).unwrap());

        // B(e_i, e_j) = e_1 for every pair
        let constant = BilinearTensor::from_values(
            3,
            (0..3).flat_map(|i| (0..3).map(move |j| (i, j, vec![(0, q(1))]))),
        );
        assert!(!is_biderivation(&sl2, &constant).unwrap());
        assert!(is_biderivation(&sl2, &BilinearTensor::zeros(2)).is_err());
    }

    #[test]
    fn abelian_spaces_are_full() {
        let a = abelian(2);
        for s in [
            left_biderivation_space(&a),
            right_biderivation_space(&a),
            biderivation_space(&a),
            loday_biderivation_space(&a),
        ] {
            assert_eq!(s, Subspace::full(8));
        }
        assert_eq!(commuting_map_space(&a), Subspace::full(4));
        assert_eq!(skew_commuting_map_space(&a), Subspace::full(4));
    }

    #[test]
    fn space_dimensions_match_oracle() {
        // oracle: independent sympy rank computation over the same identities
        let cases: Vec<(LeibnizAlgebra, [usize; 6])> = vec![
            (catalog::sl2(), [9, 9, 1, 1, 1, 0]),
            (catalog::heisenberg(), [18, 18, 12, 12, 4, 6]),
            (catalog::example_sec4_one(), [9, 9, 5, 6, 0, 4]),
            (catalog::example_sec4_two(), [24, 24, 12, 12, 0, 9]),
            (catalog::example_solvable(4).unwrap(), [18, 18, 1, 2, 0, 19]),
        ];
        for (l, [left, right, bider, loday, comm, skew]) in cases {
            assert_eq!(left_biderivation_space(&l).dim(), left);
            assert_eq!(right_biderivation_space(&l).dim(), right);
            assert_eq!(biderivation_space(&l).dim(), bider);
            assert_eq!(biderivation_space_stacked(&l), biderivation_space(&l));
            assert_eq!(loday_biderivation_space(&l).dim(), loday);
            assert_eq!(commuting_map_space(&l).dim(), comm);
            assert_eq!(skew_commuting_map_space(&l).dim(), skew);
        }
    }

    #[test]
    fn sl2_biderivations_are_multiples_of_the_bracket() {
        let sl2 = catalog::sl2();
        let space = biderivation_space(&sl2);
        assert_eq!(space.dim(), 1);
        assert!(space.contains(sl2.tensor().coefficients()).unwrap());
        let from_id = bider_from_map(&sl2, &LinearMapMatrix::identity(3)).unwrap();
        assert_eq!(from_id, sl2.tensor().as_bilinear());
        assert!(space.contains(from_id.as_flat()).unwrap());
    }

    #[test]
    fn bracket_of_lie_algebra_is_a_right_biderivation() {
        for l in [catalog::sl2(), catalog::heisenberg()] {
            assert!(right_biderivation_space(&l).contains(l.tensor().coefficients()).unwrap());
            assert_eq!(loday_biderivation_space(&l), biderivation_space(&l));
        }
    }

    #[test]
    fn membership_checks_agree_with_spaces() {
        let l = catalog::example_sec4_one();
        for b in basis_tensors(&loday_biderivation_space(&l), 3) {
            assert!(is_loday_biderivation(&l, &b).unwrap());
        }
        for b in basis_tensors(&left_biderivation_space(&l), 3) {
            assert!(is_left_biderivation(&l, &b).unwrap());
        }
        for b in basis_tensors(&right_biderivation_space(&l), 3) {
            assert!(is_right_biderivation(&l, &b).unwrap());
        }
        assert!(left_biderivation_space(&l).contains(catalog::sec4_one_f().as_flat()).unwrap());
    }

    #[test]
    fn sec4_two_skew_tensor_is_a_biderivation() {
        let l = catalog::example_sec4_two();
        let f = catalog::sec4_two_f();
        assert!(f.is_skew_symmetric());
        assert!(biderivation_space(&l).contains(f.as_flat()).unwrap());
    }

    #[test]
    fn sym_skew_decomposition() {
        let f = catalog::sec4_one_f();
        assert_eq!(f.symmetric_part(), f.scale(&q(2)));
        assert!(f.skew_part().is_zero());
        let sl2 = catalog::sl2();
        assert!(sl2.tensor().as_bilinear().symmetric_part().is_zero());
    }

    #[test]
    fn map_examples() {
        let sl2 = catalog::sl2();
        assert!(bider_from_map(&sl2, &LinearMapMatrix::zero(3)).unwrap().is_zero());
        assert_eq!(commuting_map_space(&sl2), Subspace::span(9, vec![LinearMapMatrix::identity(3).to_flat()]).unwrap());
        assert!(skew_commuting_map_space(&sl2).is_zero());
        // maps into the left center are skew-commuting
        let l = catalog::example_sec4_two();
        for g in maps_into(4, &l.left_center()).vectors() {
            assert!(skew_commuting_map_space(&l).contains(g).unwrap());
        }
    }

    #[test]
    fn symmetric_and_skew_biderivation_subspaces() {
        let l = catalog::example_sec4_two();
        let sym = symmetric_biderivations(&l, true);
        let skew = symmetric_biderivations(&l, false);
        assert_eq!(sym.dim() + skew.dim(), biderivation_space(&l).dim());
        assert!(skew.contains(catalog::sec4_two_f().as_flat()).unwrap());
    }
}
