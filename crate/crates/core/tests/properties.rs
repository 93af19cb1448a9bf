//! Randomized invariants of the linear algebra layer and of the algebra
//! computations on seeded random hemisemidirect products.

use leibniz::algebra::check_left_leibniz;
use leibniz::biderivations::{
    biderivation_space, biderivation_space_stacked, left_biderivation_space, loday_biderivation_space,
    right_biderivation_space, verify_prop_commuting,
};
use leibniz::catalog::{random_hemisemidirect, LieChoice};
use leibniz::derivations::{derivation_space, inner_derivation_space};
use leibniz::format::{emit_algebra, parse_algebra};
use leibniz::{LeibnizAlgebra, Matrix, Rational, Subspace};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

/// Small matrices with plenty of zeros so that rank deficiency is common.
fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![2 => Just(Rational::zero()), 3 => rational()], r * c).prop_map(
            move |v| Matrix::from_rows(c, v.chunks(c).map(<[Rational]>::to_vec).collect()).expect("shape"),
        )
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(prop_oneof![Just(Rational::zero()), rational()], n), 0..=max)
}

fn random_algebra() -> impl Strategy<Value = LeibnizAlgebra> {
    (0u64..1000, 0..LieChoice::ALL.len(), 1usize..=3).prop_map(|(seed, lie, m)| {
        random_hemisemidirect(seed, LieChoice::ALL[lie], m).expect("generator succeeds")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(m in matrix(5)) {
        let kernel = m.nullspace();
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        for v in kernel.vectors() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn rref_keeps_the_row_space(m in matrix(5)) {
        let rows = |a: &Matrix| Subspace::span(a.cols(), a.row_vectors().map(<[Rational]>::to_vec).collect()).unwrap();
        let r = m.rref();
        prop_assert_eq!(rows(&m), rows(&r));
        prop_assert_eq!(r.rref(), r);
    }

    #[test]
    fn sum_and_intersection_dimensions(a in vectors(4, 3), b in vectors(4, 3)) {
        let a = Subspace::span(4, a).unwrap();
        let b = Subspace::span(4, b).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(meet.is_subspace_of(&a).unwrap() && meet.is_subspace_of(&b).unwrap());
        prop_assert!(a.is_subspace_of(&sum).unwrap() && b.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn basis_is_canonical(gens in vectors(4, 4), coeffs in prop::collection::vec(rational(), 4)) {
        let s = Subspace::span(4, gens.clone()).unwrap();
        // appending a combination of the generators and reversing them does not change the basis
        let mut more: Vec<Vec<Rational>> = gens.iter().rev().cloned().collect();
        let mut comb = vec![Rational::zero(); 4];
        for (g, c) in gens.iter().zip(&coeffs) {
            for (x, y) in comb.iter_mut().zip(g) {
                *x = x.clone() + c.clone() * y.clone();
            }
        }
        more.push(comb);
        prop_assert_eq!(Subspace::span(4, more).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_algebras_satisfy_the_identity(l in random_algebra()) {
        prop_assert!(check_left_leibniz(l.tensor()).is_empty());
        let text = emit_algebra(l.tensor());
        prop_assert_eq!(parse_algebra(&text).unwrap(), l);
    }

    #[test]
    fn kernel_and_centers(l in random_algebra()) {
        let leib = l.leibniz_kernel();
        let zl = l.left_center();
        prop_assert!(leib.is_subspace_of(&zl).unwrap());
        prop_assert!(l.center().is_subspace_of(&zl).unwrap());
        prop_assert!(l.is_ideal(&leib).unwrap());
        prop_assert!(l.is_ideal(&zl).unwrap());
        let q = l.quotient(&leib).unwrap();
        prop_assert!(LeibnizAlgebra::new(q.tensor).unwrap().is_lie());
    }

    #[test]
    fn inner_derivations_are_derivations(l in random_algebra()) {
        let inner = inner_derivation_space(&l);
        prop_assert!(inner.is_subspace_of(&derivation_space(&l)).unwrap());
        prop_assert_eq!(inner.dim() + l.left_center().dim(), l.dim());
    }

    #[test]
    fn biderivation_spaces_are_consistent(l in random_algebra()) {
        let left = left_biderivation_space(&l);
        let right = right_biderivation_space(&l);
        let full = biderivation_space(&l);
        prop_assert_eq!(&full, &biderivation_space_stacked(&l));
        prop_assert!(full.is_subspace_of(&left).unwrap() && full.is_subspace_of(&right).unwrap());
        prop_assert!(loday_biderivation_space(&l).is_subspace_of(&left).unwrap());
        prop_assert!(verify_prop_commuting(&l).passed);
    }
}
