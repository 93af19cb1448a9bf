//! The reproduction checklist: every published example and the property
//! suite, as individually reported checks.

use serde::Serialize;

use crate::algebra::{unit, LeibnizAlgebra, LinearMapMatrix};
use crate::biderivations::{
    basis_tensors, bider_from_map, biderivation_space, biderivation_space_stacked, converse_def2_sym_skew,
    factor_left_modulo, factor_right_modulo, is_biderivation, left_biderivation_space, left_factor_kernel,
    maps_into, right_biderivation_space, verify_prop_commuting, Side,
};
use crate::catalog::{self, LieChoice};
use crate::derivations::{derivation_space, inner_derivation_space, is_complete_def1, is_complete_def2};
use crate::fixtures::fixtures;
use crate::format;
use crate::linalg::{Rational, Subspace};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub details: Vec<String>,
}

/// Accumulates named sub-checks; the result passes iff all of them do.
struct Checker {
    details: Vec<String>,
    passed: bool,
}

impl Checker {
    fn new() -> Self {
        Checker {
            details: Vec::new(),
            passed: true,
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) -> bool {
        let what = what.into();
        self.details.push(format!("{} {what}", if ok { "ok  " } else { "FAIL" }));
        self.passed &= ok;
        ok
    }

    fn finish(self, id: &str, title: &str) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            title: title.to_string(),
            passed: self.passed,
            details: self.details,
        }
    }
}

/// First three-dimensional counterexample: a symmetric biderivation that is
/// not of the form `[φ(x), y]`.
pub fn sec4_one_counterexample() -> CheckResult {
    let mut c = Checker::new();
    let l = catalog::example_sec4_one();
    let (x, y, v) = (0, 1, 2);
    let f = catalog::sec4_one_f();
    c.check(
        l.leibniz_kernel() == Subspace::span(3, vec![unit(3, v)]).expect("dims"),
        "Leib(L) = span{v}",
    );
    c.check(is_biderivation(&l, &f).unwrap_or(false), "F(v,v) = v is a biderivation");
    let r = factor_left_modulo(&l, &f, &Subspace::zero(3)).expect("dims");
    if c.check(!r.feasible, "no φ with F(a,b) = [φ(a),b]") {
        let cert = r.certificate.as_ref().expect("infeasible results carry a certificate");
        c.details.extend(r.explain(l.tensor()).into_iter().map(|s| format!("     {s}")));
        let one = Rational::one();
        let step = |i: usize| cert.steps.get(i).map(|s| (s.equation.j, s.reduced.clone(), s.reduced_rhs.clone()));
        c.check(cert.block == v, "obstruction lives in φ(v)");
        c.check(
            step(0) == Some((x, vec![(y, one.clone())], Rational::zero())),
            "F(v,x) forces the y-coordinate of φ(v) to vanish",
        );
        c.check(
            step(1) == Some((y, vec![(x, one)], Rational::zero())),
            "then F(v,y) forces the x-coordinate of φ(v) to vanish",
        );
        c.check(
            cert.steps.len() == 2 && (cert.equation.i, cert.equation.j) == (v, v) && !cert.defect.is_zero(),
            "then F(v,v) = v contradicts [φ(v),v] = 0",
        );
    }
    c.finish("1", "three-dimensional counterexample: certificate chain")
}

/// Second counterexample: a skew biderivation with no left factorization,
/// and the derivations supported on the module.
pub fn sec4_two_counterexample() -> CheckResult {
    let mut c = Checker::new();
    let l = catalog::example_sec4_two();
    let f = catalog::sec4_two_f();
    c.check(f.is_skew_symmetric(), "F is skew-symmetric");
    c.check(is_biderivation(&l, &f).unwrap_or(false), "F is a biderivation");
    let r = factor_left_modulo(&l, &f, &Subspace::zero(4)).expect("dims");
    c.check(!r.feasible && r.certificate.is_some(), "no φ with F(a,b) = [φ(a),b]");
    if let Some(cert) = &r.certificate {
        c.details.extend(r.explain(l.tensor()).into_iter().map(|s| format!("     {s}")));
        c.check(!cert.defect.is_zero(), "certificate ends in 0 = nonzero");
    }
    // maps vanishing on x, y with image of v, w inside span{v, w}
    let family: Vec<Vec<Rational>> = [2, 3]
        .iter()
        .flat_map(|&a| [2, 3].map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut g = vec![Rational::zero(); 16];
            g[a * 4 + b] = Rational::one();
            g
        })
        .collect();
    let family = Subspace::span(16, family).expect("dims");
    c.check(
        family.dim() == 4 && family.is_subspace_of(&derivation_space(&l)).unwrap_or(false),
        "every δ with δ(L) = 0 and δ(V) ⊆ V is a derivation",
    );
    c.finish("2", "four-dimensional counterexample")
}

/// The solvable family member with n = 5 under both completeness notions.
pub fn solvable_completeness() -> CheckResult {
    let mut c = Checker::new();
    let l = catalog::example_solvable(5).expect("n >= 4");
    let d1 = is_complete_def1(&l);
    let d2 = is_complete_def2(&l);
    c.check(d1.verdict, "complete in the first sense");
    if let Some(z) = &d1.center_obstruction {
        let names: Vec<String> = z
            .vectors()
            .map(|v| format!("{:?}", v.iter().map(ToString::to_string).collect::<Vec<_>>()))
            .collect();
        c.details.push(format!("     center of L/Leib(L) lifts to {}", names.join(", ")));
    }
    c.check(!d2.verdict, "not complete in the second sense");
    c.check(l.left_center() == l.leibniz_kernel(), "Z^l(L) = Leib(L)");
    c.finish("3", "solvable example (n = 5): completeness verdicts")
}

/// Left and right factorizations modulo the Leibniz kernel.
fn factorization_modulo_kernel(l: &LeibnizAlgebra, c: &mut Checker) {
    let n = l.dim();
    let leib = l.leibniz_kernel();
    let basis = basis_tensors(&biderivation_space(l), n);
    c.details.push(format!("     {} basis biderivations", basis.len()));
    for (idx, b) in basis.iter().enumerate() {
        for side in [Side::Left, Side::Right] {
            let r = match side {
                Side::Left => factor_left_modulo(l, b, &leib),
                Side::Right => factor_right_modulo(l, b, &leib),
            }
            .expect("dims");
            let which = if side == Side::Left { "p left" } else { "q right" };
            c.check(
                r.feasible && r.verify(l, b).unwrap_or(false) && r.residual_biderivation == Some(true),
                format!("biderivation {idx}, {side:?}: feasible, residual in Leib(L), {which} biderivation"),
            );
        }
    }
}

pub fn solvable_factorization() -> CheckResult {
    let mut c = Checker::new();
    let l = catalog::example_solvable(5).expect("n >= 4");
    factorization_modulo_kernel(&l, &mut c);
    c.finish("4", "solvable example (n = 5): factorization modulo Leib(L)")
}

pub fn sl2_complete_lie() -> CheckResult {
    let mut c = Checker::new();
    let l = catalog::sl2();
    c.check(is_complete_def1(&l).verdict && is_complete_def2(&l).verdict, "complete in both senses");
    c.check(derivation_space(&l).dim() == 3, "dim Der = 3");
    c.check(inner_derivation_space(&l).dim() == 3, "dim Inner = 3");
    let bracket = l.tensor().as_bilinear();
    let space = biderivation_space(&l);
    c.check(
        space == Subspace::span(27, vec![bracket.as_flat().to_vec()]).expect("dims"),
        "biderivations are the multiples of the bracket",
    );
    c.check(space == biderivation_space_stacked(&l), "stacked system agrees");
    for b in basis_tensors(&space, 3) {
        let left = factor_left_modulo(&l, &b, &Subspace::zero(3)).expect("dims");
        let right = factor_right_modulo(&l, &b, &Subspace::zero(3)).expect("dims");
        c.check(
            left.feasible && left.verify(&l, &b).unwrap_or(false),
            "B(x,y) = [φ(x),y]",
        );
        c.check(
            right.feasible && right.verify(&l, &b).unwrap_or(false),
            "B(x,y) = [ψ(y),x] = [x,-ψ(y)]",
        );
    }
    c.finish("5", "sl2: complete Lie algebra")
}

/// Catalog algebras plus the random algebras used by the property suite.
pub fn property_algebras() -> Vec<(String, LeibnizAlgebra)> {
    let mut out: Vec<(String, LeibnizAlgebra)> = catalog::NAMES
        .iter()
        .map(|n| (n.to_string(), catalog::by_name(n).expect("catalog")))
        .collect();
    for lie in LieChoice::ALL {
        for m in 1..=4 {
            for seed in 0..2u64 {
                let seed = seed * 100 + m as u64;
                let l = catalog::random_hemisemidirect(seed, lie, m).expect("generator");
                out.push((format!("random({lie}, {m}, seed {seed})"), l));
            }
        }
    }
    out
}

fn properties_of(name: &str, l: &LeibnizAlgebra, c: &mut Checker) {
    let n = l.dim();
    let leib = l.leibniz_kernel();
    let zl = l.left_center();

    let left = left_biderivation_space(l);
    let right = right_biderivation_space(l);
    let bider = left.intersection(&right).expect("dims");
    c.check(
        bider == biderivation_space(l) && bider == biderivation_space_stacked(l),
        format!("{name}: left ∩ right = biderivations = stacked kernel"),
    );

    let half = Rational::new(1, 2);
    let basis = basis_tensors(&bider, n);
    c.check(
        basis.iter().all(|b| {
            let (p, m) = (b.symmetric_part(), b.skew_part());
            bider.contains(p.as_flat()).unwrap_or(false)
                && bider.contains(m.as_flat()).unwrap_or(false)
                && p.scale(&half).add(&m.scale(&half)).map(|s| s == *b).unwrap_or(false)
        }),
        format!("{name}: closed under symmetric/skew parts, B = B+/2 + B-/2"),
    );

    let props = verify_prop_commuting(l);
    c.check(props.passed, format!("{name}: commuting maps give skew, skew-commuting give symmetric biderivations"));

    let t = l.tensor();
    c.check(l.is_ideal(&leib).unwrap_or(false), format!("{name}: Leib(L) is an ideal"));
    c.check(
        leib.vectors().all(|u| (0..n).all(|j| t.bracket_unchecked(u, &unit(n, j)).iter().all(Rational::is_zero))),
        format!("{name}: [Leib(L), L] = 0"),
    );
    c.check(leib.is_subspace_of(&zl).unwrap_or(false), format!("{name}: Leib(L) ⊆ Z^l(L)"));
    c.check(
        l.quotient(&leib)
            .map(|q| LeibnizAlgebra::new(q.tensor).map(|a| a.is_lie()).unwrap_or(false))
            .unwrap_or(false),
        format!("{name}: L/Leib(L) is Lie"),
    );
    let der = derivation_space(l);
    c.check(
        der.vectors().all(|d| {
            let d = LinearMapMatrix::from_flat(n, d).expect("dims");
            leib.vectors().all(|u| leib.contains(&d.apply(u).expect("dims")).unwrap_or(false))
        }),
        format!("{name}: D(Leib(L)) ⊆ Leib(L)"),
    );
    c.check(
        inner_derivation_space(l).is_subspace_of(&der).unwrap_or(false),
        format!("{name}: Inner ⊆ Der"),
    );

    // any two left factorizations with S = 0 differ by a map into Z^l(L)
    let into_zl = maps_into(n, &zl);
    let mut ok = left_factor_kernel(l) == into_zl;
    for b in &basis {
        let r = factor_left_modulo(l, b, &Subspace::zero(n)).expect("dims");
        let Some(phi) = r.map else { continue };
        for h in into_zl.vectors() {
            let shifted = phi.add(&LinearMapMatrix::from_flat(n, h).expect("dims")).expect("dims");
            ok &= bider_from_map(l, &shifted).map(|s| s == *b).unwrap_or(false);
        }
    }
    c.check(ok, format!("{name}: left solutions are unique exactly up to maps into Z^l(L)"));
}

pub fn property_suite() -> CheckResult {
    let mut c = Checker::new();
    let algebras = property_algebras();
    let random = algebras.iter().filter(|(n, _)| n.starts_with("random")).count();
    c.details.push(format!("     {} algebras, {random} random", algebras.len()));
    for (name, l) in &algebras {
        properties_of(name, l, &mut c);
    }
    c.finish("6", "property suite over catalog and random algebras")
}

pub fn converse_suite() -> CheckResult {
    let mut c = Checker::new();
    for name in catalog::NAMES {
        let l = catalog::by_name(name).expect("catalog");
        if !is_complete_def2(&l).verdict {
            continue;
        }
        match converse_def2_sym_skew(&l) {
            Ok(r) => {
                c.check(
                    r.passed,
                    format!("{name}: {} parts realized as [g(x),y] with g in the right map space", r.entries.len()),
                );
            }
            Err(e) => {
                c.check(false, format!("{name}: {e}"));
            }
        }
    }
    c.finish("7", "converse construction on algebras complete in the second sense")
}

pub fn round_trip() -> CheckResult {
    let mut c = Checker::new();
    for f in fixtures() {
        let Ok(l) = f.build() else {
            c.check(false, format!("{}: catalog lookup", f.name));
            continue;
        };
        let emitted = format::parse_algebra(&format::emit_algebra(l.tensor()));
        c.check(emitted.as_ref() == Ok(&l), format!("{}: emit then parse", f.name));
        c.check(f.parsed().as_ref() == Ok(&l), format!("{}: stored fixture file", f.name));
    }
    c.finish("8a", "algebra file round trip")
}

pub fn fixture_facts() -> Vec<CheckResult> {
    fixtures()
        .into_iter()
        .map(|f| {
            let mut c = Checker::new();
            match f.check() {
                Ok(checks) => {
                    for k in checks {
                        c.check(
                            k.ok,
                            format!(
                                "{} = {} ({:?}), computed {}",
                                k.key,
                                k.expected,
                                k.source,
                                k.actual.as_deref().unwrap_or("?")
                            ),
                        );
                    }
                }
                Err(e) => {
                    c.check(false, e.to_string());
                }
            }
            c.finish(&format!("fixture:{}", f.name), &format!("pinned facts for {}", f.name))
        })
        .collect()
}

/// Every check, in order: the numbered reproduction items, then the pinned
/// facts of each fixture.
pub fn verify_all() -> Vec<CheckResult> {
    let mut out = vec![
        sec4_one_counterexample(),
        sec4_two_counterexample(),
        solvable_completeness(),
        solvable_factorization(),
        sl2_complete_lie(),
        property_suite(),
        converse_suite(),
        round_trip(),
    ];
    out.extend(fixture_facts());
    out
}
