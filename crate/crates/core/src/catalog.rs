//! Named algebras and a generator of random valid Leibniz algebras.
//!
//! Basis orders:
//! * `sl2`: `(h, e, f)`
//! * `heisenberg`: `(e1, e2, e3)` with `[e1,e2] = e3`
//! * `r2`: `(x, y)` with `[x,y] = y`
//! * `example_sec4_one`: `(x, y, v)`, `example_sec4_two`: `(x, y, v, w)`
//! * `example_solvable(n)`: `(e1, ..., en, x, y)`

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{hemisemidirect, BilinearTensor, LeibnizAlgebra, ModuleAction, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Rational};

fn labelled(t: StructureTensor, labels: &[&str]) -> LeibnizAlgebra {
    let t = t.with_labels(labels.iter().map(|s| s.to_string()).collect());
    LeibnizAlgebra::new(t).expect("catalog table satisfies the left Leibniz identity")
}

/// Antisymmetric table from the brackets `[e_i, e_j]` with `i < j`.
fn lie_table(n: usize, brackets: &[(usize, usize, &[(usize, i64)])]) -> StructureTensor {
    let mut t = StructureTensor::zeros(n);
    for &(i, j, terms) in brackets {
        for &(k, c) in terms {
            t.set(k, i, j, q(c));
            t.set(k, j, i, q(-c));
        }
    }
    t
}

pub fn abelian(n: usize) -> LeibnizAlgebra {
    LeibnizAlgebra::new(StructureTensor::zeros(n)).expect("zero table")
}

pub fn sl2() -> LeibnizAlgebra {
    let t = lie_table(3, &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])]);
    labelled(t, &["h", "e", "f"])
}

pub fn heisenberg() -> LeibnizAlgebra {
    labelled(lie_table(3, &[(0, 1, &[(2, 1)])]), &["e1", "e2", "e3"])
}

/// The non-abelian two-dimensional Lie algebra, `[x,y] = y`.
pub fn r2() -> LeibnizAlgebra {
    labelled(lie_table(2, &[(0, 1, &[(1, 1)])]), &["x", "y"])
}

/// `r2` acting on a line by `x.v = v`, `y.v = 0`.
pub fn example_sec4_one() -> LeibnizAlgebra {
    let r2 = r2();
    let action = vec![Matrix::from_i64(&[&[1]]), Matrix::from_i64(&[&[0]])];
    let module = ModuleAction::new(r2.tensor(), 1, action).expect("valid module");
    let t = hemisemidirect(r2.tensor(), &module).expect("r2 is Lie");
    labelled(t, &["x", "y", "v"])
}

/// `r2` acting on a plane with `x` as the identity and `y` as zero.
pub fn example_sec4_two() -> LeibnizAlgebra {
    let r2 = r2();
    let action = vec![Matrix::identity(2), Matrix::zeros(2, 2)];
    let module = ModuleAction::new(r2.tensor(), 2, action).expect("valid module");
    let t = hemisemidirect(r2.tensor(), &module).expect("r2 is Lie");
    labelled(t, &["x", "y", "v", "w"])
}

/// Symmetric bilinear map on `example_sec4_one` with `F(v,v) = v`.
pub fn sec4_one_f() -> BilinearTensor {
    BilinearTensor::from_values(3, [(2, 2, vec![(2, q(1))])])
}

/// Skew bilinear map on `example_sec4_two` with `F(v,w) = v = -F(w,v)`.
pub fn sec4_two_f() -> BilinearTensor {
    BilinearTensor::from_values(4, [(2, 3, vec![(2, q(1))]), (3, 2, vec![(2, q(-1))])])
}

/// The published table as written, a right Leibniz algebra on
/// `(e1, ..., en, x, y)`:
///
/// `[e1,e1] = e3`, `[e_i,e1] = e_{i+1}` for `3 <= i <= n-1`,
/// `[e1,x] = e1`, `[x,e1] = -e1`, `[e2,y] = e2`,
/// `[e_i,x] = (i-1) e_i` for `3 <= i <= n`. Unlisted brackets vanish.
pub fn example_solvable_right_table(n: usize) -> Result<StructureTensor> {
    if n < 4 {
        return Err(Error::Catalog(format!("example_solvable needs n >= 4, got {n}")));
    }
    let (x, y) = (n, n + 1);
    let e = |i: usize| i - 1;
    let mut t = StructureTensor::zeros(n + 2);
    t.set(e(3), e(1), e(1), q(1));
    for i in 3..n {
        t.set(e(i + 1), e(i), e(1), q(1));
    }
    t.set(e(1), e(1), x, q(1));
    t.set(e(1), x, e(1), q(-1));
    t.set(e(2), e(2), y, q(1));
    for i in 3..=n {
        t.set(e(i), e(i), x, q(i as i64 - 1));
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    labels.push("x".into());
    labels.push("y".into());
    Ok(t.with_labels(labels))
}

/// The solvable family normalized to a left algebra through the opposite
/// product. Dimension `n + 2`.
pub fn example_solvable(n: usize) -> Result<LeibnizAlgebra> {
    LeibnizAlgebra::from_right(&example_solvable_right_table(n)?)
}

/// Index of `y` in the basis of `example_solvable(n)`.
pub fn example_solvable_y(n: usize) -> usize {
    n + 1
}

/// Lie algebras available to [`random_hemisemidirect`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LieChoice {
    /// two-dimensional abelian
    Abelian,
    R2,
    Sl2,
    Heisenberg,
}

impl LieChoice {
    pub const ALL: [LieChoice; 4] = [LieChoice::Abelian, LieChoice::R2, LieChoice::Sl2, LieChoice::Heisenberg];

    pub fn algebra(self) -> LeibnizAlgebra {
        match self {
            LieChoice::Abelian => labelled(StructureTensor::zeros(2), &["a1", "a2"]),
            LieChoice::R2 => r2(),
            LieChoice::Sl2 => sl2(),
            LieChoice::Heisenberg => heisenberg(),
        }
    }
}

impl fmt::Display for LieChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieChoice::Abelian => "abelian",
            LieChoice::R2 => "r2",
            LieChoice::Sl2 => "sl2",
            LieChoice::Heisenberg => "heisenberg",
        })
    }
}

impl FromStr for LieChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LieChoice::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::Catalog(format!("unknown Lie algebra {s:?}")))
    }
}

const MAX_MODULE_DIM: usize = 4;
const REJECTION_BUDGET: usize = 64;

fn small_int(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    q(rng.gen_range(-bound..=bound))
}

fn random_matrix(rng: &mut ChaCha8Rng, m: usize, bound: i64) -> Matrix {
    let mut a = Matrix::zeros(m, m);
    for r in 0..m {
        for c in 0..m {
            a[(r, c)] = small_int(rng, bound);
        }
    }
    a
}

/// `c0 I + c1 A + c2 A^2` with small random coefficients; commutes with `A`.
fn random_polynomial_in(rng: &mut ChaCha8Rng, a: &Matrix) -> Matrix {
    let m = a.rows();
    let a2 = a.mul(a).expect("square");
    Matrix::identity(m)
        .scale(&small_int(rng, 2))
        .add(&a.scale(&small_int(rng, 2)))
        .and_then(|s| s.add(&a2.scale(&small_int(rng, 1))))
        .expect("square")
}

/// Irreducible `sl2` representation of dimension `d + 1` on `v_0..v_d`:
/// `h v_i = (d-2i) v_i`, `e v_i = i(d-i+1) v_{i-1}`, `f v_i = v_{i+1}`.
fn sl2_irrep(d: usize) -> [Matrix; 3] {
    let m = d + 1;
    let (mut h, mut e, mut f) = (Matrix::zeros(m, m), Matrix::zeros(m, m), Matrix::zeros(m, m));
    for i in 0..m {
        h[(i, i)] = q(d as i64 - 2 * i as i64);
        if i > 0 {
            e[(i - 1, i)] = q((i * (d - i + 1)) as i64);
        }
        if i < d {
            f[(i + 1, i)] = q(1);
        }
    }
    [h, e, f]
}

fn block_diag(blocks: &[Matrix]) -> Matrix {
    let m: usize = blocks.iter().map(Matrix::rows).sum();
    let mut out = Matrix::zeros(m, m);
    let mut off = 0;
    for b in blocks {
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                out[(off + r, off + c)] = b[(r, c)].clone();
            }
        }
        off += b.rows();
    }
    out
}

fn structured_action(rng: &mut ChaCha8Rng, lie: LieChoice, m: usize) -> Vec<Matrix> {
    match lie {
        LieChoice::Abelian | LieChoice::Heisenberg => {
            let a = random_matrix(rng, m, 2);
            let b = random_polynomial_in(rng, &a);
            let mut out = vec![a, b];
            if lie == LieChoice::Heisenberg {
                // [e1,e2] = e3 must act as [A,B] = 0
                out.push(Matrix::zeros(m, m));
            }
            out
        }
        LieChoice::R2 => {
            // [D, N] = N for diagonal D when N is supported on d_a - d_b = 1
            let d: Vec<i64> = (0..m).map(|_| rng.gen_range(-1..=2)).collect();
            let mut dx = Matrix::zeros(m, m);
            let mut ny = Matrix::zeros(m, m);
            for a in 0..m {
                dx[(a, a)] = q(d[a]);
                for b in 0..m {
                    if d[a] - d[b] == 1 {
                        ny[(a, b)] = small_int(rng, 3);
                    }
                }
            }
            vec![dx, ny]
        }
        LieChoice::Sl2 => {
            let mut left = m;
            let mut parts = Vec::new();
            while left > 0 {
                let d = rng.gen_range(1..=left);
                parts.push(d);
                left -= d;
            }
            let irreps: Vec<[Matrix; 3]> = parts.iter().map(|&d| sl2_irrep(d - 1)).collect();
            (0..3)
                .map(|g| block_diag(&irreps.iter().map(|r| r[g].clone()).collect::<Vec<_>>()))
                .collect()
        }
    }
}

/// A random matrix with determinant one, with its inverse, built from
/// elementary row operations.
fn random_unimodular(rng: &mut ChaCha8Rng, m: usize) -> (Matrix, Matrix) {
    let mut p = Matrix::identity(m);
    let mut inv = Matrix::identity(m);
    if m < 2 {
        return (p, inv);
    }
    for _ in 0..(2 * m) {
        let i = rng.gen_range(0..m);
        let mut j = rng.gen_range(0..m - 1);
        if j >= i {
            j += 1;
        }
        let c = small_int(rng, 1);
        if c.is_zero() {
            continue;
        }
        let mut e = Matrix::identity(m);
        e[(i, j)] = c.clone();
        let mut e_inv = Matrix::identity(m);
        e_inv[(i, j)] = -c;
        p = e.mul(&p).expect("square");
        inv = inv.mul(&e_inv).expect("square");
    }
    (p, inv)
}

fn draw(rng: &mut ChaCha8Rng, lie: LieChoice, m: usize) -> Vec<Matrix> {
    let lie_dim = lie.algebra().dim();
    match rng.gen_range(0..6) {
        0 => vec![Matrix::zeros(m, m); lie_dim],
        k => {
            let action = structured_action(rng, lie, m);
            if k == 1 {
                return action;
            }
            let (p, inv) = random_unimodular(rng, m);
            action
                .iter()
                .map(|a| p.mul(a).and_then(|pa| pa.mul(&inv)).expect("square"))
                .collect()
        }
    }
}

/// A random `lie ⊕ V` with `dim V = module_dim`, deterministic in `seed`.
///
/// Actions are drawn from structured families (polynomials in one matrix
/// for commuting actions, weight-graded maps for `r2`, sums of irreducibles
/// for `sl2`) and then conjugated by a random unimodular matrix. Every draw
/// is checked against the module axiom before use.
pub fn random_hemisemidirect(seed: u64, lie: LieChoice, module_dim: usize) -> Result<LeibnizAlgebra> {
    if module_dim > MAX_MODULE_DIM {
        return Err(Error::Catalog(format!(
            "module dimension {module_dim} exceeds {MAX_MODULE_DIM}"
        )));
    }
    let base = lie.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let action = draw(&mut rng, lie, module_dim);
        let Ok(module) = ModuleAction::new(base.tensor(), module_dim, action) else {
            continue;
        };
        let t = hemisemidirect(base.tensor(), &module)?;
        if let Ok(l) = LeibnizAlgebra::new(t) {
            return Ok(l);
        }
    }
    Err(Error::Catalog(format!(
        "no valid action found for {lie} on dimension {module_dim} within {REJECTION_BUDGET} draws"
    )))
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 8] = [
    "abelian2",
    "sl2",
    "heisenberg",
    "r2",
    "example_sec4_one",
    "example_sec4_two",
    "example_solvable4",
    "example_solvable5",
];

/// Looks up a catalog algebra. Parametric families take their parameter as
/// a suffix: `abelian3`, `example_solvable6`.
pub fn by_name(name: &str) -> Result<LeibnizAlgebra> {
    let param = |prefix: &str| -> Option<Result<usize>> {
        name.strip_prefix(prefix).map(|rest| {
            rest.parse::<usize>()
                .map_err(|_| Error::Catalog(format!("bad parameter in {name:?}")))
        })
    };
    match name {
        "sl2" => return Ok(sl2()),
        "heisenberg" => return Ok(heisenberg()),
        "r2" => return Ok(r2()),
        "example_sec4_one" => return Ok(example_sec4_one()),
        "example_sec4_two" => return Ok(example_sec4_two()),
        _ => {}
    }
    if let Some(n) = param("example_solvable") {
        return example_solvable(n?);
    }
    if let Some(n) = param("abelian") {
        return Ok(abelian(n?));
    }
    Err(Error::Catalog(format!("unknown catalog algebra {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_left_leibniz;

    #[test]
    fn every_named_algebra_is_valid() {
        for name in NAMES {
            let l = by_name(name).unwrap();
            assert!(check_left_leibniz(l.tensor()).is_empty(), "{name}");
        }
        assert_eq!(by_name("abelian0").unwrap().dim(), 0);
        assert!(by_name("nope").is_err());
        assert!(by_name("example_solvable3").is_err());
    }

    #[test]
    fn solvable_family_shape() {
        assert!(example_solvable(3).is_err());
        for n in 4..=7 {
            let l = example_solvable(n).unwrap();
            assert_eq!(l.dim(), n + 2);
        }
        let l = example_solvable(5).unwrap();
        // [e1,e1] = e3 survives the opposite product
        assert_eq!(l.tensor().basis_bracket(0, 0), crate::algebra::unit(7, 2));
        assert!(l.leibniz_kernel().contains(&crate::algebra::unit(7, 2)).unwrap());
        // the printed table itself violates the left identity
        assert!(!check_left_leibniz(&example_solvable_right_table(5).unwrap()).is_empty());
    }

    #[test]
    fn sec4_examples() {
        let l = example_sec4_one();
        assert_eq!(l.bracket(&[q(1), q(0), q(0)], &[q(0), q(0), q(1)]).unwrap(), vec![q(0), q(0), q(1)]);
        assert!(!l.is_lie());
        assert_eq!(example_sec4_two().leibniz_kernel().dim(), 2);
    }

    #[test]
    fn random_generator_is_deterministic_and_valid() {
        for lie in LieChoice::ALL {
            for m in 0..=4 {
                for seed in 0..4 {
                    let a = random_hemisemidirect(seed, lie, m).unwrap();
                    let b = random_hemisemidirect(seed, lie, m).unwrap();
                    assert_eq!(a, b);
                    assert_eq!(a.dim(), lie.algebra().dim() + m);
                }
            }
        }
        assert!(random_hemisemidirect(0, LieChoice::Sl2, 5).is_err());
        assert_eq!("sl2".parse::<LieChoice>().unwrap(), LieChoice::Sl2);
    }

    #[test]
    fn sl2_irreps_satisfy_the_module_axiom() {
        let sl2 = sl2();
        for d in 0..4 {
            let r = sl2_irrep(d);
            assert!(ModuleAction::new(sl2.tensor(), d + 1, r.to_vec()).is_ok());
        }
    }

    #[test]
    fn random_generator_produces_non_lie_algebras() {
        let non_lie = (0..20)
            .filter(|&s| !random_hemisemidirect(s, LieChoice::R2, 2).unwrap().is_lie())
            .count();
        assert!(non_lie > 0);
    }
}
