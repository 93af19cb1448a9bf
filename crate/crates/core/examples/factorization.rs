//! Tries to write a biderivation as [phi(x),y] (left) or [psi(y),x] (right)
//! and prints the elimination certificate when no such map exists.

use leibniz::biderivations::{factor_left_modulo, factor_right_modulo};
use leibniz::catalog;
use leibniz::cli::fmt_map;
use leibniz::{Result, Subspace};

fn main() -> Result<()> {
    let l = catalog::example_sec4_one();
    let f = catalog::sec4_one_f();
    let zero = Subspace::zero(l.dim());
    println!("F(v,v) = v on the three-dimensional example:");
    for line in factor_left_modulo(&l, &f, &zero)?.explain(l.tensor()) {
        println!("  {line}");
    }

    let l = catalog::example_sec4_two();
    let f = catalog::sec4_two_f();
    println!("\nF(v,w) = v = -F(w,v), exact factorization:");
    let left = factor_left_modulo(&l, &f, &Subspace::zero(l.dim()))?;
    let right = factor_right_modulo(&l, &f, &Subspace::zero(l.dim()))?;
    println!("  left feasible: {}, right feasible: {}", left.feasible, right.feasible);

    println!("modulo Leib(L):");
    let leib = l.leibniz_kernel();
    for r in [factor_left_modulo(&l, &f, &leib)?, factor_right_modulo(&l, &f, &leib)?] {
        assert!(r.verify(&l, &f)?);
        let t = l.tensor();
        let map = r.map.as_ref().map_or("none".into(), |m| fmt_map(t, m));
        let residual = r.residual.as_ref().map_or(0, |p| p.nonzero_values().len());
        println!(
            "  {:?}: map {map}, residual has {residual} nonzero values, residual is a one-sided biderivation: {:?}",
            r.side, r.residual_biderivation
        );
    }
    Ok(())
}
