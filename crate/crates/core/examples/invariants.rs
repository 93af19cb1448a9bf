//! Builds sl2 ⋉ V(2) as a hemisemidirect product and prints its
//! Leibniz kernel, left center, center and the Lie quotient.

use leibniz::algebra::{hemisemidirect, ModuleAction};
use leibniz::catalog;
use leibniz::cli::fmt_vector;
use leibniz::{LeibnizAlgebra, Matrix, Result};

fn main() -> Result<()> {
    let sl2 = catalog::sl2().into_tensor();
    // the standard representation, basis order h, e, f
    let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
    let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
    let module = ModuleAction::new(&sl2, 2, vec![h, e, f])?;
    let l = LeibnizAlgebra::new(hemisemidirect(&sl2, &module)?)?;
    let t = l.tensor();

    println!("dim L = {}, Lie: {}", l.dim(), l.is_lie());
    for (name, s) in [
        ("Leib(L)", l.leibniz_kernel()),
        ("Z^l(L)", l.left_center()),
        ("Z(L)", l.center()),
    ] {
        let basis: Vec<String> = s.vectors().map(|v| fmt_vector(t, v)).collect();
        println!("{name}: dim {} spanned by [{}]", s.dim(), basis.join(", "));
    }

    let q = l.quotient(&l.leibniz_kernel())?;
    let ql = LeibnizAlgebra::new(q.tensor.clone())?;
    println!("L/Leib(L): dim {}, Lie: {}", ql.dim(), ql.is_lie());
    for (i, j, terms) in q.tensor.nonzero_brackets() {
        let mut v = vec![leibniz::q(0); ql.dim()];
        for (k, c) in terms {
            v[k] = c;
        }
        println!("  [{},{}] = {}", q.tensor.label(i), q.tensor.label(j), fmt_vector(&q.tensor, &v));
    }
    Ok(())
}
