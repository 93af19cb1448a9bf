//! The four biderivation spaces, the symmetric/skew split and a basis of
//! the full space for the four-dimensional example with a nonzero skew
//! biderivation.

use leibniz::biderivations::{
    basis_tensors, biderivation_space, biderivation_space_stacked, left_biderivation_space,
    loday_biderivation_space, right_biderivation_space, symmetric_biderivations,
};
use leibniz::catalog;
use leibniz::cli::fmt_vector;
use leibniz::Result;

fn main() -> Result<()> {
    for name in catalog::NAMES {
        let l = catalog::by_name(name)?;
        let full = biderivation_space(&l);
        assert_eq!(full, biderivation_space_stacked(&l));
        println!(
            "{name:18} left {:3} right {:3} full {:3} loday {:3} sym {:3} skew {:3}",
            left_biderivation_space(&l).dim(),
            right_biderivation_space(&l).dim(),
            full.dim(),
            loday_biderivation_space(&l).dim(),
            symmetric_biderivations(&l, true).dim(),
            symmetric_biderivations(&l, false).dim(),
        );
    }

    let l = catalog::example_sec4_two();
    let t = l.tensor();
    println!("\nbasis of the biderivations of example_sec4_two:");
    for (idx, b) in basis_tensors(&biderivation_space(&l), l.dim()).iter().enumerate() {
        let terms: Vec<String> = b
            .nonzero_values()
            .into_iter()
            .map(|(i, j, _)| format!("B({},{}) = {}", t.label(i), t.label(j), fmt_vector(t, &b.value(i, j))))
            .collect();
        println!("  #{idx}: {}", terms.join(", "));
    }
    Ok(())
}
