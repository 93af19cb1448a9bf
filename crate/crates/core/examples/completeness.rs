//! Derivations, inner derivations and both completeness tests on a few
//! catalog algebras, with the obstruction when a test fails.

use leibniz::catalog;
use leibniz::cli::{fmt_map, fmt_vector};
use leibniz::derivations::{derivation_space, inner_derivation_space, is_complete, Definition};
use leibniz::Result;

fn main() -> Result<()> {
    for name in ["sl2", "r2", "heisenberg", "example_sec4_one", "example_solvable5"] {
        let l = catalog::by_name(name)?;
        let t = l.tensor();
        println!(
            "{name}: dim Der = {}, dim Inner = {}",
            derivation_space(&l).dim(),
            inner_derivation_space(&l).dim()
        );
        for def in [Definition::Def1, Definition::Def2] {
            let r = is_complete(&l, def);
            println!("  {def:?}: {}", if r.verdict { "complete" } else { "not complete" });
            if let Some(z) = &r.center_obstruction {
                for v in z.vectors() {
                    println!("    central element {}", fmt_vector(t, v));
                }
            }
            if let Some(d) = &r.derivation_obstruction {
                println!("    outer derivation {}", fmt_map(t, d));
            }
        }
    }
    Ok(())
}
