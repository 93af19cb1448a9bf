//! Commuting and skew-commuting maps, and how the symmetric and skew parts
//! of a biderivation on a complete algebra come from such maps.

use leibniz::biderivations::{
    basis_tensors, biderivation_space, commuting_map_space, converse_def2_sym_skew, skew_commuting_map_space,
    verify_prop_commuting, verify_sigma_theta,
};
use leibniz::catalog;
use leibniz::cli::fmt_map;
use leibniz::derivations::Definition;
use leibniz::Result;

fn main() -> Result<()> {
    for name in ["sl2", "r2", "example_sec4_two"] {
        let l = catalog::by_name(name)?;
        let p = verify_prop_commuting(&l);
        println!(
            "{name}: commuting {}, skew-commuting {}, induced biderivations have the right symmetry: {}",
            commuting_map_space(&l).dim(),
            skew_commuting_map_space(&l).dim(),
            p.passed
        );
    }

    let l = catalog::sl2();
    let t = l.tensor();
    println!("\nsl2, every basis biderivation:");
    for b in basis_tensors(&biderivation_space(&l), l.dim()) {
        let r = verify_sigma_theta(&l, &b, Definition::Def2)?;
        let show = |m: &Option<leibniz::LinearMapMatrix>| m.as_ref().map_or("none".into(), |m| fmt_map(t, m));
        println!(
            "  sigma = {} ; theta = {} ; holds: {}",
            show(&r.symmetric.combined),
            show(&r.skew.combined),
            r.holds
        );
    }

    let c = converse_def2_sym_skew(&l)?;
    println!("\nconverse on sl2:");
    for e in &c.entries {
        let g = e.g.as_ref().map_or("none".into(), |g| fmt_map(t, g));
        println!("  #{} {:?}: g = {g}, reproduces: {}", e.basis_index, e.symmetry, e.reproduces);
    }
    println!("passed: {}", c.passed);
    Ok(())
}
