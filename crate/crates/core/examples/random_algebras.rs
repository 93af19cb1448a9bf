//! Seeded random hemisemidirect products over each small Lie algebra,
//! with a few invariants per draw.

use leibniz::biderivations::biderivation_space;
use leibniz::catalog::{random_hemisemidirect, LieChoice};
use leibniz::derivations::{derivation_space, is_complete, Definition};
use leibniz::Result;

fn main() -> Result<()> {
    println!("{:12} {:>4} {:>3} {:>5} {:>4} {:>4} {:>5} {:>5}", "lie", "seed", "dim", "leib", "der", "bid", "def1", "def2");
    for lie in LieChoice::ALL {
        for seed in 0..3u64 {
            let l = random_hemisemidirect(seed, lie, 1 + seed as usize)?;
            println!(
                "{:12} {:>4} {:>3} {:>5} {:>4} {:>4} {:>5} {:>5}",
                lie.to_string(),
                seed,
                l.dim(),
                l.leibniz_kernel().dim(),
                derivation_space(&l).dim(),
                biderivation_space(&l).dim(),
                is_complete(&l, Definition::Def1).verdict,
                is_complete(&l, Definition::Def2).verdict,
            );
        }
    }
    Ok(())
}
