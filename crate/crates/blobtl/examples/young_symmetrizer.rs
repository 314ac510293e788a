//! Young symmetrizers in Q[W(B_n)] and the dimensions of their left ideals.

use blobtl::group_algebra::{left_ideal_dimension, quasi_idempotent_scalar, standard_symmetrizer};
use blobtl::weyl_group::{bipartitions_of, specht_dimension_hook};

fn main() -> blobtl::Result<()> {
    let s = standard_symmetrizer(&"1|1".parse()?)?;
    println!("symmetrizer of ((1),(1)):\n{s}");

    for n in 1..=3 {
        for bp in bipartitions_of(n) {
            let q = standard_symmetrizer(&bp)?;
            let c = quasi_idempotent_scalar(&q)?;
            let dim = left_ideal_dimension(&q)?;
            println!("{bp:<18} q^2 = {c} q  ideal dim {dim}  hook {}", specht_dimension_hook(&bp));
        }
    }
    Ok(())
}
