//! V^n under TL(B_n) and the coideal element B.

use blobtl::coideal_rep::{
    commutant_dimension, commutes_with_coideal, eigen_decomposition, projector_image_check, schur_weyl_rank, ImageKind,
};

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn main() -> blobtl::Result<()> {
    let r = eigen_decomposition(2)?;
    for s in &r.spaces {
        for (eps, v) in &s.vectors {
            println!("[{}] {eps}: {v}", s.index);
        }
    }

    for n in 1..=5 {
        let r = eigen_decomposition(n)?;
        let m: Vec<String> = r.spaces.iter().map(|s| format!("[{}]^{}", s.index, s.multiplicity)).collect();
        println!("n={n}: {}  independent {}", m.join(" "), r.complete());
    }

    println!();
    for n in 1..=4 {
        println!(
            "n={n}: rank {} (C(2n,n) = {}), commutant {}, commutes {}",
            schur_weyl_rank(n)?,
            binom(2 * n, n),
            commutant_dimension(n)?,
            commutes_with_coideal(n)?
        );
    }

    println!();
    for (kind, n) in [("b+", 3), ("b-", 3), ("d", 2), ("e(1,-1)", 2), ("e(1,-1,-1)", 3)] {
        let k: ImageKind = kind.parse()?;
        let r = projector_image_check(&k, n)?;
        println!("{kind} n={n}: rank {} holds {}", r.rank, r.holds());
    }
    Ok(())
}
