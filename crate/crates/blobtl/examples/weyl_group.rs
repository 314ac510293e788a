//! Dotted permutations, conjugacy classes and Specht module dimensions of
//! the hyperoctahedral group.

use blobtl::weyl_group::{
    bipartitions_of, branching_neighbors, conjugacy_bipartition, conjugacy_classes, group_order, longest_element,
    specht_dimension_hook, Bipartition, Direction, DottedPermutation, WeylType,
};

fn main() -> blobtl::Result<()> {
    let x = DottedPermutation::new(&[2, 3, 1], &[0, 1, 1])?;
    let y = DottedPermutation::new(&[3, 1, 2], &[0, 1, 1])?;
    let xy = x.mul(&y);
    println!("{x} * {y} = {xy}");
    println!("as signed permutation {:?}", xy.to_signed_permutation());

    let (w0, word) = longest_element(WeylType::D, 3)?;
    println!("longest element of W(D_3): {w0}, length {}", word.len());

    println!("\nclasses of W(B_3), |W| = {}", group_order(WeylType::B, 3)?);
    let mut classes: Vec<_> = conjugacy_classes(3).iter().map(|c| (conjugacy_bipartition(&c[0]), c.len())).collect();
    classes.sort();
    for (b, k) in &classes {
        println!("  {b:<16} {k}");
    }

    let n = 4;
    let total: u128 = bipartitions_of(n).iter().map(|b| specht_dimension_hook(b).pow(2)).sum();
    println!("\nsum of squared dimensions at n={n}: {total} = {}", group_order(WeylType::B, n)?);

    let bp: Bipartition = "2,1|1".parse()?;
    let up: Vec<String> = branching_neighbors(&bp, Direction::Up).iter().map(ToString::to_string).collect();
    println!("{bp} grows to {}", up.join(" "));
    Ok(())
}
