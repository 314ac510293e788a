//! Dotted planar diagrams: bases, validity and stacking.

use blobtl::diagrams::{enumerate_basis, validate, Diagram, Family};

fn main() -> blobtl::Result<()> {
    for n in 1..=5 {
        let sizes: Vec<usize> = [Family::A, Family::B, Family::D]
            .iter()
            .map(|&f| enumerate_basis(n, f).map_or(0, |b| b.len()))
            .collect();
        println!("n={n}  A {:>4}  B {:>4}  D {:>4}", sizes[0], sizes[1], sizes[2]);
    }

    println!("\nTL(B_2):");
    for d in enumerate_basis(2, Family::B)? {
        println!("  {d}");
    }

    // a dot may only sit on an arc that can reach the left wall
    let hidden = Diagram::raw(4, 4, &[(0, 4, false), (1, 2, true), (3, 7, false), (5, 6, false)])?;
    println!("\n{hidden}: {:?}", validate(&hidden));

    let u1 = Diagram::u(1, 3)?;
    let s0 = Diagram::s0(3)?;
    let out = Diagram::compose(&u1, &u1)?;
    println!("U1 U1 = delta^{} {}", out.undotted_loops, out.result);
    let out = Diagram::compose(&u1, &Diagram::compose(&s0, &u1)?.result)?;
    println!("U1 s0 U1: dotted loop {}", out.dotted_loop_seen);
    println!("json {}", u1.to_json());
    Ok(())
}
