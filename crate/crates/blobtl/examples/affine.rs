//! The quotient map from the affine TL algebra.

use blobtl::braids::{affine_image, check_affine_relations, parse_affine};
use blobtl::coefficients::LaurentPoly;
use blobtl::tl_algebra::TlElement;

fn main() -> blobtl::Result<()> {
    let x: TlElement<LaurentPoly> = affine_image(&parse_affine("D U1 D^-1")?, 2)?;
    println!("D U1 D^-1 on 2 strands ->\n{x}");

    for n in 2..=4 {
        let rels = check_affine_relations(n)?;
        let bad: Vec<_> = rels.iter().filter(|(_, ok)| !ok).map(|(r, _)| r.as_str()).collect();
        println!("n={n}: {} relations, failing {bad:?}", rels.len());
    }
    Ok(())
}
