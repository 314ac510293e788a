//! Quasi-idempotents t_eps and the projectors e_eps.

use blobtl::diagrams::Family;
use blobtl::jones_wenzl::{higher_projector, quasi_idempotent, Epsilon, RatElement};

fn main() -> blobtl::Result<()> {
    let n = 3;
    let all = Epsilon::all(n);
    let mut sum = RatElement::zero(n);
    for eps in &all {
        let (_, scalar) = quasi_idempotent(eps)?;
        let e = higher_projector(eps, Family::B)?;
        println!("{eps}: t^2 = ({scalar}) t, {} terms", e.len());
        sum = sum.checked_add(&e)?;
    }

    // orthogonal family
    let mut orth = true;
    for a in &all {
        for b in &all {
            if a != b {
                let x = higher_projector(a, Family::B)?;
                let y = higher_projector(b, Family::B)?;
                orth &= x.checked_mul(&y)?.is_zero();
            }
        }
    }
    println!("pairwise orthogonal: {orth}");
    println!("sum is the identity: {}", sum == RatElement::one(n));

    let eps: Epsilon = "1,-1".parse()?;
    println!("\ne_{eps} =\n{}", higher_projector(&eps, Family::B)?);
    Ok(())
}
