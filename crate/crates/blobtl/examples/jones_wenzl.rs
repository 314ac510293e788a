//! The projectors a_n, b_{n,+}, b_{n,-} and d_n, checked against their
//! characterizing properties.

use blobtl::diagrams::Family;
use blobtl::jones_wenzl::{killing_space_dimension, projector, verify_characterization, Kind};

fn main() -> blobtl::Result<()> {
    println!("d_2 =\n{}", projector(Kind::D, 2)?);

    for n in 1..=4 {
        for kind in [Kind::A, Kind::BPlus, Kind::BMinus, Kind::D] {
            if kind == Kind::D && n < 2 {
                continue;
            }
            let p = projector(kind, n)?;
            let r = verify_characterization(&p, kind)?;
            println!("{kind:?} n={n}: {} terms, {}", p.len(), if r.passed() { "ok" } else { "FAILED" });
        }
    }

    for n in 2..=4 {
        println!(
            "n={n}: elements killed by every generator span {} dims in TL(D), {} in TL(B)",
            killing_space_dimension(n, Family::D)?,
            killing_space_dimension(n, Family::B)?
        );
    }
    Ok(())
}
