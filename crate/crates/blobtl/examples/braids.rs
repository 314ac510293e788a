//! Braid words in types A, B and D, their images, and local moves.

use blobtl::braids::{check_reidemeister, cupcap_kill_check, embed_in_type_a, evaluate_word, full_twist_word, parse_word, BraidFamily, Move};
use blobtl::coefficients::LaurentPoly;
use blobtl::tl_algebra::TlElement;

fn main() -> blobtl::Result<()> {
    let w = parse_word("s0 s1 s0 s1^-1", 2, BraidFamily::B1)?;
    let x: TlElement<LaurentPoly> = evaluate_word(&w)?;
    println!("{w} ->\n{x}");
    println!("embedded in type A: {}", embed_in_type_a(&w)?);

    let t = full_twist_word(BraidFamily::D, 2)?;
    let x: TlElement<LaurentPoly> = evaluate_word(&t)?;
    println!("\nfull twist {t} ->\n{x}");

    println!();
    for n in 1..=4 {
        let mut failed = Vec::new();
        let mut count = 0;
        for mv in Move::ALL {
            for i in mv.positions(n) {
                count += 1;
                if !check_reidemeister(mv, n, i)?.holds() {
                    failed.push(format!("{mv}@{i}"));
                }
            }
        }
        println!("n={n}: {count} local moves checked, failures {failed:?}");
    }

    let r = cupcap_kill_check(3, 1, false, 1)?;
    println!("\ncap after the full twist on 3 strands: scalar {:?}, expected {}", r.scalar.map(|s| s.to_string()), r.expected);
    Ok(())
}
