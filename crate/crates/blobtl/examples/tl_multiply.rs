//! Arithmetic in TL(B_n) from the text syntax.

use blobtl::tl_algebra::parse_element;

fn main() -> blobtl::Result<()> {
    let n = 3;
    let cases = [
        ("U1", "U1"),
        ("U1", "s0 U1"),
        ("U1 U2", "U1"),
        ("1 - q^-1 U1", "1 - q U1"),
        ("s0 U1 s0", "U1 s0 U1 s0"),
        ("{(b0-t0)* (b1-b2) (t1-t2)}", "U2"),
    ];
    for (a, b) in cases {
        let x = parse_element(a, n)?;
        let y = parse_element(b, n)?;
        let p = x.checked_mul(&y)?;
        println!("({a}) * ({b}) =");
        for line in p.to_string().lines() {
            println!("  {line}");
        }
    }
    let x = parse_element("s0 U1 s0", 2)?;
    println!("phi(s0 U1 s0) = {}", x.phi());
    Ok(())
}
