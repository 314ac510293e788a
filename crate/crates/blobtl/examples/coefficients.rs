//! Laurent polynomials, rational functions and truncated series in q.

use blobtl::coefficients::{expand_to_series, quantum_integer, ratio, LaurentPoly};

fn main() -> blobtl::Result<()> {
    for k in 1..=4 {
        println!("[{k}] = {}", quantum_integer(k));
    }
    let q = LaurentPoly::q();
    println!("(q - q^-1)[3] = {}", &(&q - &LaurentPoly::monomial(1, -1)) * &quantum_integer(3));

    // [2]/[4] does not reduce to a polynomial
    let r = ratio(&quantum_integer(2), &quantum_integer(4));
    println!("[2]/[4] = {r}");
    let s = expand_to_series(&r, 12)?;
    println!("        = {s}");
    println!("valuation {}", s.valuation());
    Ok(())
}
