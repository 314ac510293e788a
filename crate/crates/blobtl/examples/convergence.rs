//! Powers of the type D full twist approach d_n q-adically.

use blobtl::braids::BraidFamily;
use blobtl::convergence::{converge, qadic_distance, target_projector, twist_powers};

fn main() -> blobtl::Result<()> {
    let p = 40;
    let d = target_projector(BraidFamily::D, 2, p)?;
    for (m, x) in twist_powers(BraidFamily::D, 2, 4, p)?.iter().enumerate().skip(1) {
        let (v, norm) = qadic_distance(x, &d)?;
        println!("m={m}  v = {v}  |.| = {norm}");
    }

    let r = converge(3, 12, 6, 48)?;
    println!("\nn=3 toward valuation 12:");
    for e in &r.entries {
        println!("  m={} v={}", e.m, e.valuation);
    }
    println!("  {:?} at {:?}", r.status, r.achieved_at);

    println!("\n{}", serde_json::to_string(&converge(2, 9, 4, 32)?.to_json()).unwrap());
    Ok(())
}
