//! Critical-orbit polynomials and the Misiurewicz polynomials built from them.
//!
//! Run with `cargo run --example orbits`.

use misi::misiurewicz::h_poly;
use misi::{g_degree, g_poly, MisSpec, OrbitCtx};
use num_bigint::BigInt;

fn main() -> misi::Result<()> {
    let ctx = OrbitCtx::new(2)?;
    for i in 1..=4 {
        println!("a_{i}(c) = {}", ctx.a(i).to_human("c"));
    }

    println!();
    for (m, n) in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2), (5, 3)] {
        let spec = MisSpec::quadratic(m, n);
        let g = g_poly(&ctx, &spec)?;
        println!("G_{{{m},{n}}} has degree {} (formula: {})", g.degree().unwrap(), g_degree(&spec));
        if g.degree().unwrap() <= 8 {
            println!("    {}", g.to_human("c"));
        }
    }

    // c = -2 is the root of G_{2,1}: 0 -> -2 -> 2 -> 2 -> ...
    let c = BigInt::from(-2);
    let orbit: Vec<String> = (1..=5).map(|i| ctx.a(i).eval(&c).to_string()).collect();
    println!("\norbit of 0 under z^2 - 2: 0, {}", orbit.join(", "));

    // For n = 2 the Möbius quotient collapses to a_m - a_{m-1} + 1,
    // up to a factor c + 1 when m is odd.
    let h = h_poly(&ctx, 4)?;
    println!("H_4 = {}", h.to_human("c"));
    Ok(())
}
