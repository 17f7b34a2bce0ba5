//! Multiplier polynomials for `z^2 + c`, built three ways.
//!
//! Run with `cargo run --release --example multiplier`.

use misi::multiplier::{p_by_resultant, p_closed, r_poly};
use misi::{p_poly, MisSpec, OrbitCtx};

fn main() -> misi::Result<()> {
    let ctx = OrbitCtx::new(2)?;

    for m in 2..=5 {
        for n in 1..=2 {
            let spec = MisSpec::quadratic(m, n);
            let charpoly = p_poly(&ctx, &spec)?.poly;
            let closed = p_closed(&ctx, &spec)?.expect("n <= 2 has a closed form").poly;
            let via_res = p_by_resultant(&ctx, &spec)?;
            let agree = charpoly == closed && closed == via_res;
            println!("P_{{{m},{n}}} = {}   [routes agree: {agree}]", charpoly.to_human("x"));
        }
    }

    println!();
    for m in 2..=4 {
        println!("R_{m} = {}", r_poly(&ctx, m)?.to_human("x"));
    }

    // A larger one: only the degree and subleading coefficient are shown.
    let spec = MisSpec::quadratic(4, 3);
    let p = p_poly(&ctx, &spec)?.poly.into_int()?;
    let k = p.degree().unwrap();
    println!("\nP_{{4,3}}: degree {k}, subleading coefficient {}", p.coeff(k - 1));
    Ok(())
}
