//! Misiurewicz and multiplier polynomials for `z^3 + c`, with
//! coefficients in `Z[zeta_3]`.
//!
//! Run with `cargo run --release --example cubic`.

use misi::multiplier::p_by_resultant;
use misi::polyring::resultant;
use misi::{g_poly, p_poly, MisSpec, OrbitCtx, SpecPoly};

fn main() -> misi::Result<()> {
    let ctx = OrbitCtx::new(3)?;
    println!("Z[z] with z^2 + z + 1 = 0\n");
    for e in 1..=2 {
        for (m, n) in [(2, 1), (2, 2), (3, 1)] {
            let spec = MisSpec::new(3, m, n, e)?;
            let g = g_poly(&ctx, &spec)?;
            let p = p_poly(&ctx, &spec)?.poly;
            println!("{spec}");
            println!("  G = {}", g.to_human("c"));
            if p.degree().unwrap() <= 3 {
                println!("  P = {}", p.to_human("x"));
            }
            assert_eq!(p, p_by_resultant(&ctx, &spec)?);
        }
    }

    // Res(G_{3,2,2}, G_{3,2,1}) is a non-unit of Z[zeta_3]; its norm says so.
    let spec = MisSpec::new(3, 2, 2, 1)?;
    let (SpecPoly::Cyc(g2), SpecPoly::Cyc(g1)) = (g_poly(&ctx, &spec)?, g_poly(&ctx, &spec.with_n(1))?) else {
        unreachable!("d = 3 lives in Z[zeta_3]");
    };
    let r = resultant(&g2, &g1)?;
    println!("\nRes(G_(3,2,2), G_(3,2,1)) = {}, norm {}", r.residue().to_human("z"), r.norm());
    Ok(())
}
