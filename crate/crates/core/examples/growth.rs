//! Growth of `ln |Res(P_{m,n}, Phi_l)|` against `n deg(P) deg(Phi_l)`.
//!
//! Run with `cargo run --release --example growth`.

use misi::harness::{growth_report, Engine};

fn main() -> misi::Result<()> {
    let report = growth_report(&Engine::new())?;
    for e in &report.entries {
        println!("(m,n)=({},{}) l={} ratio {}", e.m, e.n, e.l, &e.ratio[..8]);
    }
    println!("\nmin {} at ({},{}) l={}", report.min.ratio, report.min.m, report.min.n, report.min.l);
    println!("max {} at ({},{}) l={}", report.max.ratio, report.max.m, report.max.n, report.max.l);
    println!(
        "max over m+n > 4: {} at ({},{}) l={}",
        report.max_large.ratio, report.max_large.m, report.max_large.n, report.max_large.l
    );
    println!(
        "within [0.71, 1.44]: {} / {};  <= 0.82 beyond m+n=4: {}",
        report.min_ok, report.max_ok, report.max_large_ok
    );
    Ok(())
}
