//! p-special polynomials and their resultants with cyclotomic polynomials.
//!
//! Run with `cargo run --example special`.

use misi::polyring::IntPoly;
use misi::special::{is_p_special, power_preserves_special, res_with_cyclotomics, synthetic_corpus};

fn main() -> misi::Result<()> {
    let examples = [
        (IntPoly::from_i64s(&[-4, 1]), 2),
        (IntPoly::from_i64s(&[32, -8, 1]), 2),
        (IntPoly::from_i64s(&[16, 0, -4, 1]), 2),
        (IntPoly::from_i64s(&[8, -2, 1]), 2),
        (IntPoly::from_i64s(&[-12, 1]), 3),
    ];
    for (poly, p) in &examples {
        let report = is_p_special(poly, *p)?;
        print!("{:<20} p={p}: {}", poly.to_human("x"), report.verdict);
        if let Some(w) = report.witness {
            print!("  (condition {} fails at index {}: {} vs {})", w.bullet, w.index, w.lhs, w.rhs);
        }
        println!();
    }

    let p = IntPoly::from_i64s(&[32, -8, 1]);
    println!("\n|Res(x^2 - 8x + 32, Phi_l)| for l = 1..10:");
    for (l, r) in res_with_cyclotomics(&p, 10)? {
        println!("  l={l:<2} {r}");
    }
    println!("powers up to 4 stay 2-special: {}", power_preserves_special(&p, 2, 4)?);

    let corpus = synthetic_corpus(1, 50, &[2, 3, 5], 8);
    let mut smallest = None;
    for (poly, _) in &corpus {
        for (_, r) in res_with_cyclotomics(poly, 30)? {
            smallest = Some(smallest.map_or(r.clone(), |s: num_bigint::BigInt| s.min(r)));
        }
    }
    println!("smallest |Res| over 50 random p-special polynomials, l <= 30: {}", smallest.unwrap());
    Ok(())
}
