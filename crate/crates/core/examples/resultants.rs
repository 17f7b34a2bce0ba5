//! Resultants, cyclotomic polynomials and norms from `Z[zeta_d]`.
//!
//! Run with `cargo run --example resultants`.

use misi::polyring::{cyclotomic, resultant, resultant_sylvester, CyclotomicRing, CycScalar, IntPoly, Ring};
use num_bigint::BigInt;

fn main() -> misi::Result<()> {
    for l in [1, 2, 3, 4, 6, 12, 30] {
        println!("Phi_{l} = {}", cyclotomic(l).to_human("x"));
    }

    let f = IntPoly::from_i64s(&[32, -8, 1]);
    println!();
    for l in 1..=6 {
        let phi = cyclotomic(l);
        let fast = resultant(&f, &phi)?;
        let slow = resultant_sylvester(&f, &phi)?;
        assert_eq!(fast, slow);
        println!("Res(x^2 - 8x + 32, Phi_{l}) = {fast}");
    }

    // Units of Z[i]: 2 + i has norm 5, i has norm 1.
    let ring = CyclotomicRing::new(4)?;
    let i = ring.zeta_pow(1);
    let two_plus_i = i.add_ref(&CycScalar::from_int(&ring, &BigInt::from(2)));
    println!("\nN(2 + i) = {}, N(i) = {}", two_plus_i.norm(), i.norm());
    println!("2 + i is a unit: {}; i is a unit: {}", two_plus_i.is_unit(), i.is_unit());
    Ok(())
}
