//! Exact polynomial arithmetic over `Z` and `Z[zeta_d]`.

mod charpoly;
mod cyclo;
mod format;
mod linalg;
mod logs;
pub mod modular;
mod numtheory;
mod poly;
mod resultant;
mod ring;
mod specpoly;
mod valuation;

pub use charpoly::{charpoly_by_resultant, charpoly_mod, charpoly_mod_generic, multiplication_matrix};
pub use cyclo::{cyclotomic, CycPoly, CycScalar, CyclotomicRing};
pub use format::{parse_human, CycPolyJson, PolyJson};
pub use linalg::{charpoly_berkowitz, det_bareiss, Matrix};
pub use logs::{floor_log_abs, ln_at_least, ln_bounds, ln_ratio_decimal};
pub use numtheory::{divisors, factorize, is_prime, mobius, mobius_gcd_sum, totient};
pub use poly::{IntPoly, Poly};
pub use resultant::{resultant, resultant_sylvester, sylvester_matrix};
pub use ring::Ring;
pub use specpoly::SpecPoly;
pub use valuation::{vp, Valuation};

use num_bigint::BigInt;

/// `s^k f((x - s) / s)` for `f` of degree `k`, computed over the integers.
pub fn affine_rescale(f: &IntPoly, s: u64) -> IntPoly {
    let Some(k) = f.degree() else {
        return f.clone();
    };
    let s = BigInt::from(s);
    // sum_i f_i s^(k-i) (x - s)^i
    let shifted = IntPoly::new((), vec![-s.clone(), BigInt::from(1)]);
    let mut power = IntPoly::one(&());
    let mut out = IntPoly::zero(&());
    for i in 0..=k {
        let c = f.coeff(i);
        if c != BigInt::from(0) {
            let weight = c * s.pow((k - i) as u32);
            out = &out + &power.scale(&weight);
        }
        if i < k {
            power = &power * &shifted;
        }
    }
    out
}

/// Squarefreeness of an integer polynomial, decided modulo a prime that
/// keeps the degree; `None` when no suitable prime separates the answer
/// (a mod-p common factor does not prove a repeated root).
pub fn is_squarefree(f: &IntPoly) -> Option<bool> {
    use modular::{large_primes, Montgomery};
    let k = f.degree()?;
    if k == 0 {
        return Some(true);
    }
    for p in large_primes(8) {
        let field = Montgomery::new(p);
        let fp: Vec<u64> = f.coeffs().iter().map(|c| field.from_bigint(c)).collect();
        if fp[k] == 0 {
            continue;
        }
        let dp: Vec<u64> = (1..=k)
            .map(|i| field.mul(fp[i], field.to_mont(i as u64)))
            .collect();
        if gcd_degree(&field, fp, dp) == 0 {
            return Some(true);
        }
    }
    None
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gcd_degree(field: &modular::Montgomery, mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        let inv = field.inv(*b.last().unwrap());
        while a.len() >= b.len() {
            let q = field.mul(*a.last().unwrap(), inv);
            let off = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[off + i] = field.sub(a[off + i], field.mul(q, bc));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}
