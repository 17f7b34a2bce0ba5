//! p-special polynomials.
//!
//! A monic `P = x^i + A_{i-1} x^{i-1} + ... + A_0` is p-special when
//! `v_p(A_{i-1}) > v_p(2)` and `v_p(A_j) > v_p(A_{i-1})` for all `j < i - 1`.
//! Such polynomials satisfy `|Res(P, Phi_l)| > 1` for every `l >= 1`.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{cyclotomic, resultant, vp, IntPoly, Valuation};

/// Which condition failed, with the two valuations that were compared
/// (`lhs > rhs` was required).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub bullet: u8,
    pub index: usize,
    pub lhs: Valuation,
    pub rhs: Valuation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialReport {
    pub poly: IntPoly,
    pub p: u64,
    pub verdict: bool,
    pub witness: Option<Witness>,
}

/// Decides p-specialness.
///
/// A zero coefficient below the subleading one has infinite valuation and
/// never fails the second condition. A zero subleading coefficient fails
/// the first one: otherwise `x` itself would qualify, yet
/// `|Res(x, Phi_l)| = 1` for `l >= 2`.
pub fn is_p_special(poly: &IntPoly, p: u64) -> Result<SpecialReport> {
    if !poly.is_monic() {
        return Err(Error::NotMonic);
    }
    let i = poly.degree().expect("monic polynomials are nonzero");
    if i == 0 {
        return Err(Error::InvalidParameter("p-specialness needs degree >= 1".into()));
    }
    let report = |witness: Option<Witness>| SpecialReport {
        poly: poly.clone(),
        p,
        verdict: witness.is_none(),
        witness,
    };
    let v2 = vp(&BigInt::from(2), p)?;
    let sub = vp(&poly.coeff(i - 1), p)?;
    if sub == Valuation::Infinite || sub <= v2 {
        return Ok(report(Some(Witness {
            bullet: 1,
            index: i - 1,
            lhs: sub,
            rhs: v2,
        })));
    }
    for j in 0..i - 1 {
        let v = vp(&poly.coeff(j), p)?;
        if v <= sub {
            return Ok(report(Some(Witness {
                bullet: 2,
                index: j,
                lhs: v,
                rhs: sub,
            })));
        }
    }
    Ok(report(None))
}

/// Whether `P^k` stays p-special for every `1 <= k <= kmax`; `P` itself
/// must be p-special.
pub fn power_preserves_special(poly: &IntPoly, p: u64, kmax: u32) -> Result<bool> {
    if !is_p_special(poly, p)?.verdict {
        return Err(Error::PreconditionViolated(format!(
            "{} is not {p}-special",
            poly.to_human("x")
        )));
    }
    let mut power = poly.clone();
    for _ in 2..=kmax {
        power = &power * poly;
        if !is_p_special(&power, p)?.verdict {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|Res(P, Phi_l)|` for `1 <= l <= lmax`.
pub fn res_with_cyclotomics(poly: &IntPoly, lmax: u64) -> Result<Vec<(u64, BigInt)>> {
    (1..=lmax)
        .map(|l| Ok((l, resultant(poly, &cyclotomic(l))?.abs())))
        .collect()
}

/// A reproducible corpus of random p-special polynomials of degree at most
/// `max_degree`, cycling through `primes`.
pub fn synthetic_corpus(seed: u64, count: usize, primes: &[u64], max_degree: usize) -> Vec<(IntPoly, u64)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|idx| {
            let p = primes[idx % primes.len()];
            let pb = BigInt::from(p);
            let i = rng.gen_range(1..=max_degree);
            let v2 = if p == 2 { 1 } else { 0 };
            let v = v2 + 1 + rng.gen_range(0..3u32);
            let unit = loop {
                let u: i64 = rng.gen_range(-30..=30);
                if u != 0 && u.rem_euclid(p as i64) != 0 {
                    break u;
                }
            };
            let mut coeffs = vec![BigInt::from(0); i + 1];
            coeffs[i] = BigInt::from(1);
            coeffs[i - 1] = pb.pow(v) * unit;
            for c in coeffs.iter_mut().take(i - 1) {
                let extra = rng.gen_range(0..3u32);
                *c = pb.pow(v + 1 + extra) * rng.gen_range(-20i64..=20);
            }
            (IntPoly::new((), coeffs), p)
        })
        .collect()
}
