//! Rigorous natural logarithms of big integers.
//!
//! Bounds are fixed-point integers: a pair `(lo, hi)` at precision `q`
//! means `lo / 2^q <= ln|N| <= hi / 2^q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Lower and upper fixed-point bounds on `2 atanh(a/b)` for `0 <= a/b <= 1/3`.
fn atanh2_bounds(a: &BigInt, b: &BigInt, q: u64) -> (BigInt, BigInt) {
    if a.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let scale = BigInt::one() << q;
    let a2 = a * a;
    let b2 = b * b;
    let mut num = a.clone();
    let mut den = b.clone();
    let mut sum = BigInt::zero();
    let mut terms: u64 = 0;
    let mut k: u64 = 0;
    loop {
        let term = (&num * &scale).div_floor(&(&den * BigInt::from(2 * k + 1)));
        if term.is_zero() {
            break;
        }
        sum += term;
        terms += 1;
        num *= &a2;
        den *= &b2;
        k += 1;
    }
    // Each floored term loses < 1 ulp. The first dropped term is < 1 ulp and
    // the rest form a geometric tail with ratio <= 1/9, so the tail is < 2 ulp.
    let lo = &sum * 2;
    let hi = (sum + terms + 2) * 2;
    (lo, hi)
}

fn ln2_bounds(q: u64) -> (BigInt, BigInt) {
    atanh2_bounds(&BigInt::one(), &BigInt::from(3), q)
}

/// Bounds on `ln|n|` at `q` fraction bits.
pub fn ln_bounds(n: &BigInt, q: u64) -> Result<(BigInt, BigInt)> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let n = n.abs();
    let keep = q + 64;
    let total = n.bits();
    // n lies in [t * 2^s, (t + 1) * 2^s)
    let (t, s, truncated) = if total > keep {
        let s = total - keep;
        let t: BigInt = &n >> s;
        let exact = (&t << s) == n;
        (t, s, !exact)
    } else {
        (n, 0, false)
    };
    // t = x * 2^e with x in [1, 2)
    let e = t.bits() - 1;
    let pow_e = BigInt::one() << e;
    let (m_lo, m_hi) = atanh2_bounds(&(&t - &pow_e), &(&t + &pow_e), q);
    let (l2_lo, l2_hi) = ln2_bounds(q);
    let shift = BigInt::from(e + s);
    let lo = m_lo + &l2_lo * &shift;
    // ln(t + 1) - ln(t) < 1/t <= 2^-(q+63)
    let hi = m_hi + &l2_hi * &shift + if truncated { 1 } else { 0 };
    Ok((lo, hi))
}

/// `floor(ln|n|)`, exact: precision is widened until both bounds agree.
pub fn floor_log_abs(n: &BigInt) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut q = 64;
    loop {
        let (lo, hi) = ln_bounds(n, q)?;
        let flo = lo >> q;
        let fhi = hi >> q;
        if flo == fhi {
            return Ok(u64::try_from(flo).expect("logarithm of a nonzero integer is nonnegative"));
        }
        q *= 2;
    }
}

/// Decimal rendering of `ln|n| / denom`, truncated to `digits` places.
pub fn ln_ratio_decimal(n: &BigInt, denom: u64, digits: u32) -> Result<String> {
    let q = 64 + 4 * u64::from(digits) + 64;
    let (lo, hi) = ln_bounds(n, q)?;
    let mid: BigInt = (lo + hi) >> 1;
    let scaled = (mid * BigInt::from(10).pow(digits)) / (BigInt::from(denom) << q);
    let s = scaled.to_string();
    let s = format!("{s:0>width$}", width = digits as usize + 1);
    let (int, frac) = s.split_at(s.len() - digits as usize);
    Ok(format!("{int}.{frac}"))
}

/// Decides `ln|n| >= (num / den) * denom`, widening precision as needed.
pub fn ln_at_least(n: &BigInt, denom: u64, num: u64, den: u64) -> Result<bool> {
    let mut q = 128;
    loop {
        let (lo, hi) = ln_bounds(n, q)?;
        let rhs = (BigInt::from(num) * BigInt::from(denom)) << q;
        if lo * BigInt::from(den) >= rhs {
            return Ok(true);
        }
        if hi * BigInt::from(den) < rhs {
            return Ok(false);
        }
        q *= 2;
        if q > 1 << 20 {
            return Err(Error::PreconditionViolated(
                "logarithm comparison did not separate".into(),
            ));
        }
    }
}
