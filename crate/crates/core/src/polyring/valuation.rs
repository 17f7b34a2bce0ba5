//! p-adic valuations of integers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::numtheory::is_prime;
use crate::error::{Error, Result};

/// A p-adic valuation: finite, or `Infinite` for zero.
///
/// `Infinite` compares greater than every finite value and equal to itself,
/// so `Infinite > Infinite` is false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Self) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// The exponent of `p` in `a`.
pub fn vp(a: &BigInt, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a.is_zero() {
        return Ok(Valuation::Infinite);
    }
    if p == 2 {
        return Ok(Valuation::Finite(a.trailing_zeros().unwrap_or(0)));
    }
    let p = BigInt::from(p);
    let mut a = a.clone();
    let mut v = 0;
    loop {
        let (q, r) = a.div_rem(&p);
        if !r.is_zero() {
            return Ok(Valuation::Finite(v));
        }
        a = q;
        v += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(vp(&BigInt::from(-4), 2).unwrap(), Valuation::Finite(2));
        assert_eq!(vp(&BigInt::from(0), 3).unwrap(), Valuation::Infinite);
        let m = 5u32;
        let x = BigInt::from(2).pow(m - 1) * (BigInt::from(2).pow(m - 2) - 2);
        assert_eq!(vp(&x, 2).unwrap(), Valuation::Finite(u64::from(m)));
        assert_eq!(vp(&BigInt::from(-12), 3).unwrap(), Valuation::Finite(1));
        assert!(matches!(vp(&BigInt::from(8), 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn ordering_of_infinity() {
        let inf = Valuation::Infinite;
        assert!(inf > Valuation::Finite(u64::MAX));
        assert!(!(inf > inf));
        assert!(Valuation::Finite(3) > Valuation::Finite(2));
    }
}
