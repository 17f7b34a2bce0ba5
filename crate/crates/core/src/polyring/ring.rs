//! The coefficient-ring abstraction shared by every polynomial type.
//!
//! Rings here are commutative integral domains with an exact-division
//! test. Elements of parameterised rings (e.g. `Z[zeta_d]`) carry their
//! parameter as a [`Ring::Ctx`] so that zero and one can be built without a
//! sample element.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    /// Runtime description of the ring (unit type for `Z`).
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, value: &BigInt) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Returns `self / other` when the quotient exists in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add_ref(&a.mul_ref(b));
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Human-readable form used when printing polynomial coefficients.
    fn display(&self) -> String;

    /// True when `display` yields a single signed integer-like token.
    fn is_atomic(&self) -> bool {
        true
    }
}

impl Ring for BigInt {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: &()) -> Self {
        Zero::zero()
    }

    fn one(_: &()) -> Self {
        One::one()
    }

    fn from_int(_: &(), value: &BigInt) -> Self {
        value.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn pow(&self, exp: u64) -> Self {
        num_traits::pow(self.clone(), exp as usize)
    }

    fn display(&self) -> String {
        self.to_string()
    }
}
