//! Dense univariate polynomials over a [`Ring`].
//!
//! Coefficients are stored in ascending order (`coeffs[i]` multiplies
//! `x^i`) with trailing zeros trimmed, so the zero polynomial is the empty
//! vector and its degree is `None`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
    ctx: R::Ctx,
}

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<BigInt>;

impl<R: Ring> Poly<R> {
    pub fn new(ctx: R::Ctx, coeffs: Vec<R>) -> Self {
        let mut p = Self { coeffs, ctx };
        p.trim();
        p
    }

    pub fn zero(ctx: &R::Ctx) -> Self {
        Self {
            coeffs: Vec::new(),
            ctx: ctx.clone(),
        }
    }

    pub fn one(ctx: &R::Ctx) -> Self {
        Self::constant(R::one(ctx))
    }

    pub fn constant(c: R) -> Self {
        let ctx = c.ctx();
        Self::new(ctx, vec![c])
    }

    /// `coeff * x^n`
    pub fn monomial(coeff: R, n: usize) -> Self {
        let ctx = coeff.ctx();
        let mut coeffs = vec![R::zero(&ctx); n];
        coeffs.push(coeff);
        Self::new(ctx, coeffs)
    }

    /// The variable itself.
    pub fn x(ctx: &R::Ctx) -> Self {
        Self::monomial(R::one(ctx), 1)
    }

    /// Embeds an integer polynomial into this coefficient ring.
    pub fn from_int_poly(ctx: &R::Ctx, p: &IntPoly) -> Self {
        Self::new(
            ctx.clone(),
            p.coeffs().iter().map(|c| R::from_int(ctx, c)).collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| R::zero(&self.ctx))
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(R::is_one)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                format!("{:?}", self.ctx),
                format!("{:?}", other.ctx),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add_ref(s);
        }
        Self::new(self.ctx.clone(), coeffs)
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_ref(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(self.ctx.clone(), coeffs)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = vec![R::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        Self::new(self.ctx.clone(), out)
    }

    pub fn scale(&self, k: &R) -> Self {
        Self::new(
            self.ctx.clone(),
            self.coeffs.iter().map(|c| c.mul_ref(k)).collect(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(&self.ctx); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self {
            coeffs,
            ctx: self.ctx.clone(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at).add_ref(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_ref(&R::from_int(&self.ctx, &BigInt::from(i))))
            .collect();
        Self::new(self.ctx.clone(), coeffs)
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn div_rem_monic(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_ring(g)?;
        if !g.is_monic() {
            return Err(if g.is_zero() {
                Error::ZeroPolynomial
            } else {
                Error::NotMonic
            });
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(&self.ctx); rem.len() - dg];
        for s in (0..quot.len()).rev() {
            let q = rem[s + dg].clone();
            if q.is_zero() {
                continue;
            }
            for (i, gc) in g.coeffs[..dg].iter().enumerate() {
                rem[s + i] = rem[s + i].sub_ref(&q.mul_ref(gc));
            }
            rem[s + dg] = R::zero(&self.ctx);
            quot[s] = q;
        }
        rem.truncate(dg);
        Ok((
            Self::new(self.ctx.clone(), quot),
            Self::new(self.ctx.clone(), rem),
        ))
    }

    /// Remainder on division by a monic polynomial.
    pub fn rem_monic(&self, g: &Self) -> Result<Self> {
        if self.degree() < g.degree() {
            self.check_ring(g)?;
            return Ok(self.clone());
        }
        Ok(self.div_rem_monic(g)?.1)
    }

    /// Returns `q` with `self = q * g`, failing unless the division is exact.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check_ring(g)?;
        let Some(lc) = g.leading_coeff() else {
            return Err(Error::ZeroPolynomial);
        };
        if self.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Err(Error::NonExactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(&self.ctx); rem.len() - dg];
        for s in (0..quot.len()).rev() {
            let top = &rem[s + dg];
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(lc).ok_or(Error::NonExactDivision)?;
            for (i, gc) in g.coeffs[..dg].iter().enumerate() {
                rem[s + i] = rem[s + i].sub_ref(&q.mul_ref(gc));
            }
            rem[s + dg] = R::zero(&self.ctx);
            quot[s] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::new(self.ctx.clone(), quot))
    }

    /// Pseudo-remainder: the remainder of `lc(g)^(deg f - deg g + 1) * f` by `g`.
    pub fn pseudo_rem(&self, g: &Self) -> Result<Self> {
        self.check_ring(g)?;
        let Some(lc) = g.leading_coeff() else {
            return Err(Error::ZeroPolynomial);
        };
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok(self.clone());
        }
        let mut rem = self.coeffs.clone();
        let steps = rem.len() - dg;
        let mut performed = 0u64;
        for s in (0..steps).rev() {
            let top = rem[s + dg].clone();
            // rem <- lc * rem - top * x^s * g
            for c in rem[..s + dg].iter_mut() {
                *c = c.mul_ref(lc);
            }
            for (i, gc) in g.coeffs[..dg].iter().enumerate() {
                rem[s + i] = rem[s + i].sub_ref(&top.mul_ref(gc));
            }
            rem.truncate(s + dg);
            performed += 1;
        }
        debug_assert_eq!(performed as usize, steps);
        Ok(Self::new(self.ctx.clone(), rem))
    }

    pub fn to_human(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.display();
            let (negative, body) = if c.is_atomic() {
                match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text),
                }
            } else {
                (false, format!("({text})"))
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = body == "1";
            match i {
                0 => out.push_str(&body),
                _ => {
                    if !unit {
                        out.push_str(&body);
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new((), coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl<R: Ring> Ring for Poly<R> {
    type Ctx = R::Ctx;

    fn ctx(&self) -> Self::Ctx {
        self.ctx.clone()
    }

    fn zero(ctx: &Self::Ctx) -> Self {
        Poly::zero(ctx)
    }

    fn one(ctx: &Self::Ctx) -> Self {
        Poly::one(ctx)
    }

    fn from_int(ctx: &Self::Ctx, value: &BigInt) -> Self {
        Poly::constant(R::from_int(ctx, value))
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }

    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
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
        self.exact_div(other).ok()
    }

    fn display(&self) -> String {
        self.to_human("x")
    }

    fn is_atomic(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

// Operator forms panic on a ring mismatch; the `try_*` methods report it.
impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Poly<R> {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Poly<R> {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Poly<R> {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(R::neg_ref).collect(),
            ctx: self.ctx.clone(),
        }
    }
}
