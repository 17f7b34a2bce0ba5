//! Cyclotomic polynomials and the ring of cyclotomic integers `Z[zeta_d]`.
//!
//! An element of `Z[zeta_d]` is stored as its residue modulo `Phi_d`, an
//! integer polynomial of degree below `phi(d)` in the generator `z`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use super::linalg::det_bareiss;
use super::numtheory::{divisors, mobius, totient};
use super::poly::{IntPoly, Poly};
use super::resultant::resultant;
use super::ring::Ring;
use crate::error::{Error, Result};

/// The cyclotomic polynomial `Phi_l`, built as a single exact quotient of
/// `prod (x^k - 1)^mu(l/k)`.
pub fn cyclotomic(l: u64) -> IntPoly {
    assert!(l >= 1, "cyclotomic index must be positive");
    let mut num = IntPoly::one(&());
    let mut den = IntPoly::one(&());
    for k in divisors(l) {
        let factor = &IntPoly::monomial(BigInt::from(1), k as usize) - &IntPoly::one(&());
        match mobius(l / k) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    num.exact_div(&den)
        .expect("cyclotomic Mobius quotient is always exact")
}

#[derive(Debug)]
struct RingData {
    d: u64,
    phi: IntPoly,
}

/// The ring `Z[zeta_d]`; cheap to clone and compared by `d`.
#[derive(Clone)]
pub struct CyclotomicRing(Arc<RingData>);

impl CyclotomicRing {
    pub fn new(d: u64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!("cyclotomic ring needs d >= 2, got {d}")));
        }
        Ok(Self(Arc::new(RingData {
            d,
            phi: cyclotomic(d),
        })))
    }

    pub fn d(&self) -> u64 {
        self.0.d
    }

    /// `phi(d)`, the rank of the ring over `Z`.
    pub fn rank(&self) -> usize {
        totient(self.0.d) as usize
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.0.phi
    }

    /// `zeta^e` for the fixed primitive root `zeta = z`.
    pub fn zeta_pow(&self, e: u64) -> CycScalar {
        let e = (e % self.0.d) as usize;
        CycScalar::from_residue(self, IntPoly::monomial(BigInt::from(1), e))
    }
}

impl PartialEq for CyclotomicRing {
    fn eq(&self, other: &Self) -> bool {
        self.0.d == other.0.d
    }
}

impl fmt::Debug for CyclotomicRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[zeta_{}]", self.0.d)
    }
}

/// An element of `Z[zeta_d]`.
#[derive(Clone, PartialEq)]
pub struct CycScalar {
    ring: CyclotomicRing,
    residue: IntPoly,
}

/// Polynomial over `Z[zeta_d]`.
pub type CycPoly = Poly<CycScalar>;

impl CycScalar {
    /// Reduces `residue` modulo `Phi_d`.
    pub fn from_residue(ring: &CyclotomicRing, residue: IntPoly) -> Self {
        let residue = residue
            .rem_monic(ring.modulus())
            .expect("cyclotomic polynomials are monic");
        Self {
            ring: ring.clone(),
            residue,
        }
    }

    pub fn ring(&self) -> &CyclotomicRing {
        &self.ring
    }

    pub fn residue(&self) -> &IntPoly {
        &self.residue
    }

    /// The rational integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.residue.degree() {
            None => Some(BigInt::from(0)),
            Some(0) => Some(self.residue.coeff(0)),
            _ => None,
        }
    }

    /// Absolute norm `N(alpha) = Res(Phi_d, alpha)`.
    pub fn norm(&self) -> BigInt {
        if self.residue.is_zero() {
            return BigInt::from(0);
        }
        resultant(self.ring.modulus(), &self.residue).expect("both operands are nonzero")
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs() == BigInt::from(1)
    }

    /// Matrix of multiplication by `self` on the basis `1, z, ..., z^(phi-1)`;
    /// column `j` holds the coordinates of `self * z^j`.
    fn mul_matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.ring.rank();
        let mut m = vec![vec![BigInt::from(0); n]; n];
        for j in 0..n {
            let col = self
                .residue
                .shift(j)
                .rem_monic(self.ring.modulus())
                .expect("monic modulus");
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = col.coeff(i);
            }
        }
        m
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Ring for CycScalar {
    type Ctx = CyclotomicRing;

    fn ctx(&self) -> CyclotomicRing {
        self.ring.clone()
    }

    fn zero(ctx: &CyclotomicRing) -> Self {
        Self {
            ring: ctx.clone(),
            residue: IntPoly::zero(&()),
        }
    }

    fn one(ctx: &CyclotomicRing) -> Self {
        Self::from_int(ctx, &BigInt::from(1))
    }

    fn from_int(ctx: &CyclotomicRing, value: &BigInt) -> Self {
        Self {
            ring: ctx.clone(),
            residue: IntPoly::constant(value.clone()),
        }
    }

    fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    fn is_one(&self) -> bool {
        self.residue.is_one()
    }

    fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "cyclotomic ring mismatch");
        Self {
            ring: self.ring.clone(),
            residue: &self.residue + &other.residue,
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "cyclotomic ring mismatch");
        Self {
            ring: self.ring.clone(),
            residue: &self.residue - &other.residue,
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "cyclotomic ring mismatch");
        if self.residue.degree() == Some(0) {
            return Self {
                ring: self.ring.clone(),
                residue: other.residue.scale(&self.residue.coeff(0)),
            };
        }
        if other.residue.degree() == Some(0) {
            return Self {
                ring: self.ring.clone(),
                residue: self.residue.scale(&other.residue.coeff(0)),
            };
        }
        Self::from_residue(&self.ring, &self.residue * &other.residue)
    }

    fn neg_ref(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            residue: -&self.residue,
        }
    }

    /// Solves `other * q = self` by Cramer's rule on the multiplication
    /// matrix of `other`, then confirms the product.
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() || self.ring != other.ring {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some(k) = other.as_integer() {
            let coeffs = self
                .residue
                .coeffs()
                .iter()
                .map(|c| c.div_exact(&k))
                .collect::<Option<Vec<_>>>()?;
            return Some(Self {
                ring: self.ring.clone(),
                residue: IntPoly::new((), coeffs),
            });
        }
        let n = self.ring.rank();
        let m = other.mul_matrix();
        let det = det_bareiss(&(), m.clone()).ok()?;
        let rhs: Vec<BigInt> = (0..n).map(|i| self.residue.coeff(i)).collect();
        let mut coords = Vec::with_capacity(n);
        for j in 0..n {
            let mut mj = m.clone();
            for (i, row) in mj.iter_mut().enumerate() {
                row[j] = rhs[i].clone();
            }
            let dj = det_bareiss(&(), mj).ok()?;
            coords.push(dj.div_exact(&det)?);
        }
        let q = Self {
            ring: self.ring.clone(),
            residue: IntPoly::new((), coords),
        };
        (q.mul_ref(other) == *self).then_some(q)
    }

    fn display(&self) -> String {
        self.residue.to_human("z")
    }

    fn is_atomic(&self) -> bool {
        self.residue.degree().unwrap_or(0) == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(7), IntPoly::from_i64s(&[1; 7]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_over_divisors_is_x_pow_minus_one() {
        for l in 1..=40u64 {
            let prod = divisors(l)
                .into_iter()
                .fold(IntPoly::one(&()), |acc, k| &acc * &cyclotomic(k));
            let mut want = vec![0i64; l as usize + 1];
            want[0] = -1;
            want[l as usize] = 1;
            assert_eq!(prod, IntPoly::from_i64s(&want), "l={l}");
            assert!(cyclotomic(l).is_monic());
            assert_eq!(cyclotomic(l).degree(), Some(totient(l) as usize));
        }
    }

    #[test]
    fn roots_of_unity_relations() {
        for d in [3u64, 4, 5, 6] {
            let ring = CyclotomicRing::new(d).unwrap();
            let z = ring.zeta_pow(1);
            assert!(z.pow(d).is_one());
            let mut sum = CycScalar::zero(&ring);
            for e in 0..d {
                sum = sum.add_ref(&z.pow(e));
            }
            assert!(sum.is_zero(), "d={d}");
        }
    }

    #[test]
    fn norms_and_units() {
        let ring = CyclotomicRing::new(4).unwrap();
        // 2 + i has norm 5
        let a = CycScalar::from_residue(&ring, IntPoly::from_i64s(&[2, 1]));
        assert_eq!(a.norm(), BigInt::from(5));
        assert!(!a.is_unit());
        assert!(ring.zeta_pow(1).is_unit());
        let ring3 = CyclotomicRing::new(3).unwrap();
        // 1 - zeta_3 has norm 3
        let b = CycScalar::from_residue(&ring3, IntPoly::from_i64s(&[1, -1]));
        assert_eq!(b.norm(), BigInt::from(3));
    }

    #[test]
    fn exact_division_in_gaussian_integers() {
        let ring = CyclotomicRing::new(4).unwrap();
        let a = CycScalar::from_residue(&ring, IntPoly::from_i64s(&[2, 1]));
        let b = CycScalar::from_residue(&ring, IntPoly::from_i64s(&[3, -5]));
        let ab = a.mul_ref(&b);
        assert_eq!(ab.div_exact(&a).unwrap(), b);
        assert_eq!(ab.div_exact(&b).unwrap(), a);
        let two = CycScalar::from_int(&ring, &BigInt::from(2));
        assert!(a.div_exact(&two).is_none());
        // 2 = -i (1+i)^2
        let one_plus_i = CycScalar::from_residue(&ring, IntPoly::from_i64s(&[1, 1]));
        assert!(two.div_exact(&one_plus_i).is_some());
    }
}
