//! Misiurewicz polynomials `G_{d,m,n}^zeta`, whose roots are the parameters
//! `c` with strictly preperiodic critical orbit of tail `m` and period `n`
//! satisfying `a_{m+n-1} = zeta a_{m-1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::{with_zeta, OrbitCtx, Zeta};
use crate::polyring::{divisors, mobius, IntPoly, Poly, Ring, SpecPoly};

/// Parameters `(d, m, n, e)` of one Misiurewicz polynomial, with
/// `zeta = zeta_d^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MisSpec {
    pub d: u64,
    pub m: usize,
    pub n: usize,
    pub zeta_exp: u64,
}

impl MisSpec {
    pub fn new(d: u64, m: usize, n: usize, zeta_exp: u64) -> Result<Self> {
        let spec = Self { d, m, n, zeta_exp };
        spec.validate()?;
        Ok(spec)
    }

    /// The `d = 2` family, where `zeta = -1`.
    pub fn quadratic(m: usize, n: usize) -> Self {
        Self { d: 2, m, n, zeta_exp: 1 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 2 || self.m < 2 || self.n < 1 {
            return Err(Error::InvalidParameter(format!(
                "need d >= 2, m >= 2, n >= 1; got {self}"
            )));
        }
        if self.zeta_exp == 0 || self.zeta_exp >= self.d {
            return Err(Error::InvalidParameter(format!(
                "zeta exponent must lie in 1..{}; got {self}",
                self.d
            )));
        }
        Ok(())
    }

    /// The same spec with period `n` replaced.
    pub fn with_n(&self, n: usize) -> Self {
        Self { n, ..*self }
    }
}

impl fmt::Display for MisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, m={}, n={}, e={})", self.d, self.m, self.n, self.zeta_exp)
    }
}

fn g_in<R: Ring>(ctx: &OrbitCtx, spec: &MisSpec, zeta: &R) -> Result<Poly<R>> {
    let rctx = zeta.ctx();
    let (m, n) = (spec.m, spec.n);
    let tail = ctx.a_in::<R>(&rctx, m - 1).scale(zeta);
    let mut num = Poly::<R>::one(&rctx);
    let mut den = Poly::<R>::one(&rctx);
    for k in divisors(n as u64) {
        let k = k as usize;
        let factor = &ctx.a_in::<R>(&rctx, m + k - 1) - &tail;
        match mobius((n / k) as u64) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    if (m - 1) % n == 0 {
        for k in divisors(n as u64) {
            let k = k as usize;
            let a_k = ctx.a_in::<R>(&rctx, k);
            match mobius((n / k) as u64) {
                1 => den = &den * &a_k,
                -1 => num = &num * &a_k,
                _ => {}
            }
        }
    }
    num.exact_div(&den)
}

/// `G_{d,m,n}^zeta`: the Möbius product over `k | n` of
/// `(a_{m+k-1} - zeta a_{m-1})^mu(n/k)`, with the extra factor
/// `prod a_k^(-mu(n/k))` when `n | m - 1`, formed as one exact quotient.
pub fn g_poly(ctx: &OrbitCtx, spec: &MisSpec) -> Result<SpecPoly> {
    spec.validate()?;
    if ctx.d() != spec.d {
        return Err(Error::InvalidParameter(format!(
            "orbit context has d={}, spec has d={}",
            ctx.d(),
            spec.d
        )));
    }
    let zeta = ctx.zeta(spec.zeta_exp)?;
    Ok(with_zeta!(zeta, |z| g_in(ctx, spec, z)?))
}

/// Degree of `G`, from the Möbius sum of the factor degrees.
pub fn g_degree(spec: &MisSpec) -> u64 {
    let (d, m, n) = (spec.d, spec.m as u32, spec.n as u64);
    let mut deg: i128 = 0;
    let mut correction: i128 = 0;
    for k in divisors(n) {
        let mu = i128::from(mobius(n / k));
        deg += mu * i128::from(d).pow(m + k as u32 - 2);
        correction += mu * i128::from(d).pow(k as u32 - 1);
    }
    if u64::from(m - 1) % n == 0 {
        deg -= correction;
    }
    u64::try_from(deg).expect("degree is nonnegative")
}

/// `H_m = a_m - a_{m-1} + 1` for `d = 2`.
pub fn h_poly(ctx: &OrbitCtx, m: usize) -> Result<IntPoly> {
    if ctx.d() != 2 || m < 2 {
        return Err(Error::InvalidParameter("H_m needs d = 2 and m >= 2".into()));
    }
    Ok(&(&*ctx.a(m) - &ctx.a(m - 1)) + &IntPoly::one(&()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_quadratic_examples() {
        let ctx = OrbitCtx::new(2).unwrap();
        assert_eq!(g_poly(&ctx, &MisSpec::quadratic(2, 1)).unwrap(), SpecPoly::Int(p(&[2, 1])));
        assert_eq!(g_poly(&ctx, &MisSpec::quadratic(2, 2)).unwrap(), SpecPoly::Int(p(&[1, 0, 1])));
        let g32 = g_poly(&ctx, &MisSpec::quadratic(3, 2)).unwrap();
        assert!(g32.is_monic());
        assert_eq!(g32.degree(), Some(3));
    }

    #[test]
    fn degree_formula_examples() {
        assert_eq!(g_degree(&MisSpec::quadratic(4, 1)), 7);
        assert_eq!(g_degree(&MisSpec::quadratic(5, 2)), 15);
        assert_eq!(g_degree(&MisSpec::quadratic(2, 1)), 1);
    }

    #[test]
    fn degree_formula_matches_construction() {
        let ctx = OrbitCtx::new(2).unwrap();
        for m in 2..=5 {
            for n in 1..=4 {
                let spec = MisSpec::quadratic(m, n);
                let g = g_poly(&ctx, &spec).unwrap();
                assert_eq!(g.degree(), Some(g_degree(&spec) as usize), "{spec}");
                assert!(g.is_monic());
            }
        }
        let cubic = OrbitCtx::new(3).unwrap();
        for m in 2..=3 {
            for n in 1..=3 {
                for e in 1..3 {
                    let spec = MisSpec::new(3, m, n, e).unwrap();
                    let g = g_poly(&cubic, &spec).unwrap();
                    assert_eq!(g.degree(), Some(g_degree(&spec) as usize), "{spec}");
                    assert!(g.is_monic());
                }
            }
        }
    }

    #[test]
    fn root_has_the_right_orbit_type() {
        // c = -2: 0 -> -2 -> 2 -> 2, tail 2 and period 1
        let ctx = OrbitCtx::new(2).unwrap();
        let g = g_poly(&ctx, &MisSpec::quadratic(2, 1)).unwrap().into_int().unwrap();
        let c = BigInt::from(-2);
        assert_eq!(g.eval(&c), BigInt::from(0));
        let orbit: Vec<BigInt> = (1..=4).map(|i| ctx.a(i).eval(&c)).collect();
        assert_eq!(orbit, [-2, 2, 2, 2].map(BigInt::from));
    }

    #[test]
    fn h_identity() {
        let ctx = OrbitCtx::new(2).unwrap();
        for m in 2..=8 {
            let h = h_poly(&ctx, m).unwrap();
            let g = g_poly(&ctx, &MisSpec::quadratic(m, 2)).unwrap().into_int().unwrap();
            if m % 2 == 1 {
                assert_eq!(&g * &p(&[1, 1]), h, "m={m}");
            } else {
                assert_eq!(g, h, "m={m}");
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(MisSpec::new(2, 1, 1, 1).is_err());
        assert!(MisSpec::new(3, 2, 1, 3).is_err());
        assert!(MisSpec::new(3, 2, 0, 1).is_err());
    }
}
