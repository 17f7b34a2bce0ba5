//! Critical-orbit polynomials `a_i(c)` of `z^d + c` and the quantities
//! built from them.
//!
//! `a_1 = c` and `a_{i+1} = a_i^d + c`. A root of unity `zeta != 1` is
//! selected by its exponent `e` in `zeta = zeta_d^e`, `1 <= e < d`. For
//! `d = 2` that is always `zeta = -1` and everything stays over `Z`.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{CycScalar, CyclotomicRing, IntPoly, Poly, Ring, SpecPoly};

/// Memoising source of the orbit polynomials for one exponent `d`.
///
/// Safe to share between threads: lookups take a read lock and new terms
/// are appended under the write lock.
#[derive(Debug)]
pub struct OrbitCtx {
    d: u64,
    ring: Option<CyclotomicRing>,
    memo: RwLock<Vec<Arc<IntPoly>>>,
}

/// `zeta` in the coefficient ring that matches `d`.
#[derive(Clone, Debug)]
pub(crate) enum Zeta {
    Int(BigInt),
    Cyc(CycScalar),
}

/// Runs the same generic body over whichever coefficient ring `zeta` lives in.
macro_rules! with_zeta {
    ($zeta:expr, |$z:ident| $body:expr) => {
        match $zeta {
            Zeta::Int(ref $z) => SpecPoly::Int($body),
            Zeta::Cyc(ref $z) => SpecPoly::Cyc($body),
        }
    };
}
pub(crate) use with_zeta;

impl OrbitCtx {
    pub fn new(d: u64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!("d must be at least 2, got {d}")));
        }
        let ring = (d > 2).then(|| CyclotomicRing::new(d)).transpose()?;
        Ok(Self {
            d,
            ring,
            memo: RwLock::new(vec![Arc::new(IntPoly::x(&()))]),
        })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `Z[zeta_d]`, or `None` when `d = 2`.
    pub fn cyclotomic_ring(&self) -> Option<&CyclotomicRing> {
        self.ring.as_ref()
    }

    /// The orbit polynomial `a_i`, `i >= 1`.
    pub fn a(&self, i: usize) -> Arc<IntPoly> {
        assert!(i >= 1, "orbit index starts at 1");
        if let Some(p) = self.memo.read().unwrap_or_else(|e| e.into_inner()).get(i - 1) {
            return Arc::clone(p);
        }
        let mut memo = self.memo.write().unwrap_or_else(|e| e.into_inner());
        let c = IntPoly::x(&());
        while memo.len() < i {
            let last = memo.last().expect("memo starts with a_1");
            let next = &last.pow(self.d) + &c;
            memo.push(Arc::new(next));
        }
        Arc::clone(&memo[i - 1])
    }

    pub(crate) fn zeta(&self, zeta_exp: u64) -> Result<Zeta> {
        if zeta_exp == 0 || zeta_exp >= self.d {
            return Err(Error::InvalidParameter(format!(
                "zeta exponent must lie in 1..{} (zeta != 1), got {zeta_exp}",
                self.d
            )));
        }
        Ok(match &self.ring {
            None => Zeta::Int(BigInt::from(-1)),
            Some(ring) => Zeta::Cyc(ring.zeta_pow(zeta_exp)),
        })
    }

    pub(crate) fn a_in<R: Ring>(&self, ctx: &R::Ctx, i: usize) -> Poly<R> {
        Poly::from_int_poly(ctx, &self.a(i))
    }

    fn check_ml(m: usize, l: usize) -> Result<()> {
        if m < 2 || l < 1 {
            return Err(Error::InvalidParameter(format!(
                "need m >= 2 and l >= 1, got m={m}, l={l}"
            )));
        }
        Ok(())
    }

    fn big_b_in<R: Ring>(&self, m: usize, l: usize, j: usize, zeta: &R) -> Poly<R> {
        let ctx = zeta.ctx();
        let head = self.a_in::<R>(&ctx, m + l * j - 1);
        let tail = self.a_in::<R>(&ctx, m - 1).scale(zeta);
        &head - &tail
    }

    /// `B_j = a_{m + l j - 1} - zeta a_{m-1}`.
    pub fn big_b(&self, m: usize, l: usize, j: usize, zeta_exp: u64) -> Result<SpecPoly> {
        Self::check_ml(m, l)?;
        if j < 1 {
            return Err(Error::InvalidParameter("j must be at least 1".into()));
        }
        let zeta = self.zeta(zeta_exp)?;
        Ok(with_zeta!(zeta, |z| self.big_b_in(m, l, j, z)))
    }

    /// `b_j = B_j / B_1`, an exact quotient.
    pub fn small_b(&self, m: usize, l: usize, j: usize, zeta_exp: u64) -> Result<SpecPoly> {
        Self::check_ml(m, l)?;
        if j < 1 {
            return Err(Error::InvalidParameter("j must be at least 1".into()));
        }
        let zeta = self.zeta(zeta_exp)?;
        Ok(match zeta {
            Zeta::Int(ref z) => SpecPoly::Int(
                self.big_b_in(m, l, j, z)
                    .exact_div(&self.big_b_in(m, l, 1, z))?,
            ),
            Zeta::Cyc(ref z) => SpecPoly::Cyc(
                self.big_b_in(m, l, j, z)
                    .exact_div(&self.big_b_in(m, l, 1, z))?,
            ),
        })
    }

    /// `d^n (a_start * ... * a_{start+n-1})^(d-1)`.
    fn scaled_orbit_product(&self, start: usize, n: usize) -> IntPoly {
        let mut prod = IntPoly::one(&());
        for i in 0..n {
            prod = &prod * &self.a(start + i);
        }
        prod.pow(self.d - 1)
            .scale(&BigInt::from(self.d).pow(n as u32))
    }

    /// `C_{d,m,l} = d^l (a_{m-1} ... a_{m+l-2})^(d-1)`.
    pub fn c_const(&self, m: usize, l: usize) -> Result<IntPoly> {
        Self::check_ml(m, l)?;
        Ok(self.scaled_orbit_product(m - 1, l))
    }

    /// The multiplier written over the indices `m-1 .. m+n-2`:
    /// `d^n (a_{m-1} ... a_{m+n-2})^(d-1)`.
    ///
    /// On a root of `G` this differs from the cycle multiplier by the factor
    /// `zeta^(d-1)`; [`OrbitCtx::cycle_multiplier_poly`] is the representative
    /// used for multiplier polynomials.
    pub fn lambda_poly(&self, m: usize, n: usize) -> Result<IntPoly> {
        Self::check_ml(m, n)?;
        Ok(self.scaled_orbit_product(m - 1, n))
    }

    /// `d^n (a_m ... a_{m+n-1})^(d-1)`, the derivative of `f^n` along the
    /// cycle `a_m, ..., a_{m+n-1}`.
    pub fn cycle_multiplier_poly(&self, m: usize, n: usize) -> Result<IntPoly> {
        Self::check_ml(m, n)?;
        Ok(self.scaled_orbit_product(m, n))
    }

    /// `b_1 .. b_{jmax}` reduced modulo `B_1`, together with `B_1` itself.
    ///
    /// Works modulo `B_1^2`: since `B_1 | B_j`, the remainder of `B_j` by
    /// `B_1^2` is `(b_j mod B_1) * B_1`.
    fn b_residues<R: Ring>(
        &self,
        m: usize,
        l: usize,
        jmax: usize,
        zeta: &R,
    ) -> Result<(Poly<R>, Vec<Poly<R>>)> {
        let ctx = zeta.ctx();
        let b1 = self.big_b_in(m, l, 1, zeta);
        let b1_sq = &b1 * &b1;
        let last = m + l * jmax - 1;
        let c = Poly::<R>::x(&ctx);
        let mut reduced: Vec<Poly<R>> = Vec::with_capacity(last);
        reduced.push(c.rem_monic(&b1_sq)?);
        for i in 1..last {
            let next = &reduced[i - 1].pow(self.d) + &c;
            reduced.push(next.rem_monic(&b1_sq)?);
        }
        let tail = self.a_in::<R>(&ctx, m - 1).scale(zeta);
        let mut out = Vec::with_capacity(jmax);
        for j in 1..=jmax {
            let big = &reduced[m + l * j - 2] - &tail;
            let big = big.rem_monic(&b1_sq)?;
            out.push(big.exact_div(&b1)?);
        }
        Ok((b1, out))
    }

    fn recurrence_in<R: Ring>(&self, m: usize, l: usize, jmax: usize, zeta: &R) -> Result<bool> {
        let ctx = zeta.ctx();
        let (b1, bs) = self.b_residues(m, l, jmax + 1, zeta)?;
        let zeta_c = self
            .c_const(m, l)
            .map(|c| Poly::from_int_poly(&ctx, &c))?
            .scale(&zeta.pow(self.d - 1))
            .rem_monic(&b1)?;
        let one = Poly::<R>::one(&ctx);
        for j in 0..jmax {
            let residual = &(&bs[j + 1] - &(&zeta_c * &bs[j])) - &one;
            if !residual.rem_monic(&b1)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn geometric_in<R: Ring>(&self, m: usize, l: usize, jmax: usize, zeta: &R) -> Result<bool> {
        let ctx = zeta.ctx();
        let (b1, bs) = self.b_residues(m, l, jmax, zeta)?;
        let zeta_c = self
            .c_const(m, l)
            .map(|c| Poly::from_int_poly(&ctx, &c))?
            .scale(&zeta.pow(self.d - 1))
            .rem_monic(&b1)?;
        let mut partial = Poly::<R>::one(&ctx);
        let mut power = Poly::<R>::one(&ctx);
        for b in &bs {
            if !(b - &partial).rem_monic(&b1)?.is_zero() {
                return Ok(false);
            }
            power = (&power * &zeta_c).rem_monic(&b1)?;
            partial = &partial + &power;
        }
        Ok(true)
    }

    /// Checks `b_{j+1} = zeta^(d-1) C b_j + 1` modulo `B_1` for `1 <= j <= jmax`.
    pub fn recurrence_check(&self, m: usize, l: usize, jmax: usize, zeta_exp: u64) -> Result<bool> {
        Self::check_ml(m, l)?;
        match self.zeta(zeta_exp)? {
            Zeta::Int(z) => self.recurrence_in(m, l, jmax, &z),
            Zeta::Cyc(z) => self.recurrence_in(m, l, jmax, &z),
        }
    }

    /// Checks the closed form `b_j = 1 + C + ... + C^(j-1)` modulo `B_1`,
    /// with `C = zeta^(d-1) C_{d,m,l}`, for `1 <= j <= jmax`.
    pub fn geometric_check(&self, m: usize, l: usize, jmax: usize, zeta_exp: u64) -> Result<bool> {
        Self::check_ml(m, l)?;
        match self.zeta(zeta_exp)? {
            Zeta::Int(z) => self.geometric_in(m, l, jmax, &z),
            Zeta::Cyc(z) => self.geometric_in(m, l, jmax, &z),
        }
    }

    /// Same congruence as [`OrbitCtx::recurrence_check`], but with every
    /// `b_j` computed exactly as a full quotient. Only feasible for small
    /// degrees.
    pub fn recurrence_check_exact(
        &self,
        m: usize,
        l: usize,
        jmax: usize,
        zeta_exp: u64,
    ) -> Result<bool> {
        Self::check_ml(m, l)?;
        let zeta = self.zeta(zeta_exp)?;
        fn run<R: Ring>(ctx: &OrbitCtx, m: usize, l: usize, jmax: usize, zeta: &R) -> Result<bool> {
            let rctx = zeta.ctx();
            let b1 = ctx.big_b_in(m, l, 1, zeta);
            let cz = Poly::from_int_poly(&rctx, &ctx.c_const(m, l)?).scale(&zeta.pow(ctx.d - 1));
            let mut prev = Poly::<R>::one(&rctx);
            for j in 1..=jmax {
                let next = ctx.big_b_in(m, l, j + 1, zeta).exact_div(&b1)?;
                let residual = &(&next - &(&cz * &prev)) - &Poly::one(&rctx);
                if !residual.rem_monic(&b1)?.is_zero() {
                    return Ok(false);
                }
                prev = next;
            }
            Ok(true)
        }
        match zeta {
            Zeta::Int(z) => run(self, m, l, jmax, &z),
            Zeta::Cyc(z) => run(self, m, l, jmax, &z),
        }
    }
}
