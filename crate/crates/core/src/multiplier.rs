//! Multiplier polynomials `P_{d,m,n}^zeta(x) = prod (x - lambda(c_j))` over
//! the roots `c_j` of `G_{d,m,n}^zeta`, plus closed forms for `d = 2`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::misiurewicz::{g_poly, h_poly, MisSpec};
use crate::orbit::OrbitCtx;
use crate::polyring::{
    affine_rescale, charpoly_by_resultant, charpoly_mod, charpoly_mod_generic, CycPoly, IntPoly,
    SpecPoly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Charpoly,
    ClosedFormN1,
    ClosedFormN2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierPoly {
    pub spec: MisSpec,
    pub poly: SpecPoly,
    pub method: Method,
}

/// The multiplier polynomial from an already-built `G`.
///
/// The multiplier is represented by `d^n (a_m ... a_{m+n-1})^(d-1)`, the
/// derivative of `f^n` along the cycle, reduced modulo `G`.
pub fn p_from_g(ctx: &OrbitCtx, spec: &MisSpec, g: &SpecPoly) -> Result<MultiplierPoly> {
    let lambda = ctx.cycle_multiplier_poly(spec.m, spec.n)?;
    let poly = match g {
        SpecPoly::Int(g) => SpecPoly::Int(charpoly_mod(g, &lambda)?),
        SpecPoly::Cyc(g) => {
            let lambda = CycPoly::from_int_poly(g.ring(), &lambda);
            SpecPoly::Cyc(charpoly_mod_generic(g, &lambda)?)
        }
    };
    Ok(MultiplierPoly {
        spec: *spec,
        poly,
        method: Method::Charpoly,
    })
}

/// `P_{d,m,n}^zeta` via the characteristic polynomial of multiplication by
/// the multiplier in `R[c] / (G)`.
pub fn p_poly(ctx: &OrbitCtx, spec: &MisSpec) -> Result<MultiplierPoly> {
    let g = g_poly(ctx, spec)?;
    p_from_g(ctx, spec, &g)
}

/// Independent route to `P`: `Res_c(G(c), x - lambda(c))`.
pub fn p_by_resultant(ctx: &OrbitCtx, spec: &MisSpec) -> Result<SpecPoly> {
    let lambda = ctx.cycle_multiplier_poly(spec.m, spec.n)?;
    Ok(match g_poly(ctx, spec)? {
        SpecPoly::Int(g) => SpecPoly::Int(charpoly_by_resultant(&g, &lambda)?),
        SpecPoly::Cyc(g) => {
            let lambda = CycPoly::from_int_poly(g.ring(), &lambda);
            SpecPoly::Cyc(charpoly_by_resultant(&g, &lambda)?)
        }
    })
}

fn require_quadratic(ctx: &OrbitCtx, m: usize, min_m: usize) -> Result<()> {
    if ctx.d() != 2 {
        return Err(Error::InvalidParameter("closed forms exist only for d = 2".into()));
    }
    if m < min_m {
        return Err(Error::InvalidParameter(format!("need m >= {min_m}, got {m}")));
    }
    Ok(())
}

/// `P_{m,1}` in closed form: `x - 4` for `m = 2`, otherwise
/// `2^(2^(m-1)) x^-1 a_{m-1}((2x - x^2)/4) + 2^(2^(m-1) - 1)`.
pub fn p_closed_n1(ctx: &OrbitCtx, m: usize) -> Result<IntPoly> {
    require_quadratic(ctx, m, 2)?;
    if m == 2 {
        return Ok(IntPoly::from_i64s(&[-4, 1]));
    }
    let a = ctx.a(m - 1);
    let deg = a.degree().expect("orbit polynomials are nonzero");
    // 4^deg a(y) with y = (2x - x^2)/4 becomes sum A_i 4^(deg-i) (2x - x^2)^i
    let y_num = IntPoly::from_i64s(&[0, 2, -1]);
    let mut power = IntPoly::one(&());
    let mut acc = IntPoly::zero(&());
    let four = BigInt::from(4);
    for i in 0..=deg {
        let coeff = a.coeff(i);
        if coeff != BigInt::from(0) {
            acc = &acc + &power.scale(&(coeff * four.pow((deg - i) as u32)));
        }
        if i < deg {
            power = &power * &y_num;
        }
    }
    let quotient = acc.exact_div(&IntPoly::x(&()))?;
    let constant = BigInt::from(1) << ((1usize << (m - 1)) - 1);
    Ok(&quotient + &IntPoly::constant(constant))
}

/// `P_{m,2} = 4^k G_{m,2}((x - 4)/4)` with `k = deg G_{m,2}`.
pub fn p_closed_n2(ctx: &OrbitCtx, m: usize) -> Result<IntPoly> {
    require_quadratic(ctx, m, 2)?;
    let g = g_poly(ctx, &MisSpec::quadratic(m, 2))?.into_int()?;
    Ok(affine_rescale(&g, 4))
}

/// `R_m = 4^(2^(m-1)) H_m((x - 4)/4)`, equal to `P_{m,2}` for even `m` and
/// to `x P_{m,2}` for odd `m`.
pub fn r_poly(ctx: &OrbitCtx, m: usize) -> Result<IntPoly> {
    require_quadratic(ctx, m, 2)?;
    Ok(affine_rescale(&h_poly(ctx, m)?, 4))
}

/// The coefficients `E_0, ..., E_{2^(m-1) - 1}` of `R_m` below its leading
/// term, computed from the expansion of `H_m` rather than by rescaling.
pub fn e_coeffs(ctx: &OrbitCtx, m: usize) -> Result<Vec<BigInt>> {
    require_quadratic(ctx, m, 2)?;
    let h = h_poly(ctx, m)?;
    let top = 1usize << (m - 1);
    let four = BigInt::from(4);
    let mut out = Vec::with_capacity(top);
    for t in 0..top {
        let mut sum = BigInt::from(0);
        let mut binom = BigInt::from(1); // C(i, t) starting at i = t
        for i in t..=top {
            if i > t {
                binom = binom * i / (i - t);
            }
            let term = h.coeff(i) * &binom;
            if (i - t) % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        out.push(sum * four.pow((top - t) as u32));
    }
    Ok(out)
}

/// The closed form that applies to `spec`, if any.
pub fn p_closed(ctx: &OrbitCtx, spec: &MisSpec) -> Result<Option<MultiplierPoly>> {
    if spec.d != 2 {
        return Ok(None);
    }
    let (poly, method) = match spec.n {
        1 => (p_closed_n1(ctx, spec.m)?, Method::ClosedFormN1),
        2 => (p_closed_n2(ctx, spec.m)?, Method::ClosedFormN2),
        _ => return Ok(None),
    };
    Ok(Some(MultiplierPoly {
        spec: *spec,
        poly: SpecPoly::Int(poly),
        method,
    }))
}
