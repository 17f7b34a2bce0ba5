//! Resultants of univariate polynomials over an integral domain.
//!
//! Convention: `Res(f, g) = lc(f)^deg(g) * prod g(alpha)` over the roots
//! `alpha` of `f`, so `Res(f, g) = (-1)^(deg f * deg g) Res(g, f)` and a
//! constant `g` gives `g^deg(f)`.

use super::linalg::det_bareiss;
use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Resultant by the subresultant polynomial remainder sequence.
pub fn resultant<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<R> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.try_add(g)?;
    let ctx = f.ring().clone();

    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = false;
    if a.degree() < b.degree() {
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign = !sign;
        }
        std::mem::swap(&mut a, &mut b);
    }

    let finish = |value: R, sign: bool| if sign { value.neg_ref() } else { value };

    if b.degree() == Some(0) {
        let value = b.coeff(0).pow(a.degree().unwrap() as u64);
        return Ok(finish(value, sign));
    }

    let mut g_s = R::one(&ctx);
    let mut h = R::one(&ctx);
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = a.pseudo_rem(&b)?;
        a = b;
        if r.is_zero() {
            return Ok(R::zero(&ctx));
        }
        let divisor = g_s.mul_ref(&h.pow(delta));
        b = div_coeffs(&r, &divisor)?;
        g_s = a.leading_coeff().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = match delta {
            0 => h,
            1 => g_s.clone(),
            _ => g_s
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .ok_or(Error::NonExactDivision)?,
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u64;
            let lb = b.coeff(0);
            let value = if da == 1 {
                lb
            } else {
                lb.pow(da)
                    .div_exact(&h.pow(da - 1))
                    .ok_or(Error::NonExactDivision)?
            };
            return Ok(finish(value, sign));
        }
    }
}

fn div_coeffs<R: Ring>(p: &Poly<R>, k: &R) -> Result<Poly<R>> {
    if k.is_one() {
        return Ok(p.clone());
    }
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| c.div_exact(k).ok_or(Error::NonExactDivision))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(p.ring().clone(), coeffs))
}

/// The Sylvester matrix of `f` and `g`: `deg g` shifted rows of `f`
/// followed by `deg f` shifted rows of `g`, highest coefficient first.
pub fn sylvester_matrix<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Vec<Vec<R>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let zero = R::zero(f.ring());
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, count) in [(f, m, n), (g, n, m)] {
        for shift in 0..count {
            let mut row = vec![zero.clone(); size];
            for k in 0..=deg {
                row[shift + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Resultant as the fraction-free determinant of the Sylvester matrix.
pub fn resultant_sylvester<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<R> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.try_add(g)?;
    det_bareiss(f.ring(), sylvester_matrix(f, g))
}
