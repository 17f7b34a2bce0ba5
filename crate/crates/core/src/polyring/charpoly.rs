//! Characteristic polynomials of multiplication maps in `R[c] / (G)`.
//!
//! For monic `G` with roots `c_1..c_k`, the characteristic polynomial of
//! multiplication by `lambda` is `prod (x - lambda(c_j))`.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::linalg::{charpoly_berkowitz, Matrix};
use super::modular::{charpoly_hessenberg, large_primes, Crt, Montgomery};
use super::poly::{IntPoly, Poly};
use super::resultant::resultant;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Matrix of multiplication by `lambda` on the basis `1, c, ..., c^(k-1)`
/// of `R[c] / (g)`; column `j` holds `c^j * lambda mod g`.
pub fn multiplication_matrix<R: Ring>(g: &Poly<R>, lambda: &Poly<R>) -> Result<Matrix<R>> {
    let ctx = g.ring().clone();
    let k = match g.degree() {
        Some(k) if k >= 1 && g.is_monic() => k,
        None => return Err(Error::ZeroPolynomial),
        _ => return Err(Error::NotMonic),
    };
    let mut col = lambda.rem_monic(g)?;
    let mut m = vec![vec![R::zero(&ctx); k]; k];
    for j in 0..k {
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
        if j + 1 < k {
            col = col.shift(1).rem_monic(g)?;
        }
    }
    Ok(m)
}

/// Exact characteristic polynomial over any coefficient ring (Berkowitz).
pub fn charpoly_mod_generic<R: Ring>(g: &Poly<R>, lambda: &Poly<R>) -> Result<Poly<R>> {
    let m = multiplication_matrix(g, lambda)?;
    Ok(charpoly_berkowitz(g.ring(), &m))
}

/// Characteristic polynomial of multiplication by `lambda` modulo the monic
/// integer polynomial `g`.
///
/// Computed modulo enough word-size primes to exceed a Hadamard-type bound
/// on the coefficients, then lifted by Chinese remaindering.
pub fn charpoly_mod(g: &IntPoly, lambda: &IntPoly) -> Result<IntPoly> {
    let m = multiplication_matrix(g, lambda)?;
    let k = m.len();

    // Every coefficient is a signed sum of at most 2^k principal minors, each
    // bounded by the product of max(1, column norm).
    let mut bits: u64 = 1 + k as u64;
    for j in 0..k {
        let norm2: BigInt = m.iter().map(|row| &row[j] * &row[j]).sum();
        if norm2.sign() != num_bigint::Sign::NoSign {
            bits += norm2.bits().div_ceil(2);
        }
    }
    let nprimes = (bits + 2).div_ceil(61) as usize;
    let primes = large_primes(nprimes);

    let images: Vec<Vec<u64>> = primes
        .par_iter()
        .map(|&p| {
            let field = Montgomery::new(p);
            let mp: Vec<Vec<u64>> = m
                .iter()
                .map(|row| row.iter().map(|v| field.from_bigint(v)).collect())
                .collect();
            charpoly_hessenberg(&field, mp)
                .into_iter()
                .map(|c| field.from_mont(c))
                .collect()
        })
        .collect();

    let coeffs = (0..=k)
        .into_par_iter()
        .map(|i| {
            let mut crt = Crt::default();
            for (img, &p) in images.iter().zip(&primes) {
                crt.push(img[i], p);
            }
            crt.symmetric()
        })
        .collect();
    Ok(IntPoly::new((), coeffs))
}

/// `Res_c(g(c), x - lambda(c))` as a polynomial in `x`; equals the
/// characteristic polynomial when `g` is monic.
pub fn charpoly_by_resultant<R: Ring>(g: &Poly<R>, lambda: &Poly<R>) -> Result<Poly<R>> {
    let ctx = g.ring().clone();
    let lift = |p: &Poly<R>| -> Poly<Poly<R>> {
        Poly::new(
            ctx.clone(),
            p.coeffs().iter().map(|c| Poly::constant(c.clone())).collect(),
        )
    };
    let g_lifted = lift(g);
    let x = Poly::<R>::x(&ctx);
    let minus_lambda = lift(&-lambda);
    let x_term = Poly::constant(x);
    let h = &minus_lambda + &x_term;
    resultant(&g_lifted, &h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn gaussian_example() {
        let g = p(&[1, 0, 1]);
        let lambda = p(&[4, 4]);
        assert_eq!(charpoly_mod(&g, &lambda).unwrap(), p(&[32, -8, 1]));
        assert_eq!(charpoly_mod_generic(&g, &lambda).unwrap(), p(&[32, -8, 1]));
        assert_eq!(charpoly_by_resultant(&g, &lambda).unwrap(), p(&[32, -8, 1]));
    }

    #[test]
    fn linear_modulus() {
        assert_eq!(charpoly_mod(&p(&[2, 1]), &p(&[0, 2])).unwrap(), p(&[4, 1]));
        // c - 3 with lambda = c^2 + 1 gives x - 10
        assert_eq!(charpoly_mod(&p(&[-3, 1]), &p(&[1, 0, 1])).unwrap(), p(&[-10, 1]));
    }

    #[test]
    fn rejects_non_monic() {
        assert!(matches!(
            charpoly_mod(&p(&[1, 2]), &p(&[1])),
            Err(Error::NotMonic)
        ));
    }

    #[test]
    fn large_coefficients_need_several_primes() {
        let big = BigInt::from(10).pow(60);
        let g = p(&[-7, 3, 0, 1]);
        let lambda = IntPoly::new((), vec![big.clone(), BigInt::from(-5), big]);
        assert_eq!(
            charpoly_mod(&g, &lambda).unwrap(),
            charpoly_mod_generic(&g, &lambda).unwrap()
        );
    }
}
