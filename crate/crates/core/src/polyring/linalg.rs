//! Exact dense linear algebra over a [`Ring`]: fraction-free determinants
//! and division-free characteristic polynomials.

use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A row-major square matrix.
pub type Matrix<R> = Vec<Vec<R>>;

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn det_bareiss<R: Ring>(ctx: &R::Ctx, mut a: Matrix<R>) -> Result<R> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter("matrix is not square".into()));
    }
    if n == 0 {
        return Ok(R::one(ctx));
    }
    let mut negate = false;
    let mut prev = R::one(ctx);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(R::zero(ctx));
            };
            a.swap(i, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = row[j].mul_ref(pivot).sub_ref(&lead.mul_ref(&pivot_row[j]));
                row[j] = num.div_exact(&prev).ok_or(Error::NonExactDivision)?;
            }
            row[k] = R::zero(ctx);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { det.neg_ref() } else { det })
}

/// Characteristic polynomial `det(x I - M)` by Berkowitz's algorithm.
///
/// Uses only ring additions and multiplications, so it is valid over any
/// commutative ring.
pub fn charpoly_berkowitz<R: Ring>(ctx: &R::Ctx, m: &Matrix<R>) -> Poly<R> {
    let n = m.len();
    let one = R::one(ctx);
    // coefficient vector of the trailing principal submatrix, leading first
    let mut w: Vec<R> = vec![one.clone()];
    for s in (0..n).rev() {
        let t = n - s;
        let a = &m[s][s];
        let mut diags = Vec::with_capacity(t + 1);
        diags.push(one.clone());
        diags.push(a.neg_ref());
        if t >= 2 {
            let mut d: Vec<R> = (s + 1..n).map(|i| m[i][s].clone()).collect();
            for step in 0..t - 1 {
                let mut v = R::zero(ctx);
                for (k, dk) in d.iter().enumerate() {
                    v.add_mul_assign(&m[s][s + 1 + k], dk);
                }
                diags.push(v.neg_ref());
                if step + 1 < t - 1 {
                    d = (s + 1..n)
                        .map(|i| {
                            let mut acc = R::zero(ctx);
                            for (k, dk) in d.iter().enumerate() {
                                acc.add_mul_assign(&m[i][s + 1 + k], dk);
                            }
                            acc
                        })
                        .collect();
                }
            }
        }
        let next: Vec<R> = (0..=t)
            .map(|i| {
                let mut acc = R::zero(ctx);
                for (j, wj) in w.iter().enumerate().take(i + 1) {
                    acc.add_mul_assign(&diags[i - j], wj);
                }
                acc
            })
            .collect();
        w = next;
    }
    w.reverse();
    Poly::new(ctx.clone(), w)
}
