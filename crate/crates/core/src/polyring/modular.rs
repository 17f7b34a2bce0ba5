//! Word-size prime-field arithmetic for multimodular computations.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::numtheory::is_prime;

/// Montgomery arithmetic modulo an odd prime below `2^62`.
///
/// Values are kept in Montgomery form `a * 2^64 mod p`.
#[derive(Clone, Copy, Debug)]
pub struct Montgomery {
    p: u64,
    /// `-p^{-1} mod 2^64`
    pinv: u64,
    /// `2^128 mod p`
    r2: u64,
}

impl Montgomery {
    pub fn new(p: u64) -> Self {
        assert!(p % 2 == 1 && p < (1 << 62));
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = (u128::from(u64::MAX) % u128::from(p) + 1) % u128::from(p);
        let r2 = (r * r % u128::from(p)) as u64;
        Self {
            p,
            pinv: inv.wrapping_neg(),
            r2,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.pinv);
        let s = ((t + u128::from(m) * u128::from(self.p)) >> 64) as u64;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(u128::from(a) * u128::from(b))
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn to_mont(&self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    pub fn from_mont(&self, a: u64) -> u64 {
        self.redc(u128::from(a))
    }

    pub fn one(&self) -> u64 {
        self.to_mont(1)
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element (Montgomery form in and out).
    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    /// Reduces a big integer into Montgomery form.
    pub fn from_bigint(&self, a: &BigInt) -> u64 {
        let (sign, digits) = a.to_u64_digits();
        // Horner over base 2^64 digits, most significant first
        let base = self.to_mont(((1u128 << 64) % u128::from(self.p)) as u64);
        let mut acc = 0u64;
        for &limb in digits.iter().rev() {
            acc = self.add(self.mul(acc, base), self.to_mont(limb % self.p));
        }
        if sign == Sign::Minus {
            self.sub(0, acc)
        } else {
            acc
        }
    }
}

static PRIMES: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();

/// The first `count` primes below `2^62`, in decreasing order.
pub fn large_primes(count: usize) -> Vec<u64> {
    let cell = PRIMES.get_or_init(|| Mutex::new(Vec::new()));
    let mut primes = cell.lock().unwrap_or_else(|e| e.into_inner());
    let mut candidate = primes.last().copied().unwrap_or(1 << 62);
    while primes.len() < count {
        candidate -= 1;
        if candidate % 2 == 1 && is_prime(candidate) {
            primes.push(candidate);
        }
    }
    primes[..count].to_vec()
}

/// Characteristic polynomial of a square matrix over `Z/p` (Montgomery
/// form), via reduction to upper Hessenberg form. Coefficients ascending.
pub fn charpoly_hessenberg(field: &Montgomery, mut h: Vec<Vec<u64>>) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = field.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = field.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for j in 0..n {
                let t = field.mul(u, h[m][j]);
                h[i][j] = field.sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = field.mul(u, row[i]);
                row[m] = field.add(row[m], t);
            }
        }
    }

    // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} prod(subdiagonal) p_{k-i-1}
    let one = field.one();
    let mut polys: Vec<Vec<u64>> = vec![vec![one]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        for (j, &c) in prev.iter().enumerate() {
            next[j + 1] = field.add(next[j + 1], c);
            next[j] = field.sub(next[j], field.mul(h[k - 1][k - 1], c));
        }
        let mut t = one;
        for i in 1..k {
            t = field.mul(t, h[k - i][k - i - 1]);
            if t == 0 {
                break;
            }
            let factor = field.mul(t, h[k - i - 1][k - 1]);
            for (j, &c) in polys[k - i - 1].iter().enumerate() {
                next[j] = field.sub(next[j], field.mul(factor, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Incremental Chinese remaindering with symmetric reconstruction.
#[derive(Clone, Debug)]
pub struct Crt {
    value: BigInt,
    modulus: BigInt,
}

impl Default for Crt {
    fn default() -> Self {
        Self {
            value: BigInt::zero(),
            modulus: BigInt::one(),
        }
    }
}

impl Crt {
    /// Adds the residue `r` (plain, not Montgomery form) modulo `p`.
    pub fn push(&mut self, r: u64, p: u64) {
        let pb = BigInt::from(p);
        let current = self.value.mod_floor(&pb);
        let current = u64::try_from(current).expect("residue below p");
        let m_mod = u64::try_from(self.modulus.mod_floor(&pb)).expect("residue below p");
        let diff = (u128::from(r) + u128::from(p) - u128::from(current)) % u128::from(p);
        let inv = mod_inverse(m_mod, p);
        let k = (diff * u128::from(inv) % u128::from(p)) as u64;
        self.value += &self.modulus * BigInt::from(k);
        self.modulus *= pb;
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Representative in `(-M/2, M/2]`.
    pub fn symmetric(&self) -> BigInt {
        let half = &self.modulus >> 1;
        if self.value > half {
            &self.value - &self.modulus
        } else {
            self.value.clone()
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let e = i128::from(a).extended_gcd(&i128::from(p));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(i128::from(p)) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn montgomery_roundtrip() {
        let f = Montgomery::new(large_primes(1)[0]);
        let p = f.modulus();
        for &(a, b) in &[(3u64, 5u64), (p - 1, p - 1), (123456789, 987654321)] {
            let got = f.from_mont(f.mul(f.to_mont(a), f.to_mont(b)));
            let want = (u128::from(a) * u128::from(b) % u128::from(p)) as u64;
            assert_eq!(got, want);
        }
        let x = f.to_mont(42);
        assert_eq!(f.from_mont(f.mul(x, f.inv(x))), 1);
        let big = BigInt::from(-7) * BigInt::from(p) - 3;
        assert_eq!(f.from_mont(f.from_bigint(&big)), p - 3);
    }

    #[test]
    fn crt_recovers_negative_values() {
        let target = BigInt::parse_bytes(b"-123456789012345678901234567890123", 10).unwrap();
        let mut crt = Crt::default();
        for p in large_primes(3) {
            let r = target.mod_floor(&BigInt::from(p));
            crt.push(u64::try_from(r).unwrap(), p);
        }
        assert_eq!(crt.symmetric(), target);
    }

    #[test]
    fn primes_are_descending_primes() {
        let ps = large_primes(5);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| is_prime(p) && p < (1 << 62)));
    }

    #[test]
    fn hessenberg_matches_known_charpoly() {
        let f = Montgomery::new(large_primes(1)[0]);
        let p = f.modulus();
        let m = [[2i64, -1, 0], [1, 3, 4], [0, 5, -2]];
        let h: Vec<Vec<u64>> = m
            .iter()
            .map(|r| r.iter().map(|&v| f.from_bigint(&BigInt::from(v))).collect())
            .collect();
        let cp: Vec<i128> = charpoly_hessenberg(&f, h)
            .into_iter()
            .map(|c| {
                let c = i128::from(f.from_mont(c));
                if c > i128::from(p) / 2 {
                    c - i128::from(p)
                } else {
                    c
                }
            })
            .collect();
        // x^3 - 3x^2 - 23x + 54 (trace 3, det -54)
        assert_eq!(cp, vec![54, -23, -3, 1]);
    }
}
