use misi::polyring::{
    affine_rescale, charpoly_by_resultant, charpoly_mod, charpoly_mod_generic, cyclotomic, divisors,
    floor_log_abs, mobius, mobius_gcd_sum, parse_human, resultant, resultant_sylvester, totient, vp,
    CycPoly, CycScalar, CyclotomicRing, IntPoly, Poly, Ring, Valuation,
};
use misi::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn arithmetic_examples() {
    assert_eq!(&p(&[2, 1]) * &p(&[-2, 1]), p(&[-4, 0, 1]));
    let f = p(&[3, 0, -7, 2]);
    assert_eq!(&f + &IntPoly::zero(&()), f);
    let a2 = p(&[0, 1, 1]);
    assert_eq!(&(&a2 * &a2) + &p(&[0, 1]), p(&[0, 1, 1, 2, 1]));
    assert_eq!(IntPoly::zero(&()).degree(), None);
    assert!(IntPoly::zero(&()).coeffs().is_empty());
}

#[test]
fn exact_division_examples() {
    assert_eq!(p(&[0, 2, 1, 2, 1]).exact_div(&p(&[0, 2, 1])).unwrap(), p(&[1, 0, 1]));
    let f = p(&[5, -1, 3]);
    assert_eq!(f.exact_div(&IntPoly::one(&())).unwrap(), f);
    assert!(matches!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])), Err(Error::NonExactDivision)));
}

#[test]
fn resultant_examples() {
    assert_eq!(resultant(&p(&[-4, 1]), &p(&[-1, 1])).unwrap(), big(3));
    assert_eq!(resultant(&p(&[-4, 1]), &p(&[1, 1])).unwrap(), big(5));
    assert_eq!(resultant(&p(&[3, 0, 2, 1]), &IntPoly::one(&())).unwrap(), big(1));
    assert!(matches!(resultant(&IntPoly::zero(&()), &p(&[1, 1])), Err(Error::ZeroPolynomial)));
}

#[test]
fn cyclotomic_examples_and_product_identity() {
    assert_eq!(cyclotomic(1), p(&[-1, 1]));
    assert_eq!(cyclotomic(2), p(&[1, 1]));
    assert_eq!(cyclotomic(7), p(&[1; 7]));
    for l in 1..=40u64 {
        let phi = cyclotomic(l);
        assert!(phi.is_monic());
        assert_eq!(phi.degree(), Some(totient(l) as usize));
        let prod = divisors(l).into_iter().fold(IntPoly::one(&()), |acc, k| &acc * &cyclotomic(k));
        let mut xl = vec![BigInt::from(0); l as usize + 1];
        xl[0] = big(-1);
        xl[l as usize] = big(1);
        assert_eq!(prod, IntPoly::new((), xl), "l={l}");
    }
}

#[test]
fn mobius_examples() {
    assert_eq!(mobius(1), 1);
    assert_eq!(mobius(4), 0);
    assert_eq!(mobius(6), 1);
    assert_eq!(mobius_gcd_sum(4, 6, 2).unwrap(), 0);
    assert_eq!(mobius_gcd_sum(1, 3, 1).unwrap(), 1);
    assert_eq!(mobius_gcd_sum(6, 4, 1).unwrap(), 0);
    assert!(matches!(mobius_gcd_sum(2, 4, 3), Err(Error::NotADivisor { .. })));
}

#[test]
fn gcd_sum_vanishes_off_divisors() {
    for l in 1..=30u64 {
        for n in 1..=30u64 {
            if n % l == 0 {
                continue;
            }
            for t in divisors(n) {
                assert_eq!(mobius_gcd_sum(l, n, t).unwrap(), 0, "l={l} n={n} t={t}");
            }
        }
    }
}

#[test]
fn valuation_examples() {
    assert_eq!(vp(&big(-4), 2).unwrap(), Valuation::Finite(2));
    assert_eq!(vp(&big(0), 3).unwrap(), Valuation::Infinite);
    // 2^(m-1) (2^(m-2) - 2) has 2-adic valuation (m - 1) + 1 = m
    for m in 4..=12u32 {
        let v = big(1 << (m - 1)) * (big(1 << (m - 2)) - 2);
        assert_eq!(vp(&v, 2).unwrap(), Valuation::Finite(u64::from(m)));
    }
    assert!(matches!(vp(&big(4), 4), Err(Error::NotPrime(4))));
}

#[test]
fn charpoly_examples() {
    assert_eq!(charpoly_mod(&p(&[1, 0, 1]), &p(&[4, 4])).unwrap(), p(&[32, -8, 1]));
    assert_eq!(charpoly_mod(&p(&[-7, 1]), &p(&[1, 0, 3])).unwrap(), p(&[-148, 1]));
    assert_eq!(charpoly_mod(&p(&[2, 1]), &p(&[0, 2])).unwrap(), p(&[4, 1]));
    assert!(matches!(charpoly_mod(&p(&[1, 2]), &p(&[0, 1])), Err(Error::NotMonic)));
}

#[test]
fn rescale_examples() {
    assert_eq!(affine_rescale(&p(&[1, 0, 1]), 4), p(&[32, -8, 1]));
    assert_eq!(affine_rescale(&p(&[0, 1]), 4), p(&[-4, 1]));
    assert_eq!(affine_rescale(&p(&[1, 1]), 4), p(&[0, 1]));
}

#[test]
fn floor_log_examples() {
    assert_eq!(floor_log_abs(&big(3)).unwrap(), 1);
    assert_eq!(floor_log_abs(&big(5461)).unwrap(), 8);
    assert_eq!(floor_log_abs(&big(1)).unwrap(), 0);
    assert_eq!(floor_log_abs(&big(-20)).unwrap(), 2);
    assert!(matches!(floor_log_abs(&big(0)), Err(Error::ZeroArgument)));
}

#[test]
fn floor_log_at_exp_boundaries() {
    // floor(e^k) and ceil(e^k) straddle each integer boundary
    for k in 1..=30u32 {
        let e_k = (k as f64).exp();
        let below = BigInt::from(e_k.floor() as u128);
        let above = BigInt::from(e_k.ceil() as u128);
        assert_eq!(floor_log_abs(&below).unwrap(), u64::from(k - 1), "k={k}");
        assert_eq!(floor_log_abs(&above).unwrap(), u64::from(k), "k={k}");
    }
}

#[test]
fn text_and_json_formats() {
    let f = p(&[16, 0, -4, 1]);
    assert_eq!(f.to_human("x"), "x^3 - 4*x^2 + 16");
    let json = serde_json::to_string(&f.to_json("x")).unwrap();
    assert_eq!(json, r#"{"var":"x","coeffs":["16","0","-4","1"]}"#);
    assert_eq!(parse_human("x^3 - 4*x^2 + 16").unwrap(), (f.clone(), Some("x".to_string())));
    assert_eq!(parse_human("x**3 - 4x**2 + 16").unwrap().0, f);
    assert!(parse_human("x + y").is_err());
    assert!(parse_human("").is_err());
}

#[test]
fn ring_mismatch_is_reported() {
    let r3 = CyclotomicRing::new(3).unwrap();
    let r4 = CyclotomicRing::new(4).unwrap();
    let a = CycPoly::one(&r3);
    let b = CycPoly::one(&r4);
    assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(..))));
}

#[test]
fn norms_decide_units() {
    let ring = CyclotomicRing::new(4).unwrap();
    let i = ring.zeta_pow(1);
    assert!(i.is_unit());
    let two_plus_i = i.add_ref(&CycScalar::from_int(&ring, &big(2)));
    assert_eq!(two_plus_i.norm(), big(5));
    assert!(!two_plus_i.is_unit());
    // 1 - zeta_3 has norm 3
    let r3 = CyclotomicRing::new(3).unwrap();
    let one_minus = CycScalar::one(&r3).sub_ref(&r3.zeta_pow(1));
    assert_eq!(one_minus.norm(), big(3));
}

#[test]
fn zeta_relations() {
    for d in [3u64, 4, 5, 6, 8, 9] {
        let ring = CyclotomicRing::new(d).unwrap();
        let z = ring.zeta_pow(1);
        assert!(z.pow(d).is_one(), "d={d}");
        for k in 1..d {
            assert!(!z.pow(k).is_one(), "d={d} k={k}");
        }
        let sum = (0..d).fold(CycScalar::zero(&ring), |acc, k| acc.add_ref(&z.pow(k)));
        assert!(sum.is_zero(), "d={d}");
        // zeta is a unit, and zeta^e equals the selected power
        assert!(z.is_unit());
        assert_eq!(ring.zeta_pow(d + 1), z);
    }
}

#[test]
fn generic_charpoly_over_cyclotomic_ring() {
    let ring = CyclotomicRing::new(3).unwrap();
    let z = ring.zeta_pow(1);
    // G = c^2 - z, lambda = c: charpoly x^2 - z
    let g = CycPoly::new(ring.clone(), vec![z.neg_ref(), CycScalar::zero(&ring), CycScalar::one(&ring)]);
    let lam = CycPoly::x(&ring);
    let want = CycPoly::new(ring.clone(), vec![z.neg_ref(), CycScalar::zero(&ring), CycScalar::one(&ring)]);
    assert_eq!(charpoly_mod_generic(&g, &lam).unwrap(), want);
    assert_eq!(charpoly_by_resultant(&g, &lam).unwrap(), want);
}

fn small_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 0..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonzero_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    small_poly(max_deg, bound).prop_filter("nonzero", |f| !f.is_zero())
}

fn monic_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg).prop_flat_map(move |k| {
        prop::collection::vec(-bound..=bound, k).prop_map(|mut c| {
            c.push(1);
            IntPoly::from_i64s(&c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(f in small_poly(8, 50), g in small_poly(8, 50), h in small_poly(8, 50)) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f - &g) + &g, f.clone());
        prop_assert_eq!(&f + &(-&f), IntPoly::zero(&()));
    }

    #[test]
    fn exact_div_inverts_mul(f in small_poly(8, 50), g in nonzero_poly(8, 50)) {
        prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn prs_matches_sylvester(f in nonzero_poly(12, 20), g in nonzero_poly(12, 20)) {
        prop_assert_eq!(resultant(&f, &g).unwrap(), resultant_sylvester(&f, &g).unwrap());
    }

    #[test]
    fn resultant_antisymmetry(f in nonzero_poly(10, 30), g in nonzero_poly(10, 30)) {
        let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
        let sign = if (df * dg) % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        prop_assert_eq!(resultant(&f, &g).unwrap(), sign * resultant(&g, &f).unwrap());
    }

    #[test]
    fn resultant_is_multiplicative(f in nonzero_poly(5, 10), g in nonzero_poly(5, 10), h in nonzero_poly(5, 10)) {
        let gh = &g * &h;
        prop_assert_eq!(resultant(&f, &gh).unwrap(), resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap());
    }

    #[test]
    fn charpoly_matches_resultant(g in monic_poly(5, 20), lam in small_poly(6, 20)) {
        let a = charpoly_mod(&g, &lam).unwrap();
        let b = charpoly_by_resultant(&g, &lam).unwrap();
        let k = g.degree().unwrap();
        prop_assert_eq!(a.degree(), Some(k));
        prop_assert!(a.is_monic());
        prop_assert_eq!(a.clone(), b);
        let generic = charpoly_mod_generic(&g, &lam).unwrap();
        prop_assert_eq!(a, generic);
    }

    #[test]
    fn cyclotomic_scalar_arithmetic(d in prop::sample::select(vec![3u64, 4, 5, 7, 8]),
                                   a in prop::collection::vec(-9i64..=9, 0..8),
                                   b in prop::collection::vec(-9i64..=9, 0..8)) {
        let ring = CyclotomicRing::new(d).unwrap();
        let x = CycScalar::from_residue(&ring, IntPoly::from_i64s(&a));
        let y = CycScalar::from_residue(&ring, IntPoly::from_i64s(&b));
        prop_assert!(x.residue().degree().is_none_or(|k| k < ring.rank()));
        // norms are multiplicative
        prop_assert_eq!(x.mul_ref(&y).norm(), x.norm() * y.norm());
        if !y.is_zero() {
            prop_assert_eq!(x.mul_ref(&y).div_exact(&y).unwrap(), x);
        }
    }

    #[test]
    fn valuations_add(a in 1i64..1_000_000, b in 1i64..1_000_000, prime in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let va = vp(&BigInt::from(a), prime).unwrap();
        let vb = vp(&BigInt::from(b), prime).unwrap();
        prop_assert_eq!(vp(&(BigInt::from(a) * b), prime).unwrap(), va + vb);
    }

    #[test]
    fn floor_log_brackets(n in 1u64..u64::MAX) {
        let k = floor_log_abs(&BigInt::from(n)).unwrap();
        let ln = (n as f64).ln();
        // away from boundaries the float answer is reliable
        if (ln - ln.round()).abs() > 1e-9 {
            prop_assert_eq!(k, ln.floor() as u64);
        }
    }

    #[test]
    fn human_form_roundtrip(f in small_poly(10, 1000)) {
        let text = f.to_human("x");
        let back = IntPoly::parse(&text).unwrap();
        prop_assert_eq!(back, f.clone());
        let json = f.to_json("x");
        prop_assert_eq!(IntPoly::from_json(&json).unwrap(), f);
    }
}

#[test]
fn poly_over_poly_is_usable() {
    // Poly<IntPoly> is the coefficient ring used by the resultant oracle.
    let x = IntPoly::x(&());
    let f: Poly<IntPoly> = Poly::new((), vec![x.clone(), IntPoly::one(&())]);
    assert_eq!(f.degree(), Some(1));
}
