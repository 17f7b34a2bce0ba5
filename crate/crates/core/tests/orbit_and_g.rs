use misi::misiurewicz::h_poly;
use misi::multiplier::{e_coeffs, p_by_resultant, p_closed_n1, p_closed_n2, r_poly};
use misi::polyring::{vp, CycPoly, CycScalar, CyclotomicRing, IntPoly, Ring, Valuation};
use misi::{g_degree, g_poly, p_poly, MisSpec, OrbitCtx, SpecPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn int(s: SpecPoly) -> IntPoly {
    s.into_int().unwrap()
}

#[test]
fn orbit_polynomials() {
    for d in 2..=4u64 {
        let ctx = OrbitCtx::new(d).unwrap();
        for i in 1..=5 {
            let a = ctx.a(i);
            assert_eq!(a.degree(), Some(d.pow(i as u32 - 1) as usize));
            assert!(a.is_monic());
            assert_eq!(a.coeff(0), BigInt::from(0));
        }
        for i in 1..=4 {
            let next = &ctx.a(i).pow(d) + &IntPoly::x(&());
            assert_eq!(*ctx.a(i + 1), next);
        }
    }
    assert!(OrbitCtx::new(1).is_err());
}

#[test]
fn orbit_is_shareable_across_threads() {
    let ctx = std::sync::Arc::new(OrbitCtx::new(2).unwrap());
    let handles: Vec<_> = (0..4)
        .map(|t| {
            let ctx = ctx.clone();
            std::thread::spawn(move || ctx.a(6 + t % 3).degree())
        })
        .collect();
    for h in handles {
        assert!(h.join().unwrap().is_some());
    }
    assert_eq!(ctx.a(8).degree(), Some(128));
}

#[test]
fn b_quotients_and_constants() {
    let ctx = OrbitCtx::new(2).unwrap();
    assert_eq!(int(ctx.big_b(2, 1, 1, 1).unwrap()), p(&[0, 2, 1]));
    assert_eq!(int(ctx.big_b(2, 1, 2, 1).unwrap()), p(&[0, 2, 1, 2, 1]));
    assert_eq!(int(ctx.small_b(2, 1, 1, 1).unwrap()), p(&[1]));
    assert_eq!(int(ctx.small_b(2, 1, 2, 1).unwrap()), p(&[1, 0, 1]));
    assert_eq!(ctx.c_const(2, 1).unwrap(), p(&[0, 2]));
    assert_eq!(ctx.c_const(3, 1).unwrap(), p(&[0, 2, 2]));
    assert_eq!(ctx.c_const(2, 2).unwrap(), p(&[0, 0, 4, 4]));
    assert_eq!(ctx.lambda_poly(2, 1).unwrap(), p(&[0, 2]));
    assert_eq!(ctx.lambda_poly(2, 2).unwrap(), p(&[0, 0, 4, 4]));
    for d in 2..=3u64 {
        let ctx = OrbitCtx::new(d).unwrap();
        for (m, l, j) in [(2, 1, 2), (2, 2, 2), (3, 1, 3)] {
            let b = ctx.small_b(m, l, j, 1).unwrap();
            let want = d.pow((m + l * j - 2) as u32) - d.pow((m + l - 2) as u32);
            assert_eq!(b.degree(), Some(want as usize));
            assert!(b.is_monic());
            assert!(ctx.big_b(m, l, j, 1).unwrap().is_monic());
        }
    }
}

#[test]
fn zeta_must_be_nontrivial() {
    let ctx = OrbitCtx::new(3).unwrap();
    assert!(ctx.big_b(2, 1, 1, 0).is_err());
    assert!(ctx.big_b(2, 1, 1, 3).is_err());
    assert!(ctx.small_b(2, 1, 0, 1).is_err());
}

#[test]
fn lambda_is_divisible_by_d_power() {
    for d in 2..=3u64 {
        let ctx = OrbitCtx::new(d).unwrap();
        for m in 2..=4 {
            for n in 1..=3 {
                let lam = ctx.lambda_poly(m, n).unwrap();
                let dn = BigInt::from(d).pow(n as u32);
                assert!(lam.coeffs().iter().all(|c| c % &dn == BigInt::from(0)));
            }
        }
    }
}

#[test]
fn recurrence_grid() {
    for d in 2..=3u64 {
        let ctx = OrbitCtx::new(d).unwrap();
        for e in 1..d {
            for m in 2..=4 {
                for l in 1..=2 {
                    assert!(ctx.recurrence_check(m, l, 3, e).unwrap(), "d={d} e={e} m={m} l={l}");
                    assert!(ctx.geometric_check(m, l, 3, e).unwrap(), "d={d} e={e} m={m} l={l}");
                }
            }
        }
    }
}

#[test]
fn recurrence_agrees_with_exact_quotients() {
    for d in 2..=3u64 {
        let ctx = OrbitCtx::new(d).unwrap();
        for e in 1..d {
            for (m, l) in [(2, 1), (2, 2), (3, 1)] {
                assert!(ctx.recurrence_check_exact(m, l, 2, e).unwrap());
            }
        }
    }
}

#[test]
fn g_examples() {
    let ctx = OrbitCtx::new(2).unwrap();
    assert_eq!(int(g_poly(&ctx, &MisSpec::quadratic(2, 1)).unwrap()), p(&[2, 1]));
    assert_eq!(int(g_poly(&ctx, &MisSpec::quadratic(2, 2)).unwrap()), p(&[1, 0, 1]));
    assert!(g_poly(&ctx, &MisSpec::new(3, 2, 1, 1).unwrap()).is_err());
}

#[test]
fn g_degrees_match_table_column() {
    let table = [
        ((2, 1), 1),
        ((2, 2), 2),
        ((2, 3), 6),
        ((2, 4), 12),
        ((2, 5), 30),
        ((3, 1), 3),
        ((3, 2), 3),
        ((3, 3), 12),
        ((3, 4), 24),
        ((4, 1), 7),
        ((4, 2), 8),
        ((4, 3), 21),
        ((5, 1), 15),
        ((5, 2), 15),
        ((6, 1), 31),
    ];
    let ctx = OrbitCtx::new(2).unwrap();
    for ((m, n), deg) in table {
        let spec = MisSpec::quadratic(m, n);
        assert_eq!(g_degree(&spec), deg);
        assert_eq!(g_poly(&ctx, &spec).unwrap().degree(), Some(deg as usize));
    }
}

#[test]
fn g_degrees_for_higher_d() {
    for d in 3..=4u64 {
        let ctx = OrbitCtx::new(d).unwrap();
        for m in 2..=3 {
            for n in 1..=3 {
                if d == 4 && m + n > 5 {
                    continue;
                }
                for e in 1..d {
                    let spec = MisSpec::new(d, m, n, e).unwrap();
                    let g = g_poly(&ctx, &spec).unwrap();
                    assert!(g.is_monic());
                    assert_eq!(g.degree(), Some(g_degree(&spec) as usize), "{spec}");
                }
            }
        }
    }
}

#[test]
fn h_identity_up_to_ten() {
    let ctx = OrbitCtx::new(2).unwrap();
    for m in 2..=10 {
        let h = h_poly(&ctx, m).unwrap();
        let g = int(g_poly(&ctx, &MisSpec::quadratic(m, 2)).unwrap());
        let lhs = if m % 2 == 1 { &g * &p(&[1, 1]) } else { g };
        assert_eq!(lhs, h, "m={m}");
    }
}

#[test]
fn roots_have_the_right_type() {
    // c = -2: 0 -> -2 -> 2 -> 2, tail 2, period 1
    let ctx = OrbitCtx::new(2).unwrap();
    let c = BigInt::from(-2);
    assert_eq!(int(g_poly(&ctx, &MisSpec::quadratic(2, 1)).unwrap()).eval(&c), BigInt::from(0));
    let orbit: Vec<BigInt> = (1..=4).map(|i| ctx.a(i).eval(&c)).collect();
    assert_eq!(orbit, [-2, 2, 2, 2].map(BigInt::from));
    // c = i: 0 -> i -> i - 1 -> -i -> i - 1, tail 2, period 2, with a_3 = -a_1
    let g22 = int(g_poly(&ctx, &MisSpec::quadratic(2, 2)).unwrap());
    assert_eq!(g22, p(&[1, 0, 1]));
    let gauss = CyclotomicRing::new(4).unwrap();
    let i = gauss.zeta_pow(1);
    let at_i: Vec<CycScalar> = (1..=4).map(|k| CycPoly::from_int_poly(&gauss, &ctx.a(k)).eval(&i)).collect();
    assert_eq!(at_i[2], at_i[0].neg_ref());
    assert_eq!(at_i[3], at_i[1]);
    assert_ne!(at_i[2], at_i[1]);
}

#[test]
fn multiplier_examples() {
    let ctx = OrbitCtx::new(2).unwrap();
    let want = [p(&[-4, 1]), p(&[16, 0, -4, 1]), p(&[256, 0, 0, -64, 16, 16, -8, 1])];
    for (m, w) in (2..=4).zip(want) {
        assert_eq!(int(p_poly(&ctx, &MisSpec::quadratic(m, 1)).unwrap().poly), w);
    }
    assert_eq!(int(p_poly(&ctx, &MisSpec::quadratic(2, 2)).unwrap().poly), p(&[32, -8, 1]));
    assert_eq!(r_poly(&ctx, 2).unwrap(), p(&[32, -8, 1]));
    assert_eq!(r_poly(&ctx, 3).unwrap(), p(&[0, 128, 0, -8, 1]));
    assert_eq!(
        r_poly(&ctx, 4).unwrap(),
        p(&[131072, -32768, -8192, 8192, -1536, -128, 96, -16, 1])
    );
}

#[test]
fn closed_forms_match_charpoly() {
    let ctx = OrbitCtx::new(2).unwrap();
    for m in 2..=6 {
        let n1 = int(p_poly(&ctx, &MisSpec::quadratic(m, 1)).unwrap().poly);
        assert_eq!(p_closed_n1(&ctx, m).unwrap(), n1, "m={m}");
        let n2 = int(p_poly(&ctx, &MisSpec::quadratic(m, 2)).unwrap().poly);
        assert_eq!(p_closed_n2(&ctx, m).unwrap(), n2, "m={m}");
        let r = r_poly(&ctx, m).unwrap();
        let want = if m % 2 == 1 { &n2 * &IntPoly::x(&()) } else { n2 };
        assert_eq!(r, want, "m={m}");
    }
}

#[test]
fn e_coefficients_follow_from_h() {
    let ctx = OrbitCtx::new(2).unwrap();
    for m in 2..=7 {
        let r = r_poly(&ctx, m).unwrap();
        let e = e_coeffs(&ctx, m).unwrap();
        let top = 1usize << (m - 1);
        for (t, et) in e.iter().enumerate() {
            assert_eq!(*et, r.coeff(t), "m={m} t={t}");
        }
        if m >= 3 {
            assert_eq!(e[top - 1], -(BigInt::from(1) << m));
            // E_{top-1} = -2^m has valuation m
            assert_eq!(vp(&e[top - 1], 2).unwrap(), Valuation::Finite(m as u64));
        } else {
            assert_eq!(e[top - 1], BigInt::from(-8));
        }
    }
}

#[test]
fn multiplier_routes_agree_for_cubic_and_quartic() {
    for (d, m, n) in [(3, 2, 1), (3, 2, 2), (3, 3, 1), (4, 2, 1)] {
        let ctx = OrbitCtx::new(d).unwrap();
        for e in 1..d {
            let spec = MisSpec::new(d, m, n, e).unwrap();
            let a = p_poly(&ctx, &spec).unwrap().poly;
            assert_eq!(a, p_by_resultant(&ctx, &spec).unwrap(), "{spec}");
            assert_eq!(a.degree(), Some(g_degree(&spec) as usize));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn degree_formula_is_consistent(m in 2usize..=5, n in 1usize..=4) {
        let ctx = OrbitCtx::new(2).unwrap();
        let spec = MisSpec::quadratic(m, n);
        prop_assume!(m + n <= 8);
        let g = g_poly(&ctx, &spec).unwrap();
        prop_assert_eq!(g.degree(), Some(g_degree(&spec) as usize));
    }

    #[test]
    fn multiplier_is_monic_of_g_degree(m in 2usize..=4, n in 1usize..=3) {
        let ctx = OrbitCtx::new(2).unwrap();
        let spec = MisSpec::quadratic(m, n);
        let p = p_poly(&ctx, &spec).unwrap().poly;
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(g_degree(&spec) as usize));
    }
}
