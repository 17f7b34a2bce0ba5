//! Verification sweeps. Each returns records in canonical sorted order.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::misiurewicz::MisSpec;
use crate::polyring::{cyclotomic, divisors, is_squarefree, resultant, IntPoly, SpecPoly};
use crate::special::{is_p_special, power_preserves_special, res_with_cyclotomics};

use super::engine::Engine;
use super::record::{sort_records, CheckRecord, Params, RecordBuilder, Verdict};

/// `|Res(a, b)|`, taken down to `Z` by the norm from `Q(zeta_d)` when the
/// coefficients live in `Z[zeta_d]`.
pub fn abs_norm_resultant(a: &SpecPoly, b: &SpecPoly) -> Result<BigInt> {
    match (a, b) {
        (SpecPoly::Int(a), SpecPoly::Int(b)) => Ok(resultant(a, b)?.abs()),
        (SpecPoly::Cyc(a), SpecPoly::Cyc(b)) => Ok(resultant(a, b)?.norm().abs()),
        _ => Err(Error::RingMismatch("Z".into(), "Z[zeta]".into())),
    }
}

fn run_all<T, F>(tasks: Vec<T>, f: F) -> Result<Vec<CheckRecord>>
where
    T: Send,
    F: Fn(T) -> Result<Vec<CheckRecord>> + Sync + Send,
{
    let nested: Vec<Vec<CheckRecord>> = tasks.into_par_iter().map(f).collect::<Result<_>>()?;
    let mut records: Vec<CheckRecord> = nested.into_iter().flatten().collect();
    sort_records(&mut records);
    Ok(records)
}

fn zeta_exps(d: u64) -> std::ops::Range<u64> {
    1..d
}

/// `(m, n)` pairs with `m >= 2`, `n >= n_min` and `m + n <= max_mn`.
pub fn mn_grid(n_min: usize, max_mn: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 2..max_mn {
        for n in n_min..=max_mn.saturating_sub(m) {
            out.push((m, n));
        }
    }
    out
}

/// Whether the "not a unit" direction for `l | n` is proven rather than
/// conjectural: for `d = 2` it is known whenever `n <= 3`.
fn non_unit_proven(d: u64, n: usize) -> bool {
    d == 2 && n <= 3
}

/// Unit test of `G_{d,m,l}(c_0)` at the roots `c_0` of `G_{d,m,n}` through
/// `N = Res(G_{d,m,n}, G_{d,m,l})`, for all `1 <= l < n`.
///
/// For `l` not dividing `n` the value must be a unit (`|N| = 1`), which is
/// a theorem. For proper divisors the expected non-unit is conjectural
/// except where noted by [`non_unit_proven`].
pub fn check_unit_conjecture(engine: &Engine, d: u64, max_mn: usize) -> Result<Vec<CheckRecord>> {
    if !(2..=4).contains(&d) {
        return Err(Error::InvalidParameter(format!("unit sweep supports d in 2..=4, got {d}")));
    }
    if max_mn < 4 {
        return Err(Error::InvalidParameter(format!("need max_mn >= 4, got {max_mn}")));
    }
    let mut tasks = Vec::new();
    for e in zeta_exps(d) {
        for (m, n) in mn_grid(2, max_mn) {
            for l in 1..n {
                tasks.push((e, m, n, l));
            }
        }
    }
    run_all(tasks, |(e, m, n, l)| {
        let params = Params::dmn(d, m, n).l(l as u64).zeta(e);
        let divides = n % l == 0;
        let check_id = if divides { "unit-nonunit" } else { "unit-theorem" };
        let mut rec = RecordBuilder::new(check_id, params);
        let gn = engine.g(&MisSpec::new(d, m, n, e)?)?;
        let gl = engine.g(&MisSpec::new(d, m, l, e)?)?;
        let norm = abs_norm_resultant(&gn, &gl)?;
        rec.put("abs_norm", &norm);
        let verdict = if !divides {
            Verdict::theorem(norm.is_one())
        } else if non_unit_proven(d, n) {
            Verdict::theorem(norm > BigInt::one())
        } else {
            Verdict::conjecture(norm > BigInt::one())
        };
        Ok(vec![rec.finish(verdict)])
    })
}

/// `|Res(G_{m,l}, G_{m,n})| = |Res(P_{m,l}, Phi_{n/l})|` for every proper
/// divisor `l` of `n`, `d = 2`.
pub fn check_cross_identity(engine: &Engine, max_mn: usize) -> Result<Vec<CheckRecord>> {
    if max_mn < 4 {
        return Err(Error::InvalidParameter(format!("need max_mn >= 4, got {max_mn}")));
    }
    let mut tasks = Vec::new();
    for (m, n) in mn_grid(2, max_mn) {
        for l in divisors(n as u64) {
            if l < n as u64 {
                tasks.push((m, n, l as usize));
            }
        }
    }
    run_all(tasks, |(m, n, l)| {
        let mut rec = RecordBuilder::new("cross-identity", Params::dmn(2, m, n).l(l as u64));
        let gl = engine.g(&MisSpec::quadratic(m, l))?;
        let gn = engine.g(&MisSpec::quadratic(m, n))?;
        let lhs = abs_norm_resultant(&gl, &gn)?;
        let pl = engine.p(&MisSpec::quadratic(m, l))?;
        let phi = SpecPoly::Int(cyclotomic((n / l) as u64));
        let rhs = abs_norm_resultant(&pl, &phi)?;
        rec.put("res_g", &lhs).put("res_p_phi", &rhs);
        Ok(vec![rec.finish(Verdict::theorem(lhs == rhs))])
    })
}

/// 2-specialness of `P_{m,n}` for `d = 2`, `m + n <= max_mn`.
///
/// `n = 1, 2` are theorems; larger `n` are conjectural. A squarefreeness
/// diagnostic is attached but never affects the verdict.
pub fn check_2special_family(engine: &Engine, max_mn: usize) -> Result<Vec<CheckRecord>> {
    if !(3..=10).contains(&max_mn) {
        return Err(Error::InvalidParameter(format!("need 3 <= max_mn <= 10, got {max_mn}")));
    }
    run_all(mn_grid(1, max_mn), |(m, n)| {
        let mut rec = RecordBuilder::new("two-special", Params::dmn(2, m, n));
        let p = engine.p(&MisSpec::quadratic(m, n))?;
        let p = p.as_int().expect("d = 2 polynomials have integer coefficients");
        let report = is_p_special(p, 2)?;
        let deg = p.degree().unwrap_or(0);
        rec.put("degree", deg);
        rec.put("v2_subleading", crate::polyring::vp(&p.coeff(deg - 1), 2)?);
        if let Some(w) = report.witness {
            rec.put("witness", format!("bullet {} at index {}", w.bullet, w.index));
        }
        rec.put(
            "squarefree",
            match is_squarefree(p) {
                Some(true) => "yes",
                _ => "unknown",
            },
        );
        let verdict = if n <= 2 {
            Verdict::theorem(report.verdict)
        } else {
            Verdict::conjecture(report.verdict)
        };
        Ok(vec![rec.finish(verdict)])
    })
}

fn cyclotomic_record(check_id: &str, params: Params, poly: &IntPoly, p: u64, lmax: u64) -> Result<CheckRecord> {
    let mut rec = RecordBuilder::new(check_id, params);
    let values = res_with_cyclotomics(poly, lmax)?;
    let (l_min, smallest) = values
        .iter()
        .min_by(|a, b| a.1.cmp(&b.1))
        .cloned()
        .expect("lmax >= 1");
    rec.put("p", p).put("lmax", lmax).put("smallest_abs_res", &smallest).put("smallest_at_l", l_min);
    Ok(rec.finish(Verdict::theorem(smallest > BigInt::one())))
}

/// For every p-special polynomial in the `d = 2` multiplier family
/// (`m + n <= max_mn`) and in `corpus`: `|Res(P, Phi_l)| > 1` for
/// `1 <= l <= lmax`, and `P^k` stays p-special for `k <= kmax`.
///
/// Family members that are not 2-special are skipped here; the
/// specialness sweep reports them.
pub fn check_special_resultants(
    engine: &Engine,
    max_mn: usize,
    lmax: u64,
    kmax: u32,
    corpus: &[(IntPoly, u64)],
) -> Result<Vec<CheckRecord>> {
    if lmax == 0 {
        return Err(Error::InvalidParameter("lmax must be at least 1".into()));
    }
    enum Task<'a> {
        Family(usize, usize),
        Corpus(usize, &'a IntPoly, u64),
    }
    let mut tasks: Vec<Task> = mn_grid(1, max_mn).into_iter().map(|(m, n)| Task::Family(m, n)).collect();
    tasks.extend(corpus.iter().enumerate().map(|(i, (poly, p))| Task::Corpus(i, poly, *p)));
    run_all(tasks, |task| {
        let (poly, p, res_id, pow_id, params) = match task {
            Task::Family(m, n) => {
                let poly = engine.p(&MisSpec::quadratic(m, n))?.as_int().cloned().expect("integer P");
                if !is_p_special(&poly, 2)?.verdict {
                    return Ok(Vec::new());
                }
                (poly, 2, "res-cyclotomic".to_string(), "power-closure".to_string(), Params::dmn(2, m, n))
            }
            Task::Corpus(i, poly, p) => (
                poly.clone(),
                p,
                format!("res-cyclotomic-corpus-{i:03}"),
                format!("power-closure-corpus-{i:03}"),
                Params::default(),
            ),
        };
        let res = cyclotomic_record(&res_id, params.l(lmax), &poly, p, lmax)?;
        let mut pow = RecordBuilder::new(&pow_id, params);
        pow.put("p", p).put("kmax", kmax);
        let ok = power_preserves_special(&poly, p, kmax)?;
        Ok(vec![res, pow.finish(Verdict::theorem(ok))])
    })
}

/// The recurrence `b_{j+1} = zeta^(d-1) C b_j + 1` and its closed form
/// modulo `B_1`, for every `zeta` with each `d`.
pub fn check_recurrence(
    engine: &Engine,
    ds: &[u64],
    ms: &[usize],
    ls: &[usize],
    jmax: usize,
) -> Result<Vec<CheckRecord>> {
    let mut tasks = Vec::new();
    for &d in ds {
        for e in zeta_exps(d) {
            for &m in ms {
                for &l in ls {
                    tasks.push((d, e, m, l));
                }
            }
        }
    }
    run_all(tasks, |(d, e, m, l)| {
        let ctx = engine.orbit(d)?;
        let params = Params {
            d: Some(d),
            m: Some(m),
            l: Some(l as u64),
            zeta_exp: Some(e),
            ..Params::default()
        };
        let mut rec = RecordBuilder::new("recurrence", params);
        rec.put("jmax", jmax);
        let recurrence = rec.finish(Verdict::theorem(ctx.recurrence_check(m, l, jmax, e)?));
        let mut rec = RecordBuilder::new("geometric", params);
        rec.put("jmax", jmax);
        let geometric = rec.finish(Verdict::theorem(ctx.geometric_check(m, l, jmax, e)?));
        Ok(vec![recurrence, geometric])
    })
}

/// Coefficient facts about `a_l = sum A_{l,i} c^i` for `d = 2` and
/// `2 <= l <= lmax`: the four leading/trailing identities, the 2-adic bound
/// `v_2(A_{l,i}) > 2i + l - 2^l` for `i <= 2^(l-1) - 2` with equality at
/// `i = 2^(l-1) - 1`, and the elementary bound `2^l > j + v_2(j) + 1` for
/// `1 <= j <= 2^l - 3` (`l >= 3`).
pub fn check_coefficient_lemmas(engine: &Engine, lmax: usize) -> Result<Vec<CheckRecord>> {
    if lmax < 2 {
        return Err(Error::InvalidParameter(format!("need lmax >= 2, got {lmax}")));
    }
    if lmax > 20 {
        return Err(Error::InvalidParameter(format!("lmax {lmax} is out of reach")));
    }
    let ctx = engine.orbit(2)?;
    // Build the orbit polynomials once, in order, before fanning out.
    ctx.a(lmax);
    run_all((2..=lmax).collect(), |l| {
        let params = Params {
            d: Some(2),
            l: Some(l as u64),
            ..Params::default()
        };
        let a = ctx.a(l);
        let top = 1usize << (l - 1);

        let mut rec = RecordBuilder::new("orbit-coefficients", params);
        let identities = a.degree() == Some(top)
            && a.coeff(top).is_one()
            && a.coeff(top - 1) == BigInt::from(1) << (l - 2)
            && a.coeff(1).is_one()
            && a.coeff(0) == BigInt::from(0);
        rec.put("degree", a.degree().unwrap_or(0));
        let identities = rec.finish(Verdict::theorem(identities));

        let mut rec = RecordBuilder::new("valuation-bound", params);
        let mut ok = true;
        let mut tightest: Option<i64> = None;
        for i in 0..top {
            let bound = 2 * i as i64 + l as i64 - (1i64 << l);
            let v = crate::polyring::vp(&a.coeff(i), 2)?;
            let holds = match v.finite() {
                None => true,
                Some(v) if i + 2 <= top => (v as i64) > bound,
                Some(v) => (v as i64) == bound,
            };
            ok &= holds;
            if let (Some(v), true) = (v.finite(), i + 2 <= top) {
                let slack = v as i64 - bound;
                tightest = Some(tightest.map_or(slack, |t: i64| t.min(slack)));
            }
        }
        rec.put("min_slack", tightest.map_or("inf".to_string(), |s| s.to_string()));
        let bound = rec.finish(Verdict::theorem(ok));

        let mut out = vec![identities, bound];
        if l >= 3 {
            let mut rec = RecordBuilder::new("vj-bound", params);
            let limit = (1u64 << l) - 3;
            let ok = (1..=limit).all(|j| (1u64 << l) > j + u64::from(j.trailing_zeros()) + 1);
            rec.put("j_max", limit);
            out.push(rec.finish(Verdict::theorem(ok)));
        }
        Ok(out)
    })
}
