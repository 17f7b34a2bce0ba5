//! Heights of `Res(P_{m,n}, Phi_l)` over the grid `m + n <= 7`,
//! `l = 1..8`, and the growth ratios derived from them.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::misiurewicz::MisSpec;
use crate::polyring::{cyclotomic, floor_log_abs, ln_at_least, ln_ratio_decimal, resultant, totient};

use super::checks::mn_grid;
use super::engine::Engine;

/// Largest `m + n` in the table.
pub const TABLE_MAX_MN: usize = 7;
/// Cyclotomic indices `1..=TABLE_LMAX`.
pub const TABLE_LMAX: u64 = 8;

/// The published table, transcribed.
pub const PUBLISHED_TABLE1_CSV: &str = include_str!("../../goldens/table1.csv");
/// The table as this crate computes it, kept as a regression golden.
pub const COMPUTED_TABLE1_CSV: &str = include_str!("../../goldens/table1_computed.csv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "degP")]
    pub deg_p: usize,
    pub floor_logs: Vec<u64>,
}

/// Exact resultants behind one table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantRow {
    pub m: usize,
    pub n: usize,
    pub deg_p: usize,
    /// `|Res(P_{m,n}, Phi_l)|` for `l = 1..=lmax`.
    pub abs_res: Vec<BigInt>,
}

/// `|Res(P_{m,n}, Phi_l)|` over the table grid, rows ordered by `m` then `n`.
pub fn table1_resultants(engine: &Engine, lmax: u64) -> Result<Vec<ResultantRow>> {
    mn_grid(1, TABLE_MAX_MN)
        .into_par_iter()
        .map(|(m, n)| {
            let p = engine.p(&MisSpec::quadratic(m, n))?;
            let p = p.as_int().expect("d = 2 polynomials have integer coefficients");
            let abs_res = (1..=lmax)
                .map(|l| Ok(num_traits::Signed::abs(&resultant(p, &cyclotomic(l))?)))
                .collect::<Result<_>>()?;
            Ok(ResultantRow {
                m,
                n,
                deg_p: p.degree().unwrap_or(0),
                abs_res,
            })
        })
        .collect()
}

pub fn rows_from_resultants(rows: &[ResultantRow]) -> Result<Vec<Table1Row>> {
    rows.iter()
        .map(|r| {
            Ok(Table1Row {
                m: r.m,
                n: r.n,
                deg_p: r.deg_p,
                floor_logs: r.abs_res.iter().map(floor_log_abs).collect::<Result<_>>()?,
            })
        })
        .collect()
}

/// The 15 rows of `floor(ln |Res(P_{m,n}, Phi_l)|)`.
pub fn table1(engine: &Engine) -> Result<Vec<Table1Row>> {
    rows_from_resultants(&table1_resultants(engine, TABLE_LMAX)?)
}

fn header(lmax: usize) -> Vec<String> {
    let mut h = vec!["m".to_string(), "n".into(), "degP".into()];
    h.extend((1..=lmax).map(|l| format!("l{l}")));
    h
}

/// CSV with columns `m,n,degP,l1,...`.
pub fn table1_csv(rows: &[Table1Row]) -> Result<String> {
    let lmax = rows.first().map_or(TABLE_LMAX as usize, |r| r.floor_logs.len());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header(lmax))?;
    for r in rows {
        let mut rec = vec![r.m.to_string(), r.n.to_string(), r.deg_p.to_string()];
        rec.extend(r.floor_logs.iter().map(u64::to_string));
        w.write_record(rec)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV output is ASCII"))
}

pub fn parse_table1_csv(text: &str) -> Result<Vec<Table1Row>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let nums: Vec<u64> = record
            .iter()
            .map(|f| f.trim().parse::<u64>().map_err(|e| Error::Parse(format!("{f:?}: {e}"))))
            .collect::<Result<_>>()?;
        if nums.len() < 4 {
            return Err(Error::Parse(format!("short table row: {nums:?}")));
        }
        rows.push(Table1Row {
            m: nums[0] as usize,
            n: nums[1] as usize,
            deg_p: nums[2] as usize,
            floor_logs: nums[3..].to_vec(),
        });
    }
    Ok(rows)
}

/// The published table.
pub fn published_table1() -> Vec<Table1Row> {
    parse_table1_csv(PUBLISHED_TABLE1_CSV).expect("bundled golden parses")
}

/// One differing cell; `column` is `degP` or `l1`..`l8`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Mismatch {
    pub m: usize,
    pub n: usize,
    pub column: String,
    pub expected: Option<u64>,
    pub computed: Option<u64>,
}

/// Cell-by-cell differences between two tables, keyed by `(m, n)`.
pub fn compare_table1(computed: &[Table1Row], expected: &[Table1Row]) -> Vec<Table1Mismatch> {
    let mut out = Vec::new();
    let mut keys: Vec<(usize, usize)> = computed.iter().chain(expected).map(|r| (r.m, r.n)).collect();
    keys.sort_unstable();
    keys.dedup();
    for (m, n) in keys {
        let find = |rows: &[Table1Row]| rows.iter().find(|r| r.m == m && r.n == n).cloned();
        let (c, e) = (find(computed), find(expected));
        let cells = |r: &Option<Table1Row>| -> Vec<Option<u64>> {
            match r {
                Some(r) => std::iter::once(Some(r.deg_p as u64))
                    .chain(r.floor_logs.iter().map(|&v| Some(v)))
                    .collect(),
                None => Vec::new(),
            }
        };
        let (cc, ec) = (cells(&c), cells(&e));
        for i in 0..cc.len().max(ec.len()) {
            let (a, b) = (cc.get(i).copied().flatten(), ec.get(i).copied().flatten());
            if a != b {
                out.push(Table1Mismatch {
                    m,
                    n,
                    column: if i == 0 { "degP".into() } else { format!("l{i}") },
                    expected: b,
                    computed: a,
                });
            }
        }
    }
    out
}

/// `ln |Res(P_{m,n}, Phi_l)| / (n deg P deg Phi_l)` for one cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthEntry {
    pub m: usize,
    pub n: usize,
    pub l: u64,
    pub deg_p: usize,
    pub deg_phi: u64,
    /// Truncated decimal rendering of the ratio.
    pub ratio: String,
    #[serde(skip)]
    abs_res: BigInt,
}

impl GrowthEntry {
    fn denom(&self) -> u64 {
        self.n as u64 * self.deg_p as u64 * self.deg_phi
    }

    /// Exact test of `ratio >= num / den`.
    pub fn at_least(&self, num: u64, den: u64) -> Result<bool> {
        ln_at_least(&self.abs_res, self.denom(), num, den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub entries: Vec<GrowthEntry>,
    pub min: GrowthEntry,
    pub max: GrowthEntry,
    /// Maximum over rows with `m + n > 4`.
    pub max_large: GrowthEntry,
    /// Every ratio is at least 0.71.
    pub min_ok: bool,
    /// Every ratio is at most 1.44.
    pub max_ok: bool,
    /// Every ratio with `m + n > 4` is at most 0.82.
    pub max_large_ok: bool,
}

/// Decimal places used when rendering ratios.
pub const RATIO_DIGITS: u32 = 30;

pub fn growth_from_resultants(rows: &[ResultantRow]) -> Result<GrowthReport> {
    let mut entries = Vec::new();
    for r in rows {
        for (i, res) in r.abs_res.iter().enumerate() {
            let l = i as u64 + 1;
            let deg_phi = totient(l);
            let denom = r.n as u64 * r.deg_p as u64 * deg_phi;
            entries.push(GrowthEntry {
                m: r.m,
                n: r.n,
                l,
                deg_p: r.deg_p,
                deg_phi,
                ratio: ln_ratio_decimal(res, denom, RATIO_DIGITS)?,
                abs_res: res.clone(),
            });
        }
    }
    // Fixed-width decimals with equal integer parts compare correctly as
    // strings; fall back to numeric comparison of the parsed integer part.
    let key = |e: &GrowthEntry| {
        let (int, frac) = e.ratio.split_once('.').unwrap_or((&e.ratio, ""));
        (int.parse::<u64>().unwrap_or(0), frac.to_string())
    };
    let pick = |it: &mut dyn Iterator<Item = &GrowthEntry>, max: bool| {
        let it = it.map(|e| (key(e), e));
        let best = if max {
            it.max_by(|a, b| a.0.cmp(&b.0))
        } else {
            it.min_by(|a, b| a.0.cmp(&b.0))
        };
        best.map(|(_, e)| e.clone())
    };
    let empty = || Error::InvalidParameter("growth report needs at least one entry".into());
    let min = pick(&mut entries.iter(), false).ok_or_else(empty)?;
    let max = pick(&mut entries.iter(), true).ok_or_else(empty)?;
    let max_large = pick(&mut entries.iter().filter(|e| e.m + e.n > 4), true).ok_or_else(empty)?;
    let mut min_ok = true;
    let mut max_ok = true;
    let mut max_large_ok = true;
    for e in &entries {
        min_ok &= e.at_least(71, 100)?;
        // ln of an integer > 1 is irrational, so ">= 1.44" fails only strictly
        max_ok &= !e.at_least(144, 100)?;
        if e.m + e.n > 4 {
            max_large_ok &= !e.at_least(82, 100)?;
        }
    }
    Ok(GrowthReport {
        entries,
        min,
        max,
        max_large,
        min_ok,
        max_ok,
        max_large_ok,
    })
}

/// Growth ratios over the Table 1 grid.
pub fn growth_report(engine: &Engine) -> Result<GrowthReport> {
    growth_from_resultants(&table1_resultants(engine, TABLE_LMAX)?)
}
