//! The `misi` command line.
//!
//! Exit codes: 0 when every proven statement checked out (conjecture
//! counterexamples only warn), 1 on a theorem violation or a Table 1
//! mismatch, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::harness::{
    check_2special_family, check_coefficient_lemmas, check_cross_identity, check_recurrence, check_special_resultants,
    check_unit_conjecture, compare_table1, growth_report, published_table1, table1, table1_csv,
    CheckRecord, DiskCache, Engine, GrowthReport, Kind, Summary, Table1Row, Verdict,
};
use crate::misiurewicz::MisSpec;
use crate::multiplier::p_closed;
use crate::polyring::{cyclotomic, parse_human, resultant, SpecPoly};
use crate::special::synthetic_corpus;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Seed of the synthetic p-special corpus used by `check special`.
pub const CORPUS_SEED: u64 = 0x5eed;
pub const CORPUS_SIZE: usize = 200;
pub const CORPUS_PRIMES: [u64; 3] = [2, 3, 5];
pub const CORPUS_MAX_DEGREE: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "misi", version, about = "Misiurewicz and multiplier polynomials for z^d + c")]
pub struct Cli {
    /// Directory for cached G and P polynomials [default: $MISI_CACHE_DIR]
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for sweeps [default: all cores]
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit one polynomial
    #[command(subcommand)]
    Gen(GenCmd),
    /// Resultant of two integer polynomials in one variable
    Res { a: String, b: String },
    /// Reproduce the table of floor(ln |Res(P_{m,n}, Phi_l)|)
    Table1 {
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification sweep
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Manage the polynomial cache
    #[command(subcommand)]
    Cache(CacheCmd),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct SpecArgs {
    #[arg(long, default_value_t = 2)]
    pub d: u64,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Exponent e selecting zeta = zeta_d^e
    #[arg(long, default_value_t = 1)]
    pub zeta: u64,
}

impl SpecArgs {
    fn spec(&self) -> Result<MisSpec> {
        MisSpec::new(self.d, self.m, self.n, self.zeta)
    }
}

#[derive(Subcommand, Debug)]
pub enum GenCmd {
    /// Misiurewicz polynomial G_{d,m,n}
    G(SpecArgs),
    /// Multiplier polynomial P_{d,m,n}
    P {
        #[command(flatten)]
        spec: SpecArgs,
        /// Use the d = 2 closed form (n = 1 or 2)
        #[arg(long)]
        closed: bool,
    },
    /// Cyclotomic polynomial Phi_l
    Phi {
        #[arg(long)]
        l: u64,
    },
    /// Critical-orbit polynomial a_i for z^d + c
    Orbit {
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Units,
    Cross,
    Special,
    Recurrence,
    Growth,
    /// Coefficient identities and 2-adic bounds for the orbit polynomials
    Lemmas,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct CheckOpts {
    /// Degree d (units, recurrence)
    #[arg(long)]
    pub d: Option<u64>,
    /// Largest m + n in the sweep
    #[arg(long)]
    pub max_mn: Option<usize>,
    /// Largest cyclotomic index (special) or orbit index (lemmas)
    #[arg(long)]
    pub lmax: Option<u64>,
    /// Largest j (recurrence)
    #[arg(long, default_value_t = 3)]
    pub jmax: usize,
}

#[derive(Subcommand, Debug)]
pub enum CacheCmd {
    /// Delete every cached polynomial
    Clear,
}

/// Default `max_mn` of the unit sweep for each `d`.
pub fn default_units_max_mn(d: u64) -> usize {
    match d {
        2 => 8,
        3 => 5,
        _ => 5,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn engine_for(cli: &Cli) -> Engine {
    match &cli.cache_dir {
        Some(dir) => Engine::with_disk(DiskCache::new(dir)),
        None => Engine::from_env(),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Error::InvalidParameter("--jobs must be at least 1".into()));
        }
        // A second call in the same process (tests) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let engine = engine_for(cli);
    match &cli.command {
        Command::Gen(cmd) => gen(&engine, cmd, cli.format, out),
        Command::Res { a, b } => res(a, b, cli.format, out),
        Command::Table1 { csv, json } => {
            let format = match (csv, json) {
                (true, _) => Format::Csv,
                (_, true) => Format::Json,
                _ => cli.format,
            };
            run_table1(&engine, format, out, err)
        }
        Command::Check { what, opts } => run_check(&engine, *what, opts, cli.format, out, err),
        Command::Cache(CacheCmd::Clear) => {
            let disk = match &cli.cache_dir {
                Some(dir) => DiskCache::new(dir),
                None => DiskCache::from_env().ok_or_else(|| {
                    Error::InvalidParameter("no cache directory: pass --cache-dir or set MISI_CACHE_DIR".into())
                })?,
            };
            let removed = disk.clear()?;
            writeln!(out, "removed {removed} cached polynomials from {}", disk.dir().display())?;
            Ok(EXIT_OK)
        }
    }
}

fn emit_poly(poly: &SpecPoly, var: &str, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", poly.to_human(var))?,
        Format::Json => writeln!(out, "{}", poly.to_json_string(var))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["degree", "coefficient"])?;
            let coeffs: Vec<String> = match poly {
                SpecPoly::Int(p) => p.coeffs().iter().map(|c| c.to_string()).collect(),
                SpecPoly::Cyc(p) => p.coeffs().iter().map(|c| c.residue().to_human("z")).collect(),
            };
            for (i, c) in coeffs.iter().enumerate() {
                w.write_record([i.to_string(), c.clone()])?;
            }
            out.write_all(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?)?;
        }
    }
    Ok(())
}

fn gen(engine: &Engine, cmd: &GenCmd, format: Format, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        GenCmd::G(args) => {
            let g = engine.g(&args.spec()?)?;
            emit_poly(&g, Kind::G.var(), format, out)?;
        }
        GenCmd::P { spec, closed } => {
            let spec = spec.spec()?;
            let poly = if *closed {
                let ctx = engine.orbit(spec.d)?;
                p_closed(&ctx, &spec)?
                    .ok_or_else(|| Error::InvalidParameter("closed forms exist only for d = 2, n <= 2".into()))?
                    .poly
            } else {
                (*engine.p(&spec)?).clone()
            };
            emit_poly(&poly, Kind::P.var(), format, out)?;
        }
        GenCmd::Phi { l } => {
            if *l == 0 {
                return Err(Error::InvalidParameter("l must be at least 1".into()));
            }
            emit_poly(&SpecPoly::Int(cyclotomic(*l)), "x", format, out)?;
        }
        GenCmd::Orbit { d, i } => {
            if *i == 0 {
                return Err(Error::InvalidParameter("orbit index starts at 1".into()));
            }
            let a = engine.orbit(*d)?.a(*i);
            emit_poly(&SpecPoly::Int((*a).clone()), "c", format, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn res(a: &str, b: &str, format: Format, out: &mut dyn Write) -> Result<i32> {
    let (pa, va) = parse_human(a)?;
    let (pb, vb) = parse_human(b)?;
    if let (Some(va), Some(vb)) = (&va, &vb) {
        if va != vb {
            return Err(Error::Parse(format!("variables differ: {va} vs {vb}")));
        }
    }
    let r = resultant(&pa, &pb)?;
    match format {
        Format::Text => writeln!(out, "{r}")?,
        Format::Json => writeln!(out, "{}", json!({ "resultant": r.to_string() }))?,
        Format::Csv => writeln!(out, "resultant\n{r}")?,
    }
    Ok(EXIT_OK)
}

fn table_text(rows: &[Table1Row]) -> String {
    let mut s = String::from("(m,n)  degP |");
    for l in 1..=rows.first().map_or(8, |r| r.floor_logs.len()) {
        s.push_str(&format!(" {:>4}", format!("l{l}")));
    }
    s.push('\n');
    for r in rows {
        s.push_str(&format!("({},{})  {:>4} |", r.m, r.n, r.deg_p));
        for v in &r.floor_logs {
            s.push_str(&format!(" {v:>4}"));
        }
        s.push('\n');
    }
    s
}

fn run_table1(engine: &Engine, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let rows = table1(engine)?;
    match format {
        Format::Csv => write!(out, "{}", table1_csv(&rows)?)?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&rows)?)?,
        Format::Text => write!(out, "{}", table_text(&rows))?,
    }
    let mismatches = compare_table1(&rows, &published_table1());
    if mismatches.is_empty() {
        return Ok(EXIT_OK);
    }
    writeln!(err, "{} cells differ from the published table:", mismatches.len())?;
    for mm in &mismatches {
        writeln!(
            err,
            "  ({},{}) {}: published {}, computed {}",
            mm.m,
            mm.n,
            mm.column,
            mm.expected.map_or("-".into(), |v| v.to_string()),
            mm.computed.map_or("-".into(), |v| v.to_string()),
        )?;
    }
    Ok(EXIT_VIOLATION)
}

fn emit_records(records: &[CheckRecord], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_ndjson())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check_id", "d", "m", "n", "l", "zeta_exp", "verdict", "elapsed_ms", "computed"])?;
            let opt = |v: Option<String>| v.unwrap_or_default();
            for r in records {
                let computed: Vec<String> = r.computed.iter().map(|(k, v)| format!("{k}={v}")).collect();
                w.write_record([
                    r.check_id.clone(),
                    opt(r.params.d.map(|v| v.to_string())),
                    opt(r.params.m.map(|v| v.to_string())),
                    opt(r.params.n.map(|v| v.to_string())),
                    opt(r.params.l.map(|v| v.to_string())),
                    opt(r.params.zeta_exp.map(|v| v.to_string())),
                    r.verdict.to_string(),
                    r.elapsed_ms.to_string(),
                    computed.join(";"),
                ])?;
            }
            out.write_all(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?)?;
        }
        Format::Text => {
            for r in records {
                let p = &r.params;
                let mut params = Vec::new();
                for (name, v) in [("d", p.d), ("m", p.m.map(|v| v as u64)), ("n", p.n.map(|v| v as u64)), ("l", p.l), ("e", p.zeta_exp)] {
                    if let Some(v) = v {
                        params.push(format!("{name}={v}"));
                    }
                }
                let computed: Vec<String> = r
                    .computed
                    .iter()
                    .map(|(k, v)| format!("{k}={}", abbreviate(v)))
                    .collect();
                writeln!(
                    out,
                    "{:<24} {:<26} {:<24} {}",
                    r.check_id,
                    params.join(" "),
                    r.verdict,
                    computed.join(" ")
                )?;
            }
            writeln!(out, "{}", Summary::of(records))?;
        }
    }
    Ok(())
}

/// Shortens long integers for the text view.
fn abbreviate(v: &str) -> String {
    if v.len() <= 40 {
        v.to_string()
    } else {
        format!("{}...{} ({} digits)", &v[..12], &v[v.len() - 12..], v.trim_start_matches('-').len())
    }
}

fn verdict_code(records: &[CheckRecord], err: &mut dyn Write) -> Result<i32> {
    let summary = Summary::of(records);
    if summary.conjecture_inconsistent > 0 {
        writeln!(
            err,
            "warning: {} conjecture counterexample(s) found",
            summary.conjecture_inconsistent
        )?;
    }
    if summary.fail > 0 {
        writeln!(err, "error: {} theorem check(s) failed", summary.fail)?;
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

fn run_check(
    engine: &Engine,
    what: CheckKind,
    opts: &CheckOpts,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let records = match what {
        CheckKind::Units => {
            let d = opts.d.unwrap_or(2);
            check_unit_conjecture(engine, d, opts.max_mn.unwrap_or_else(|| default_units_max_mn(d)))?
        }
        CheckKind::Cross => check_cross_identity(engine, opts.max_mn.unwrap_or(7))?,
        CheckKind::Special => {
            let max_mn = opts.max_mn.unwrap_or(9);
            let mut records = check_2special_family(engine, max_mn)?;
            let corpus = synthetic_corpus(CORPUS_SEED, CORPUS_SIZE, &CORPUS_PRIMES, CORPUS_MAX_DEGREE);
            records.extend(check_special_resultants(engine, max_mn, opts.lmax.unwrap_or(30), 4, &corpus)?);
            crate::harness::sort_records(&mut records);
            records
        }
        CheckKind::Recurrence => {
            let ds = match opts.d {
                Some(d) => vec![d],
                None => vec![2, 3],
            };
            check_recurrence(engine, &ds, &[2, 3, 4], &[1, 2], opts.jmax)?
        }
        CheckKind::Lemmas => check_coefficient_lemmas(engine, opts.lmax.unwrap_or(12) as usize)?,
        CheckKind::Growth => return run_growth(engine, format, out),
    };
    emit_records(&records, format, out)?;
    verdict_code(&records, err)
}

fn run_growth(engine: &Engine, format: Format, out: &mut dyn Write) -> Result<i32> {
    let report = growth_report(engine)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["m", "n", "l", "degP", "degPhi", "ratio"])?;
            for e in &report.entries {
                w.write_record([
                    e.m.to_string(),
                    e.n.to_string(),
                    e.l.to_string(),
                    e.deg_p.to_string(),
                    e.deg_phi.to_string(),
                    e.ratio.clone(),
                ])?;
            }
            out.write_all(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?)?;
        }
        Format::Text => write!(out, "{}", growth_text(&report))?,
    }
    // The bounds are empirical observations, not theorems.
    Ok(EXIT_OK)
}

fn growth_text(r: &GrowthReport) -> String {
    let show = |label: &str, e: &crate::harness::GrowthEntry| {
        format!("{label}: {} at (m,n)=({},{}), l={}\n", e.ratio, e.m, e.n, e.l)
    };
    let flag = |ok: bool| Verdict::conjecture(ok).to_string();
    let mut s = String::new();
    s.push_str(&show("min ratio", &r.min));
    s.push_str(&show("max ratio", &r.max));
    s.push_str(&show("max ratio, m+n > 4", &r.max_large));
    s.push_str(&format!("min >= 0.71: {}\n", flag(r.min_ok)));
    s.push_str(&format!("max <= 1.44: {}\n", flag(r.max_ok)));
    s.push_str(&format!("max <= 0.82 for m+n > 4: {}\n", flag(r.max_large_ok)));
    s
}
