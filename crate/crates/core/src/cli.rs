//! The `pyth` command line.
//!
//! Exit codes: 0 when every checked property held, 1 when a mathematical
//! violation was found (its witness goes to stderr and into the records),
//! 2 for usage or configuration errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::classifier::{census, classify, verify_theorem1, GptClass};
use crate::error::{Error, Result};
use crate::jesmanowicz::{lemma1_scan, theorem2_check, SearchOptions, Verdict};
use crate::modular::DEFAULT_MODULI;
use crate::report::{
    lemma1_csv_rows, CensusRecord, CheckRecord, ClassifyRecord, Format, GenerateRecord,
    RecordWriter, Theorem1Record, CENSUS_COLUMNS, CHECK_COLUMNS, CLASSIFY_COLUMNS,
    GENERATE_COLUMNS, LEMMA1_COLUMNS, THEOREM1_COLUMNS,
};
use crate::triples::{enumerate_primitive, PythTriple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Triples per parallel batch; output order is restored within each batch.
const BATCH: usize = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "pyth",
    version,
    about = "Primitive Pythagorean triples, their (3,4,5) residue classes, and bounded search for a^x + b^y = c^z",
    after_help = "CSV columns:\n  generate         s,t,a,b,c\n  classify         a,b,c,class\n  verify-theorem1  a,b,c,product_div_60,c_not_div_3,class\n  census           class,count\n  check            a,b,c,class,bound,verdict,solutions\n  lemma1-scan      s,t,system,x,y,z\n\nClasses:\n  K1  3|a, 4|b, 5|c\n  K2  4|b, 15|a\n  K3  12|b, 5|c\n  K4  12|b, 5|a\n  K5  3|a, 20|b\n  K6  60|b\n\nExit codes: 0 ok, 1 violation found (witness on stderr), 2 usage error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List primitive triples with c ≤ c-max, ordered by (c, a).
    Generate(TripleArgs),
    /// Assign each triple its class K1..K6.
    Classify(TripleArgs),
    /// Check 60 | abc, 3 ∤ c and the class partition for each triple.
    #[command(name = "verify-theorem1")]
    VerifyTheorem1(TripleArgs),
    /// Count triples per class.
    Census(TripleArgs),
    /// Search a^x + b^y = c^z for each triple and give a verdict.
    Check(CheckArgs),
    /// Exhaust the auxiliary (s, t) systems for small exponents.
    #[command(name = "lemma1-scan")]
    Lemma1Scan(Lemma1Args),
}

#[derive(Debug, Clone, Args)]
pub struct TripleArgs {
    /// Largest hypotenuse.
    #[arg(long = "c-max")]
    pub c_max: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OnOff {
    On,
    Off,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub triples: TripleArgs,

    /// Exponent bound: search 1 ≤ x, y, z ≤ bound.
    #[arg(long, default_value_t = 60)]
    pub bound: u32,

    /// Comma-separated sieve moduli, or "none".
    #[arg(long, default_value = "5,8,16,3,13,7,9,11")]
    pub moduli: String,

    /// Re-run the naive engine and compare, for triples with c ≤ crosscheck-limit.
    #[arg(long = "oracle-crosscheck", value_enum, default_value_t = OnOff::On)]
    pub oracle_crosscheck: OnOff,

    #[arg(long = "crosscheck-limit", default_value_t = 100)]
    pub crosscheck_limit: u64,

    /// Only check these classes, e.g. K1,K3.
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct Lemma1Args {
    #[arg(long = "s-max", default_value_t = 20)]
    pub s_max: u64,
    /// Exponent bound for X, Y, Z.
    #[arg(long, default_value_t = 6)]
    pub bound: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcommandKind {
    Generate,
    Classify,
    Census,
    VerifyTheorem1,
    Check,
    Lemma1Scan,
}

/// Validated run configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub subcommand: SubcommandKind,
    pub c_max: BigUint,
    pub exponent_bound: u32,
    pub moduli: Vec<u64>,
    pub format: Format,
    pub jobs: usize,
    pub oracle_crosscheck: bool,
    pub crosscheck_limit: u64,
    pub classes: Vec<GptClass>,
    pub s_max: u64,
}

fn parse_moduli(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() || s.eq_ignore_ascii_case("none") {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|m| {
            let m: u64 = m.trim().parse().map_err(|_| Error::Domain(format!("bad modulus {m:?}")))?;
            if m < 2 {
                return Err(Error::Domain(format!("modulus must be at least 2, got {m}")));
            }
            Ok(m)
        })
        .collect()
}

fn parse_class(s: &str) -> Result<GptClass> {
    GptClass::ALL
        .into_iter()
        .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
        .ok_or_else(|| Error::Domain(format!("unknown class {s:?}")))
}

impl TryFrom<Cli> for RunConfig {
    type Error = Error;

    fn try_from(cli: Cli) -> Result<Self> {
        if cli.jobs == 0 {
            return Err(Error::Domain("--jobs must be at least 1".into()));
        }
        let mut cfg = RunConfig {
            subcommand: SubcommandKind::Generate,
            c_max: BigUint::default(),
            exponent_bound: 60,
            moduli: DEFAULT_MODULI.to_vec(),
            format: cli.format,
            jobs: cli.jobs,
            oracle_crosscheck: true,
            crosscheck_limit: 100,
            classes: Vec::new(),
            s_max: 20,
        };
        let triple_args = match cli.command {
            Command::Generate(t) => {
                cfg.subcommand = SubcommandKind::Generate;
                Some(t)
            }
            Command::Classify(t) => {
                cfg.subcommand = SubcommandKind::Classify;
                Some(t)
            }
            Command::Census(t) => {
                cfg.subcommand = SubcommandKind::Census;
                Some(t)
            }
            Command::VerifyTheorem1(t) => {
                cfg.subcommand = SubcommandKind::VerifyTheorem1;
                Some(t)
            }
            Command::Check(c) => {
                cfg.subcommand = SubcommandKind::Check;
                if c.bound < 2 {
                    return Err(Error::Domain("--bound must be at least 2".into()));
                }
                cfg.exponent_bound = c.bound;
                cfg.moduli = parse_moduli(&c.moduli)?;
                cfg.oracle_crosscheck = c.oracle_crosscheck == OnOff::On;
                cfg.crosscheck_limit = c.crosscheck_limit;
                cfg.classes = c.classes.iter().map(|s| parse_class(s)).collect::<Result<_>>()?;
                Some(c.triples)
            }
            Command::Lemma1Scan(l) => {
                cfg.subcommand = SubcommandKind::Lemma1Scan;
                if l.s_max < 2 || l.bound < 1 {
                    return Err(Error::Domain("--s-max must be at least 2 and --bound at least 1".into()));
                }
                cfg.s_max = l.s_max;
                cfg.exponent_bound = l.bound;
                None
            }
        };
        if let Some(t) = triple_args {
            if t.c_max == BigUint::default() {
                return Err(Error::Domain("--c-max must be positive".into()));
            }
            cfg.c_max = t.c_max;
        }
        Ok(cfg)
    }
}

/// Parses `args` (including the program name) and runs.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match RunConfig::try_from(cli) {
        Ok(cfg) => run(&cfg, out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Executes `cfg`, streaming records to `out` and diagnostics to `err`.
pub fn run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cfg, &pool, out, err) {
        Ok(0) => EXIT_OK,
        Ok(_) => EXIT_VIOLATION,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Maps each batch of the triple stream in parallel and hands the results,
/// in stream order, to `emit`.
fn for_each_batch<R: Send>(
    pool: &rayon::ThreadPool,
    c_max: &BigUint,
    work: impl Fn(&PythTriple) -> R + Sync,
    mut emit: impl FnMut(&PythTriple, R) -> Result<()>,
) -> Result<()> {
    let mut stream = enumerate_primitive(c_max);
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        batch.extend(stream.by_ref().take(BATCH));
        if batch.is_empty() {
            return Ok(());
        }
        let results: Vec<R> = pool.install(|| batch.par_iter().map(&work).collect());
        for (tr, r) in batch.iter().zip(results) {
            emit(tr, r)?;
        }
    }
}

/// Returns the number of violations found.
fn dispatch(
    cfg: &RunConfig,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u64> {
    let mut violations = 0u64;
    match cfg.subcommand {
        SubcommandKind::Generate => {
            let mut w = RecordWriter::new(out, cfg.format, GENERATE_COLUMNS)?;
            for (p, tr) in enumerate_primitive(&cfg.c_max).with_params() {
                let rec = GenerateRecord { params: &p, triple: &tr };
                w.write(&rec, &rec.csv())?;
            }
            w.finish()?;
        }
        SubcommandKind::Classify => {
            let mut w = RecordWriter::new(out, cfg.format, CLASSIFY_COLUMNS)?;
            for_each_batch(pool, &cfg.c_max, classify, |tr, class| {
                if let Err(e) = &class {
                    violations += 1;
                    writeln!(err, "violation: {e}")?;
                }
                let rec = ClassifyRecord::new(tr, class.ok());
                w.write(&rec, &rec.csv())
            })?;
            w.finish()?;
        }
        SubcommandKind::VerifyTheorem1 => {
            let mut w = RecordWriter::new(out, cfg.format, THEOREM1_COLUMNS)?;
            for_each_batch(pool, &cfg.c_max, verify_theorem1, |_, report| {
                if !report.holds() {
                    violations += 1;
                    writeln!(
                        err,
                        "violation: {} product_div_60={} c_not_div_3={} class={:?}",
                        report.triple, report.product_div_60, report.c_not_div_3, report.gpt_class
                    )?;
                }
                let rec = Theorem1Record::new(&report);
                w.write(&rec, &rec.csv())
            })?;
            w.finish()?;
        }
        SubcommandKind::Census => {
            let c = pool.install(|| census(&cfg.c_max));
            for v in &c.violations {
                writeln!(err, "violation: {} matched {:?}", v.triple, v.matched)?;
            }
            violations += c.violations.len() as u64;
            match cfg.format {
                Format::Json => {
                    let mut w = RecordWriter::new(out, cfg.format, CENSUS_COLUMNS)?;
                    w.write(&CensusRecord::new(&cfg.c_max, &c), &[])?;
                    w.finish()?;
                }
                Format::Csv => {
                    let mut w = RecordWriter::new(out, cfg.format, CENSUS_COLUMNS)?;
                    for row in CensusRecord::csv_rows(&c) {
                        w.write(&(), &row)?;
                    }
                    w.finish()?;
                }
            }
            writeln!(err, "census: {} triples with c <= {}", c.total(), cfg.c_max)?;
        }
        SubcommandKind::Check => violations += run_check(cfg, pool, out, err)?,
        SubcommandKind::Lemma1Scan => {
            let r = lemma1_scan(cfg.s_max, cfg.exponent_bound);
            for h in &r.hits {
                writeln!(err, "violation: nontrivial solution {h:?}")?;
            }
            violations += r.hits.len() as u64;
            let mut w = RecordWriter::new(out, cfg.format, LEMMA1_COLUMNS)?;
            match cfg.format {
                Format::Json => w.write(&r, &[])?,
                Format::Csv => {
                    for row in lemma1_csv_rows(&r) {
                        w.write(&(), &row)?;
                    }
                }
            }
            w.finish()?;
            writeln!(
                err,
                "lemma1-scan: {} pairs, {} trivial solutions confirmed, {} nontrivial hits",
                r.pairs_scanned,
                r.trivial_confirmed,
                r.hits.len()
            )?;
        }
    }
    Ok(violations)
}

fn run_check(
    cfg: &RunConfig,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u64> {
    let mut w = RecordWriter::new(out, cfg.format, CHECK_COLUMNS)?;
    let mut violations = 0;
    let (mut pass, mut fail, mut na) = (0u64, 0u64, 0u64);
    let limit = BigUint::from(cfg.crosscheck_limit);
    let work = |tr: &PythTriple| -> Option<Result<_>> {
        if !cfg.classes.is_empty() {
            match classify(tr) {
                Ok(k) if !cfg.classes.contains(&k) => return None,
                _ => {}
            }
        }
        // the exponent-shape layer only prunes where the oracle audits it
        let audited = cfg.oracle_crosscheck && *tr.c() <= limit;
        let opts = SearchOptions {
            moduli: cfg.moduli.clone(),
            lemma2_layer: audited,
            oracle_crosscheck: audited,
        };
        Some(theorem2_check(tr, cfg.exponent_bound, &opts))
    };
    for_each_batch(pool, &cfg.c_max, work, |_, outcome| {
        let outcome = match outcome {
            None => return Ok(()),
            Some(Ok(o)) => o,
            Some(Err(e @ (Error::SieveSoundnessViolation { .. } | Error::PartitionViolation { .. }))) => {
                violations += 1;
                writeln!(err, "violation: {e}")?;
                return Ok(());
            }
            Some(Err(e)) => return Err(e),
        };
        match outcome.verdict {
            Verdict::Pass => pass += 1,
            Verdict::NotApplicable => na += 1,
            Verdict::Fail => {
                fail += 1;
                violations += 1;
                writeln!(
                    err,
                    "violation: {} has extra solutions {:?}",
                    outcome.report.triple, outcome.extra_solutions
                )?;
            }
        }
        if !outcome.report.lemma2_violations.is_empty() {
            writeln!(
                err,
                "note: {} has solutions outside the exponent-shape predicate: {:?}; layer disabled",
                outcome.report.triple, outcome.report.lemma2_violations
            )?;
        }
        let rec = CheckRecord::new(&outcome);
        w.write(&rec, &rec.csv())
    })?;
    w.finish()?;
    writeln!(err, "check: {pass} PASS, {fail} FAIL, {na} NOT_APPLICABLE")?;
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(std::iter::once("pyth").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parse_moduli_variants() {
        assert_eq!(parse_moduli("5,8").unwrap(), vec![5, 8]);
        assert!(parse_moduli("none").unwrap().is_empty());
        assert!(parse_moduli("").unwrap().is_empty());
        assert!(parse_moduli("5,1").is_err());
        assert!(parse_moduli("5,x").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["census"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["census", "--c-max", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["census", "--c-max", "10", "--jobs", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["check", "--c-max", "10", "--moduli", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["check", "--c-max", "10", "--classes", "K9"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("s,t,a,b,c"));
    }
}
