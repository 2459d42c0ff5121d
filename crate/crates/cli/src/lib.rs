//! Command-line front end for `rsumset`: parses fields, sets and polynomials,
//! runs one subcommand and prints a JSON or CSV report.
//!
//! Exit codes: 0 success, 1 a bound was violated, 2 bad input, 3 the
//! top-coefficient hypothesis does not hold.

pub mod error;
pub mod parse;
pub mod print;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rsumset::bounds::theorem1_bound;
use rsumset::multiplicity::{lemma1_check, profile, squarefree_decompose, LemmaVerdict};
use rsumset::sumset::{restricted_sumset, sweep, verify_instance, Pairing, SweepConfig, SweepMode};
use serde_json::Value;

pub use error::{exit, CliError};

#[derive(Parser, Debug)]
#[command(name = "rsumset", version, about = "Lower bounds and brute-force checks for restricted sumsets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Lower bound on |C| for sets of the given sizes.
    Bound(BoundArgs),
    /// Compute C for explicit sets and compare with the bound.
    Verify(VerifyArgs),
    /// Check the bound over many set pairs.
    Sweep(SweepArgs),
    /// Root-multiplicity profile of a univariate polynomial.
    Profile(ProfileArgs),
    /// Which alternative of the coefficient-gap lemma holds.
    Lemma1(LemmaArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PairingArg {
    Independent,
    Diagonal,
}

#[derive(Args, Debug)]
struct Common {
    /// `p`, `p^n`, `p^n/<modulus in x>` or `Q`.
    #[arg(long)]
    field: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    poly: String,
    #[arg(long)]
    na: usize,
    #[arg(long)]
    nb: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    poly: String,
    #[arg(long = "A")]
    a: String,
    #[arg(long = "B")]
    b: String,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// May be repeated.
    #[arg(long, required = true)]
    poly: Vec<String>,
    /// Size or inclusive range such as `1..4`.
    #[arg(long)]
    na: String,
    /// Size or inclusive range; ignored for diagonal pairing.
    #[arg(long)]
    nb: Option<String>,
    #[arg(long, value_enum, default_value = "independent")]
    pairing: PairingArg,
    /// Draw this many random instances instead of enumerating.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Refuse exhaustive sweeps with more instances than this.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u128,
}

#[derive(Args, Debug)]
struct ProfileArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    upoly: String,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    upoly: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
}

struct Output {
    body: Vec<u8>,
    code: u8,
}

fn emit(common: &Common, value: &Value, code: u8) -> Result<Output, CliError> {
    let mut body = Vec::new();
    match common.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut body, value).expect("in-memory write");
            body.push(b'\n');
        }
        Format::Csv => report::single_row_csv(&mut body, value)?,
    }
    Ok(Output { body, code })
}

fn run_bound(args: &BoundArgs) -> Result<Output, CliError> {
    let ctx = parse::parse_field(&args.common.field)?;
    let p = parse::parse_poly(&args.poly, &ctx)?;
    let r = theorem1_bound(&p, args.na, args.nb)?;
    emit(&args.common, &report::bound(&ctx, &p, &r), exit::OK)
}

fn run_verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let ctx = parse::parse_field(&args.common.field)?;
    let p = parse::parse_poly(&args.poly, &ctx)?;
    let a = parse::parse_set(&args.a, &ctx)?;
    let b = parse::parse_set(&args.b, &ctx)?;
    let v = verify_instance(&a, &b, &p)?;
    let c = restricted_sumset(&a, &b, &p)?;
    let value = report::verify(&ctx, &p, &print::set(&a), &print::set(&b), &print::set(&c), &v);
    emit(&args.common, &value, if v.ok { exit::OK } else { exit::VIOLATION })
}

fn run_sweep(args: &SweepArgs) -> Result<Output, CliError> {
    let ctx = parse::parse_field(&args.common.field)?;
    let polys = args.poly.iter().map(|s| parse::parse_poly(s, &ctx)).collect::<Result<Vec<_>, _>>()?;
    let na = parse::parse_range(&args.na)?;
    let pairing = match args.pairing {
        PairingArg::Independent => Pairing::Independent,
        PairingArg::Diagonal => Pairing::Diagonal,
    };
    let nb = match (&args.nb, pairing) {
        (Some(s), _) => parse::parse_range(s)?,
        (None, Pairing::Diagonal) => na.clone(),
        (None, Pairing::Independent) => return Err(CliError::Usage("--nb is required unless --pairing diagonal".into())),
    };
    let mode = match args.samples {
        Some(samples) => SweepMode::Random { seed: args.seed, samples },
        None => SweepMode::Exhaustive { budget: args.budget },
    };
    let cfg = SweepConfig { ctx, polys, na, nb, pairing, mode };
    let rep = sweep(&cfg)?;
    let code = if rep.violations > 0 { exit::VIOLATION } else { exit::OK };
    match args.common.format {
        Format::Json => emit(&args.common, &report::sweep(&cfg, &rep), code),
        Format::Csv => {
            let mut body = Vec::new();
            report::sweep_csv(&mut body, &cfg, &rep)?;
            Ok(Output { body, code })
        }
    }
}

fn run_profile(args: &ProfileArgs) -> Result<Output, CliError> {
    let ctx = parse::parse_field(&args.common.field)?;
    let p = parse::parse_upoly(&args.upoly, &ctx)?;
    let prof = profile(&p)?;
    let dec = squarefree_decompose(&p)?;
    emit(&args.common, &report::profile(&ctx, &p, &prof, &dec), exit::OK)
}

fn run_lemma(args: &LemmaArgs) -> Result<Output, CliError> {
    let ctx = parse::parse_field(&args.common.field)?;
    let p = parse::parse_upoly(&args.upoly, &ctx)?;
    let v = lemma1_check(&p, args.k, args.l)?;
    let code = if v == LemmaVerdict::Violation { exit::VIOLATION } else { exit::OK };
    emit(&args.common, &report::lemma1(&ctx, &p, args.k, args.l, v), code)
}

/// Runs one command line. Reports go to `out` (or `--out`), diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return exit::INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return exit::OK;
        }
    };
    let (common, result) = match &cli.cmd {
        Cmd::Bound(a) => (&a.common, run_bound(a)),
        Cmd::Verify(a) => (&a.common, run_verify(a)),
        Cmd::Sweep(a) => (&a.common, run_sweep(a)),
        Cmd::Profile(a) => (&a.common, run_profile(a)),
        Cmd::Lemma1(a) => (&a.common, run_lemma(a)),
    };
    let written = result.and_then(|o| {
        match &common.out {
            Some(path) => std::fs::write(path, &o.body)?,
            None => out.write_all(&o.body)?,
        }
        Ok(o.code)
    });
    match written {
        Ok(code) => {
            if code == exit::VIOLATION {
                let _ = writeln!(err, "bound violated");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
