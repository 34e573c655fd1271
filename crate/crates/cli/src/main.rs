//! Command-line front end: exact logarithmic integrals, tiered binomial
//! coefficients, multiple zeta values, Nielsen polylogarithms, the
//! Quicksort limit law, and the oracle verification suites.
//!
//! Exit codes: 0 on success, 1 on computation failure (including failed
//! verification), 2 on usage errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use logzeta_core::error::{Error, Result};
use logzeta_core::logint::{i_exact, LogIntegralKey};
use logzeta_core::mzv::{zeta_hook, HookIndex};
use logzeta_core::nielsen::{nielsen_series, NielsenKey};
use logzeta_core::numeric::{eval_zeta_polynomial, mzv_numeric};
use logzeta_core::quicksort::{
    qs_moment, shifted_cumulants, simulate, CumulantTable,
};
use logzeta_core::tiered::{tier_generating_function, tier_sum, tiered, row_sum, RowSumRoute};
use logzeta_core::verify::{run_suite, Suite, SuiteParams};
use logzeta_core::{Rational, ZetaPolynomial};

#[derive(Parser)]
#[command(
    name = "logzeta",
    about = "Exact logarithmic integrals, tiered binomial coefficients, and the Quicksort limit law"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact I(n,m,i) = ∫₀¹ xⁱ lnⁿ(x) lnᵐ(1−x) dx as a polynomial in zeta values
    Logint(LogintArgs),
    /// Tiered binomial coefficient (n,m)_i, or a CSV table up to the given key
    Tiered(TieredArgs),
    /// Row sum Σ_{n+m=total} (n,m)_i by a selected route
    Rowsum(RowsumArgs),
    /// Tier sum Σ_{i=0}^{upper} (n,m)_i in closed form
    Tiersum(TiersumArgs),
    /// Multiple zeta value: exact reduction for hook indices, numeric otherwise
    Mzv(MzvArgs),
    /// Generalized Nielsen polylogarithm S(n,m,i;z), evaluated numerically
    Nielsen(NielsenArgs),
    /// Quicksort limit law: moments, cumulants, simulation
    Qs(QsArgs),
    /// Run oracle verification suites and print a JSON report
    Verify(VerifyArgs),
    /// Taylor table of a tier generating function f_i(x,y)
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExactFormat {
    /// Canonical text form, e.g. "7 - 4*zeta(2)"
    Text,
    /// JSON term list
    Json,
    /// Decimal evaluation at the requested precision
    Numeric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TieredFormat {
    Text,
    Json,
    /// Table of every (n',m')_{i'} with i' ≤ i and n'+m' ≤ n+m
    Csv,
}

#[derive(Args)]
struct LogintArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long, allow_negative_numbers = true)]
    i: i64,
    #[arg(long, value_enum, default_value_t = ExactFormat::Text)]
    format: ExactFormat,
    /// Decimal digits for --format numeric
    #[arg(long, env = "LOGZETA_PRECISION", default_value_t = 30)]
    prec: u32,
}

#[derive(Args)]
struct TieredArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    i: u32,
    #[arg(long, value_enum, default_value_t = TieredFormat::Text)]
    format: TieredFormat,
}

#[derive(Args)]
struct RowsumArgs {
    #[arg(long)]
    total: u32,
    #[arg(long)]
    i: u32,
    /// convolution, legendre, or bell
    #[arg(long, default_value = "convolution")]
    route: String,
}

#[derive(Args)]
struct TiersumArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    upper: u32,
}

#[derive(Args)]
struct MzvArgs {
    /// Comma-separated admissible index, e.g. 3,1,1
    #[arg(long, value_delimiter = ',', required = true)]
    index: Vec<u32>,
    /// Numeric evaluation instead of exact reduction
    #[arg(long)]
    numeric: bool,
    #[arg(long, env = "LOGZETA_PRECISION", default_value_t = 30)]
    prec: u32,
}

#[derive(Args)]
struct NielsenArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long, allow_negative_numbers = true)]
    i: i64,
    /// Argument as a rational, e.g. 1/2 or 1
    #[arg(long)]
    z: String,
    #[arg(long, env = "LOGZETA_PRECISION", default_value_t = 30)]
    prec: u32,
}

#[derive(Args)]
struct QsArgs {
    #[command(subcommand)]
    command: QsCommand,
}

#[derive(Subcommand)]
enum QsCommand {
    /// Exact moment E(Z^s) of the normalized comparison count
    Moments {
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = ExactFormat::Text)]
        format: ExactFormat,
        #[arg(long, env = "LOGZETA_PRECISION", default_value_t = 30)]
        prec: u32,
    },
    /// Cumulants κ₁..κ_s; with --shifted, the rational κ_s(Z) + κ_s(G)
    Cumulants {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        shifted: bool,
    },
    /// Deterministic Monte Carlo of quicksort comparison counts (JSON)
    Simulate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        runs: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// logint, tiered, mzv, nielsen, qs, or all
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 3)]
    max_n: u32,
    #[arg(long, default_value_t = 3)]
    max_m: u32,
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    max_i: i64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = 15)]
    prec: u32,
}

#[derive(Args)]
struct TableArgs {
    /// f1 or f2
    which: String,
    /// Total degree of the expansion
    #[arg(long, default_value_t = 4)]
    order: u32,
}

fn render_exact(p: &ZetaPolynomial, format: ExactFormat, prec: u32) -> String {
    match format {
        ExactFormat::Text => p.to_string(),
        ExactFormat::Json => serde_json::to_string(p).expect("polynomial serialization"),
        ExactFormat::Numeric => eval_zeta_polynomial(p, prec).to_string(),
    }
}

fn run_logint(a: &LogintArgs) -> Result<String> {
    let key = LogIntegralKey::new(a.n, a.m, a.i)?;
    Ok(render_exact(&i_exact(&key), a.format, a.prec))
}

fn run_tiered(a: &TieredArgs) -> Result<String> {
    match a.format {
        TieredFormat::Text => Ok(tiered(a.n, a.m, a.i).to_string()),
        TieredFormat::Json => {
            Ok(serde_json::to_string(&tiered(a.n, a.m, a.i)).expect("rational serialization"))
        }
        TieredFormat::Csv => {
            let mut out = String::from("n,m,i,value\n");
            for i in 0..=a.i {
                for total in 0..=a.n + a.m {
                    for n in 0..=total {
                        let m = total - n;
                        writeln!(out, "{n},{m},{i},{}", tiered(n, m, i)).expect("string write");
                    }
                }
            }
            out.pop();
            Ok(out)
        }
    }
}

fn run_mzv(a: &MzvArgs) -> Result<String> {
    if a.numeric {
        return Ok(mzv_numeric(&a.index, a.prec)?.to_string());
    }
    let hook_shaped = a.index.first().is_some_and(|&k| k >= 2)
        && a.index.iter().skip(1).all(|&k| k == 1);
    if !hook_shaped {
        return Err(Error::usage(
            "only hook indices (k,1,...,1) with k >= 2 reduce exactly; rerun with --numeric",
        ));
    }
    let hook = HookIndex::new(a.index[0] - 1, (a.index.len() - 1) as u32)?;
    Ok(zeta_hook(hook).to_string())
}

fn run_nielsen(a: &NielsenArgs) -> Result<String> {
    let z: Rational = a.z.parse()?;
    let key = NielsenKey::new(a.n, a.m, a.i, z)?;
    Ok(nielsen_series(&key, a.prec)?.to_string())
}

fn run_qs(a: &QsArgs) -> Result<String> {
    match &a.command {
        QsCommand::Moments { s, format, prec } => Ok(render_exact(&qs_moment(*s), *format, *prec)),
        QsCommand::Cumulants { s, shifted } => {
            let mut out = String::new();
            if *shifted {
                let a = shifted_cumulants(*s)?;
                for t in 1..=*s as usize {
                    writeln!(out, "a_{t} = {}", a[t]).expect("string write");
                }
            } else {
                let table = CumulantTable::up_to(*s);
                for t in 1..=*s {
                    writeln!(out, "kappa_{t} = {}", table.cumulant(t)).expect("string write");
                }
            }
            out.pop();
            Ok(out)
        }
        QsCommand::Simulate { n, runs, seed } => {
            Ok(serde_json::to_string(&simulate(*n, *runs, *seed)).expect("report serialization"))
        }
    }
}

fn run_verify(a: &VerifyArgs) -> Result<(String, String, i32)> {
    let suite: Suite = a.suite.parse()?;
    let params = SuiteParams {
        max_n: a.max_n,
        max_m: a.max_m,
        max_i: a.max_i,
        tol: a.tol,
        prec: a.prec,
    };
    let reports = run_suite(suite, &params)?;
    let passed = reports.iter().filter(|r| r.passed).count();
    let summary = format!("{passed}/{} checks passed", reports.len());
    let body = serde_json::to_string_pretty(&reports).expect("report serialization");
    let code = if passed == reports.len() { 0 } else { 1 };
    Ok((body, summary, code))
}

fn table_term(c: &Rational, n: u32, m: u32) -> String {
    let mut mono = String::new();
    if n > 0 {
        mono.push('x');
        if n > 1 {
            write!(mono, "^{n}").expect("string write");
        }
    }
    if m > 0 {
        if !mono.is_empty() {
            mono.push('*');
        }
        mono.push('y');
        if m > 1 {
            write!(mono, "^{m}").expect("string write");
        }
    }
    if mono.is_empty() {
        c.to_string()
    } else if *c == Rational::one() {
        mono
    } else {
        format!("{c}*{mono}")
    }
}

fn run_table(a: &TableArgs) -> Result<String> {
    let tier: u32 = match a.which.as_str() {
        "f1" => 1,
        "f2" => 2,
        other => {
            return Err(Error::usage(format!(
                "unknown table {other:?} (expected f1 or f2)"
            )))
        }
    };
    let gf = tier_generating_function(tier, a.order);
    let mut out = format!("f{tier}(x,y) through total degree {}\n", a.order);
    for total in 0..=a.order {
        let terms: Vec<String> = (0..=total)
            .rev()
            .map(|n| {
                let m = total - n;
                let c = gf.coeff(n, m).expect("within truncation order");
                table_term(&c, n, m)
            })
            .collect();
        writeln!(out, "deg {total}: {}", terms.join(" + ")).expect("string write");
    }
    out.pop();
    Ok(out)
}

fn run(cli: &Cli) -> Result<i32> {
    let output = match &cli.command {
        Command::Logint(a) => run_logint(a)?,
        Command::Tiered(a) => run_tiered(a)?,
        Command::Rowsum(a) => {
            let route: RowSumRoute = a.route.parse()?;
            row_sum(a.total, a.i, route).to_string()
        }
        Command::Tiersum(a) => tier_sum(a.n, a.m, a.upper).to_string(),
        Command::Mzv(a) => run_mzv(a)?,
        Command::Nielsen(a) => run_nielsen(a)?,
        Command::Qs(a) => run_qs(a)?,
        Command::Verify(a) => {
            let (body, summary, code) = run_verify(a)?;
            println!("{body}");
            eprintln!("{summary}");
            return Ok(code);
        }
        Command::Table(a) => run_table(a)?,
    };
    println!("{output}");
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Usage(_) => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}
