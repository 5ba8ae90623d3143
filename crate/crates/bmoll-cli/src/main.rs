//! Command-line front end: coefficient rows, verification suites,
//! conjecture scans, the ratio table, the Bessel example, and the
//! quartic-integral cross-check, as text, JSON, or CSV.
//!
//! Exit codes, for CI use: 0 when every non-vacuous check passes (or the
//! quadrature is inconclusive without `--strict-integral`), 1 when any
//! counterexample or failure is found, 2 on usage errors including
//! malformed cache files and unknown check names.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bmoll::exact::{render_decimal, Value};
use bmoll::integral::{integral_residual, QuadratureConfig};
use bmoll::report::{CheckId, ScanReport};
use bmoll::rows::{CoeffRow, RowCache, RowSource};
use bmoll::verify;

/// Largest accepted scan index; keeps run times sane and index arithmetic
/// comfortably inside 64-bit intermediates.
const M_LIMIT: u32 = 10_000;

#[derive(Parser)]
#[command(
    name = "bmoll",
    version,
    about = "Exact Boros-Moll coefficient computation and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one coefficient row d_0(m)..d_m(m) exactly.
    Row(RowArgs),
    /// Run exact verification suites over an m-range.
    Verify(VerifyArgs),
    /// Scan the two conjectures on {d_{i+1} d_{i-1} / d_i^2}.
    Scan(ScanArgs),
    /// Print the c_i(m)/u_i(m) ratio table for one m.
    Table(TableArgs),
    /// Check the Bessel rows for log-concavity and reverse ultra
    /// log-concavity.
    Bessel(BesselArgs),
    /// Cross-check the quartic-integral identity by adaptive quadrature.
    Integral(IntegralArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Decimal places in display renderings (round half to even).
    #[arg(long, default_value_t = 6)]
    float_digits: u32,
}

#[derive(Args)]
struct CacheArgs {
    /// Row-cache file (tab-separated m, i, numerator, denominator).
    #[arg(long)]
    cache_path: Option<PathBuf>,
}

#[derive(Args)]
struct RowArgs {
    /// Row index m.
    #[arg(long)]
    m: u32,
    /// Computation route.
    #[arg(long, value_enum, default_value = "recurrence")]
    source: SourceArg,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    cache: CacheArgs,
    /// Write all cached rows back to --cache-path after computing.
    #[arg(long, requires = "cache_path")]
    write_cache: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    /// Closed-form double sum.
    Closed,
    /// First-order recurrence (or the cache, when available).
    Recurrence,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    m_min: u32,
    #[arg(long, default_value_t = 100)]
    m_max: u32,
    /// Comma-separated check names; `default`, `all`, and `identities`
    /// expand to groups. Run `verify --checks help` to list names.
    #[arg(long, default_value = "default")]
    checks: String,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 6)]
    m_min: u32,
    #[arg(long, default_value_t = 150)]
    m_max: u32,
    /// Override the binomial parameter n (default: m-4 after reindexing).
    #[arg(long)]
    n_override: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    m: u32,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct BesselArgs {
    #[arg(long, default_value_t = 50)]
    n_max: u32,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct IntegralArgs {
    #[arg(long)]
    m: u32,
    /// Parameter a (must exceed -1).
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    /// Acceptance threshold on the relative residual.
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
    /// Internal quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    quad_tol: f64,
    /// Maximum adaptive refinement depth.
    #[arg(long, default_value_t = 48)]
    max_depth: u32,
    /// Treat an inconclusive quadrature as a failure.
    #[arg(long)]
    strict_integral: bool,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    cache: CacheArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Row(args) => run_row(args),
        Command::Verify(args) => run_verify(args),
        Command::Scan(args) => run_scan(args),
        Command::Table(args) => run_table(args),
        Command::Bessel(args) => run_bessel(args),
        Command::Integral(args) => run_integral(args),
    }
}

fn check_common(output: &OutputArgs, m_max: u32) -> Result<(), String> {
    if output.float_digits < 1 {
        return Err("--float-digits must be at least 1".into());
    }
    if m_max > M_LIMIT {
        return Err(format!("m range exceeds the supported limit {M_LIMIT}"));
    }
    Ok(())
}

fn open_cache(cache: &CacheArgs) -> Result<RowCache, String> {
    match &cache.cache_path {
        Some(path) if path.exists() => RowCache::load(path).map_err(|e| e.to_string()),
        _ => Ok(RowCache::new()),
    }
}

fn emit_report(mut report: ScanReport, output: &OutputArgs, started: Instant) -> bool {
    report.config.float_digits = output.float_digits;
    report.wall_time_ms = started.elapsed().as_millis() as u64;
    let body = match output.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    print!("{body}");
    report.all_passed()
}

fn run_row(args: RowArgs) -> Result<bool, String> {
    check_common(&args.output, args.m)?;
    let digits = args.output.float_digits;
    let mut cache = open_cache(&args.cache)?;
    let row: CoeffRow = match args.source {
        SourceArg::Closed => CoeffRow::closed_form(args.m),
        SourceArg::Recurrence => cache.row(args.m).clone(),
    };
    if args.write_cache {
        if matches!(args.source, SourceArg::Closed) {
            cache.row(args.m);
        }
        let path = args.cache.cache_path.as_ref().expect("clap requires");
        cache.save(path).map_err(|e| e.to_string())?;
    }
    let mut out = String::new();
    match args.output.format {
        Format::Text => {
            for (i, c) in row.coeffs().iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}/{}\t{}",
                    row.m(),
                    i,
                    c.numer(),
                    c.denom(),
                    render_decimal(c, digits)
                );
            }
        }
        Format::Csv => {
            for (i, c) in row.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{},{},{},{}", row.m(), i, c.numer(), c.denom());
            }
        }
        Format::Json => {
            let coefficients: Vec<serde_json::Value> = row
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    serde_json::json!({
                        "i": i,
                        "numerator": c.numer().to_string(),
                        "denominator": c.denom().to_string(),
                        "display": render_decimal(c, digits),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "command": "row",
                "m": row.m(),
                "source": source_name(row.source()),
                "coefficients": coefficients,
            });
            out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
        }
    }
    print!("{out}");
    Ok(true)
}

fn source_name(source: RowSource) -> &'static str {
    source.name()
}

fn parse_checks(names: &str) -> Result<Vec<CheckId>, String> {
    if names.trim() == "help" {
        let names: Vec<&str> = verify::verify_check_set()
            .iter()
            .map(|c| c.name())
            .collect();
        return Err(format!(
            "available checks: {} (plus the groups default, all, identities)",
            names.join(", ")
        ));
    }
    verify::parse_check_list(names).map_err(|e| e.to_string())
}

fn run_verify(args: VerifyArgs) -> Result<bool, String> {
    check_common(&args.output, args.m_max)?;
    let checks = parse_checks(&args.checks)?;
    if args.m_min < 2 || args.m_min > args.m_max {
        return Err(format!(
            "need 2 <= m-min <= m-max, got {}..{}",
            args.m_min, args.m_max
        ));
    }
    let started = Instant::now();
    let mut cache = open_cache(&args.cache)?;
    let opts = verify::VerifyOptions {
        m_min: args.m_min,
        m_max: args.m_max,
        checks,
        float_digits: args.output.float_digits,
    };
    let report = verify::run_checks(&opts, &mut cache).map_err(|e| e.to_string())?;
    Ok(emit_report(report, &args.output, started))
}

fn run_scan(args: ScanArgs) -> Result<bool, String> {
    check_common(&args.output, args.m_max)?;
    if args.m_min < 2 || args.m_min > args.m_max {
        return Err(format!(
            "need 2 <= m-min <= m-max, got {}..{}",
            args.m_min, args.m_max
        ));
    }
    let started = Instant::now();
    let mut cache = open_cache(&args.cache)?;
    let report = verify::scan_conjectures(args.m_min, args.m_max, &mut cache, args.n_override)
        .map_err(|e| e.to_string())?;
    Ok(emit_report(report, &args.output, started))
}

fn run_bessel(args: BesselArgs) -> Result<bool, String> {
    check_common(&args.output, args.n_max)?;
    if args.n_max < 2 {
        return Err("need --n-max >= 2".into());
    }
    let started = Instant::now();
    let report = verify::verify_bessel(args.n_max).map_err(|e| e.to_string())?;
    Ok(emit_report(report, &args.output, started))
}

fn run_table(args: TableArgs) -> Result<bool, String> {
    check_common(&args.output, args.m)?;
    let digits = args.output.float_digits;
    let mut cache = open_cache(&args.cache)?;
    let rows = verify::table_rows(args.m, &mut cache).map_err(|e| e.to_string())?;
    let mono = verify::monotonicity_verdicts(args.m, &mut cache).map_err(|e| e.to_string())?;
    let increasing = mono.iter().all(|v| v.pass);
    let mut out = String::new();
    match args.output.format {
        Format::Text => {
            for row in &rows {
                let _ = writeln!(out, "{}\t{}", row.i, render_decimal(&row.ratio, digits));
            }
            let _ = writeln!(out, "strictly-increasing: {increasing}");
        }
        Format::Csv => {
            let _ = writeln!(
                out,
                "m,i,ratio,c_numerator,c_denominator,u_numerator,u_denominator"
            );
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    args.m,
                    row.i,
                    render_decimal(&row.ratio, digits),
                    row.c.numer(),
                    row.c.denom(),
                    row.u.numer(),
                    row.u.denom()
                );
            }
        }
        Format::Json => {
            let table: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "i": row.i,
                        "c": fraction_doc(&Value::from(row.c.clone())),
                        "u": fraction_doc(&Value::from(row.u.clone())),
                        "ratio": fraction_doc(&Value::from(row.ratio.clone())),
                        "display": render_decimal(&row.ratio, digits),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "command": "table",
                "m": args.m,
                "float_digits": digits,
                "rows": table,
                "strictly_increasing": increasing,
            });
            out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
        }
    }
    print!("{out}");
    Ok(true)
}

fn fraction_doc(v: &Value) -> serde_json::Value {
    let (num, den) = v.as_fraction_strings().expect("rational");
    serde_json::json!({ "numerator": num, "denominator": den })
}

fn run_integral(args: IntegralArgs) -> Result<bool, String> {
    check_common(&args.output, args.m)?;
    let tol_ok = args.tolerance.is_finite() && args.tolerance > 0.0;
    let quad_ok = args.quad_tol.is_finite() && args.quad_tol > 0.0;
    if !tol_ok || !quad_ok {
        return Err("tolerances must be positive".into());
    }
    let mut cache = open_cache(&args.cache)?;
    let config = QuadratureConfig {
        abs_tol: args.quad_tol,
        max_depth: args.max_depth,
    };
    let check =
        integral_residual(args.m, args.a, &config, &mut cache).map_err(|e| e.to_string())?;
    let status = if !check.converged {
        "inconclusive"
    } else if check.residual <= args.tolerance {
        "pass"
    } else {
        "fail"
    };
    let mut out = String::new();
    match args.output.format {
        Format::Text => {
            let _ = writeln!(out, "m: {}", check.m);
            let _ = writeln!(out, "a: {:e}", check.a);
            let _ = writeln!(out, "quadrature: {:.17e}", check.quadrature);
            let _ = writeln!(out, "closed-form: {:.17e}", check.closed_form);
            let _ = writeln!(out, "residual: {:.3e}", check.residual);
            let _ = writeln!(out, "evaluations: {}", check.evaluations);
            let _ = writeln!(out, "status: {status}");
        }
        Format::Csv => {
            let _ = writeln!(
                out,
                "m,a,quadrature,closed_form,residual,evaluations,status"
            );
            let _ = writeln!(
                out,
                "{},{:e},{:.17e},{:.17e},{:.3e},{},{status}",
                check.m,
                check.a,
                check.quadrature,
                check.closed_form,
                check.residual,
                check.evaluations
            );
        }
        Format::Json => {
            let doc = serde_json::json!({
                "command": "integral",
                "m": check.m,
                "a": check.a,
                "quadrature": check.quadrature,
                "closed_form": check.closed_form,
                "residual": check.residual,
                "evaluations": check.evaluations,
                "status": status,
            });
            out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
        }
    }
    print!("{out}");
    Ok(match status {
        "pass" => true,
        "inconclusive" => !args.strict_integral,
        _ => false,
    })
}
