//! Command-line front end: exact division, shifted inverses, iteration
//! traces, fixed-point census tables, and timing runs.
//!
//! Every command is a thin wrapper over the library; numeric output always
//! equals the corresponding library call's result. Exit code 0 on success,
//! 2 on contract errors such as division by zero.

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use shinv::bigdigits::{MultBackend, Natural};
use shinv::dynamics;
use shinv::int_shinv;
use shinv::poly;
use shinv::RefineVariant;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "shinv", version, about = "Exact quotients via whole shifted inverses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Refine1,
    Refine2,
    Refine3,
}

impl From<VariantArg> for RefineVariant {
    fn from(v: VariantArg) -> RefineVariant {
        match v {
            VariantArg::Refine1 => RefineVariant::Refine1,
            VariantArg::Refine2 => RefineVariant::Refine2,
            VariantArg::Refine3 => RefineVariant::Refine3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MultArg {
    Schoolbook,
    Karatsuba,
}

impl From<MultArg> for MultBackend {
    fn from(m: MultArg) -> MultBackend {
        match m {
            MultArg::Schoolbook => MultBackend::Schoolbook,
            MultArg::Karatsuba => MultBackend::karatsuba(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Integer quotient and remainder (signed decimal or 0x-hex operands).
    Div {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
        /// Digit base used internally, 2..=2^32.
        #[arg(long, default_value_t = 1u64 << 32)]
        base: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Refine3)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = MultArg::Karatsuba)]
        mult: MultArg,
    },
    /// Whole shifted inverse floor(B^h / v) with iteration statistics.
    Shinv {
        v: String,
        h: i64,
        #[arg(long, default_value_t = 1u64 << 32)]
        base: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Refine3)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = MultArg::Karatsuba)]
        mult: MultArg,
    },
    /// Polynomial quotient and remainder over a prime field.
    Pdiv {
        /// Dividend coefficients, low to high, comma separated.
        u: String,
        /// Divisor coefficients, low to high, comma separated.
        v: String,
        /// Field, e.g. F5 or 97.
        #[arg(long, default_value = "F97")]
        field: String,
    },
    /// Fixed-point census rows for powers of ten up to the given limit.
    Census {
        u_max: i128,
    },
    /// Iteration trace of the integer map from a chosen start.
    Trace {
        u: i128,
        v: i128,
        w0: i128,
    },
    /// Time shifted-inverse computation over a range of operand sizes.
    Bench {
        /// Divisor sizes in digits, comma separated.
        #[arg(long, default_value = "256,512,1024,2048")]
        sizes: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Refine3)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = MultArg::Karatsuba)]
        mult: MultArg,
        /// Timed runs per size (after one warmup).
        #[arg(long, default_value_t = 5)]
        runs: u32,
        /// Digit base.
        #[arg(long, default_value_t = 1u64 << 32)]
        base: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Div { u, v, base, variant, mult } => cmd_div(&u, &v, base, variant.into(), mult.into(), cli.format),
        Command::Shinv { v, h, base, variant, mult } => {
            cmd_shinv(&v, h, base, variant.into(), mult.into(), cli.format)
        }
        Command::Pdiv { u, v, field } => cmd_pdiv(&u, &v, &field, cli.format),
        Command::Census { u_max } => cmd_census(u_max, cli.format),
        Command::Trace { u, v, w0 } => cmd_trace(u, v, w0, cli.format),
        Command::Bench { sizes, variant, mult, runs, base } => {
            cmd_bench(&sizes, variant.into(), mult.into(), runs, base, cli.format)
        }
    }
}

/// Magnitude plus sign, for the CLI's signed-integer convention.
fn parse_signed(base: u64, s: &str) -> Result<(Natural, bool), String> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mag = Natural::parse(base, digits).map_err(|e| format!("bad integer {s:?}: {e}"))?;
    let neg = neg && !mag.is_zero();
    Ok((mag, neg))
}

fn signed_str(mag: &Natural, neg: bool) -> String {
    if neg {
        format!("-{mag}")
    } else {
        mag.to_string()
    }
}

fn cmd_div(
    u: &str,
    v: &str,
    base: u64,
    variant: RefineVariant,
    backend: MultBackend,
    format: OutputFormat,
) -> Result<(), String> {
    let (um, un) = parse_signed(base, u)?;
    let (vm, vn) = parse_signed(base, v)?;
    let start = Instant::now();
    let (q, r, stats) = int_shinv::divmod_with_stats(&um, &vm, variant, backend)
        .map_err(|e| e.to_string())?;
    let wall = start.elapsed().as_nanos();
    // Truncated division: sign(q) = sign(u)*sign(v), sign(r) = sign(u).
    let qn = (un != vn) && !q.is_zero();
    let rn = un && !r.is_zero();
    let qs = signed_str(&q, qn);
    let rs = signed_str(&r, rn);
    match format {
        OutputFormat::Text => println!("q={qs} r={rs}"),
        OutputFormat::Csv => println!("q,r\n{qs},{rs}"),
        OutputFormat::Json => print_json(json!({
            "command": "div",
            "inputs": { "u": u, "v": v, "base": base },
            "result": { "q": qs, "r": rs, "delta": stats.delta },
            "stats": {
                "iterations": stats.shinv.iterations(),
                "mults": stats.shinv.mults(),
                "wall_ns": wall as u64,
            },
        })),
    }
    Ok(())
}

fn cmd_shinv(
    v: &str,
    h: i64,
    base: u64,
    variant: RefineVariant,
    backend: MultBackend,
    format: OutputFormat,
) -> Result<(), String> {
    if h < 0 {
        return Err("h must be nonnegative".into());
    }
    let vm = Natural::parse(base, v).map_err(|e| format!("bad integer {v:?}: {e}"))?;
    let start = Instant::now();
    let (w, stats) =
        int_shinv::shinv_with_stats(&vm, h, variant, backend).map_err(|e| e.to_string())?;
    let wall = start.elapsed().as_nanos();
    let w0 = stats.initial_full().map(|n| n.to_string());
    match format {
        OutputFormat::Text => {
            println!("{w}");
            if let Some(w0) = &w0 {
                println!("w0 = {w0}");
            }
            println!("iterations = {}, mults = {}", stats.iterations(), stats.mults());
        }
        OutputFormat::Csv => {
            println!("shinv,w0,iterations,mults");
            println!("{w},{},{},{}", w0.unwrap_or_default(), stats.iterations(), stats.mults());
        }
        OutputFormat::Json => print_json(json!({
            "command": "shinv",
            "inputs": { "v": v, "h": h, "base": base },
            "result": { "shinv": w.to_string(), "w0": w0 },
            "stats": {
                "iterations": stats.iterations(),
                "mults": stats.mults(),
                "wall_ns": wall as u64,
            },
        })),
    }
    Ok(())
}

fn cmd_pdiv(u: &str, v: &str, field: &str, format: OutputFormat) -> Result<(), String> {
    let f = poly::parse_field(field).map_err(|e| e.to_string())?;
    let up = poly::parse_coeff_list(u, f).map_err(|e| format!("bad dividend: {e}"))?;
    let vp = poly::parse_coeff_list(v, f).map_err(|e| format!("bad divisor: {e}"))?;
    let start = Instant::now();
    let (q, r) = poly::pdivmod(&up, &vp).map_err(|e| e.to_string())?;
    let wall = start.elapsed().as_nanos();
    let qs = poly::format_coeff_list(&q);
    let rs = poly::format_coeff_list(&r);
    match format {
        OutputFormat::Text => println!("q={qs} r={rs}"),
        OutputFormat::Csv => println!("q,r\n\"{qs}\",\"{rs}\""),
        OutputFormat::Json => print_json(json!({
            "command": "pdiv",
            "inputs": { "u": u, "v": v, "field": format!("F{}", f.modulus()) },
            "result": { "q": qs, "r": rs },
            "stats": { "iterations": 0, "mults": 0, "wall_ns": wall as u64 },
        })),
    }
    Ok(())
}

fn cmd_census(u_max: i128, format: OutputFormat) -> Result<(), String> {
    if u_max < 10 {
        return Err("census requires u_max >= 10".into());
    }
    let mut us = Vec::new();
    let mut u = 10i128;
    while u <= u_max {
        us.push(u);
        u *= 10;
    }
    let start = Instant::now();
    let rows = dynamics::census_table(&us);
    let wall = start.elapsed().as_nanos();
    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            print!("{}", dynamics::census_csv(&rows));
        }
        OutputFormat::Json => print_json(json!({
            "command": "census",
            "inputs": { "u_max": u_max.to_string() },
            "result": rows
                .iter()
                .map(|r| json!({
                    "u": r.u.to_string(),
                    "actual": r.actual,
                    "estimate": r.estimate.to_string(),
                    "abs_err": r.abs_err.to_string(),
                    "rel_err": r.rel_err,
                }))
                .collect::<Vec<_>>(),
            "stats": { "iterations": 0, "mults": 0, "wall_ns": wall as u64 },
        })),
    }
    Ok(())
}

fn cmd_trace(u: i128, v: i128, w0: i128, format: OutputFormat) -> Result<(), String> {
    if !(1 < v && v < u) {
        return Err("trace requires 1 < v < u".into());
    }
    let start = Instant::now();
    let trace = dynamics::steps_to_converge(u, v, w0, None);
    let wall = start.elapsed().as_nanos();
    match format {
        OutputFormat::Text | OutputFormat::Csv => println!("{}", dynamics::format_trace(&trace)),
        OutputFormat::Json => print_json(json!({
            "command": "trace",
            "inputs": { "u": u.to_string(), "v": v.to_string(), "w0": w0.to_string() },
            "result": {
                "iterates": trace.iterates.iter().map(i128::to_string).collect::<Vec<_>>(),
                "outcome": match trace.outcome {
                    dynamics::TraceOutcome::FixedPoint(w) => format!("fixed:{w}"),
                    dynamics::TraceOutcome::Diverged => "diverged".to_string(),
                    dynamics::TraceOutcome::BudgetExceeded => "budget-exceeded".to_string(),
                },
                "steps": trace.steps(),
            },
            "stats": {
                "iterations": trace.steps(),
                "mults": 0,
                "wall_ns": wall as u64,
            },
        })),
    }
    Ok(())
}

struct BenchRow {
    size: usize,
    median_ns: u128,
    ratio: Option<f64>,
    iterations: u32,
}

fn cmd_bench(
    sizes: &str,
    variant: RefineVariant,
    backend: MultBackend,
    runs: u32,
    base: u64,
    format: OutputFormat,
) -> Result<(), String> {
    let sizes: Vec<usize> = sizes
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("bad size {s:?}")))
        .collect::<Result<_, _>>()?;
    if sizes.is_empty() || runs == 0 {
        return Err("need at least one size and one run".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut rows: Vec<BenchRow> = Vec::new();
    for &size in &sizes {
        if size == 0 {
            return Err("sizes must be positive".into());
        }
        let mut digits: Vec<u64> = (0..size).map(|_| rng.gen_range(0..base)).collect();
        *digits.last_mut().unwrap() = rng.gen_range(1..base);
        let v = Natural::from_digits(base, digits);
        let h = 2 * size as i64;
        // Warmup, then timed runs.
        let (_, stats) = int_shinv::shinv_with_stats(&v, h, variant, backend).unwrap();
        let mut times: Vec<u128> = (0..runs)
            .map(|_| {
                let t = Instant::now();
                let _ = int_shinv::shinv(&v, h, variant, backend).unwrap();
                t.elapsed().as_nanos()
            })
            .collect();
        times.sort_unstable();
        let median = times[times.len() / 2];
        let ratio = rows.last().map(|prev| median as f64 / prev.median_ns as f64);
        rows.push(BenchRow { size, median_ns: median, ratio, iterations: stats.iterations() });
    }
    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            println!("size,variant,mult,median_ns,ratio,iterations");
            for r in &rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.size,
                    variant_name(variant),
                    backend_name(backend),
                    r.median_ns,
                    r.ratio.map(|x| format!("{x:.2}")).unwrap_or_default(),
                    r.iterations
                );
            }
        }
        OutputFormat::Json => print_json(json!({
            "command": "bench",
            "inputs": {
                "sizes": sizes,
                "variant": variant_name(variant),
                "mult": backend_name(backend),
                "runs": runs,
                "base": base,
            },
            "result": rows
                .iter()
                .map(|r| json!({
                    "size": r.size,
                    "median_ns": r.median_ns as u64,
                    "ratio": r.ratio,
                    "iterations": r.iterations,
                }))
                .collect::<Vec<_>>(),
            "stats": { "iterations": 0, "mults": 0, "wall_ns": 0 },
        })),
    }
    Ok(())
}

fn variant_name(v: RefineVariant) -> &'static str {
    match v {
        RefineVariant::Refine1 => "refine1",
        RefineVariant::Refine2 => "refine2",
        RefineVariant::Refine3 => "refine3",
    }
}

fn backend_name(b: MultBackend) -> &'static str {
    match b {
        MultBackend::Schoolbook => "schoolbook",
        MultBackend::Karatsuba { .. } => "karatsuba",
    }
}

fn print_json(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
}
