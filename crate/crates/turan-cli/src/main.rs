//! Command-line front end: verification sweeps, single-instance scans
//! along the unit circle, the sharpness suite, and a quick selftest.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use turan::bounds::{
    check_point, hypothesis_check, lemma42_residual, seq_inequality, BoundKind, NormContext,
    SeqDirection,
};
use turan::gen::{gen_instance, GenConfig};
use turan::poly::RootForm;
use turan::rational::{PoleSet, RationalFn};
use turan::sweep::{extremal_suite, shrink, verify_sweep};

#[derive(Parser)]
#[command(
    name = "turan",
    version,
    about = "Verify Turán-type derivative bounds for rational functions with prescribed poles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep seeded random instances against the bound catalog
    Verify(VerifyArgs),
    /// Evaluate one instance on a ring of circle points, one row per angle
    Scan(ScanArgs),
    /// Run the sharpness suite over the extremal parameter grids
    Extremal(ExtremalArgs),
    /// Quick internal consistency checks
    Selftest,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Comma-separated kind names, or `all`.
#[derive(Clone)]
struct KindList(Vec<BoundKind>);

fn parse_kinds(s: &str) -> Result<KindList, String> {
    if s == "all" {
        return Ok(KindList(BoundKind::ALL.to_vec()));
    }
    let mut kinds = Vec::new();
    for part in s.split(',') {
        kinds.push(part.trim().parse::<BoundKind>()?);
    }
    Ok(KindList(kinds))
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 200)]
    instances: usize,
    /// Equispaced circle points per instance (the |r| extrema are added)
    #[arg(long, default_value_t = 64)]
    points: usize,
    /// Master seed; the TURAN_SEED environment variable overrides it
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "all", value_parser = parse_kinds)]
    kinds: KindList,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 0.2)]
    k_min: f64,
    #[arg(long, default_value_t = 1.0)]
    k_max: f64,
    #[arg(long, default_value_t = 1.3)]
    pole_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pole_max: f64,
    /// Require an origin zero (s >= 1)
    #[arg(long = "force-s")]
    force_s: bool,
    /// Require as many zeros as poles (m = n)
    #[arg(long = "force-m-eq-n")]
    force_m_eq_n: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ScanArgs {
    /// Poles as `re,im` pairs separated by `;`
    #[arg(long, allow_hyphen_values = true)]
    poles: String,
    /// Zeros away from the origin, `re,im` pairs separated by `;`
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    zeros: String,
    /// Order of the zero at the origin
    #[arg(long, default_value_t = 0)]
    s: usize,
    /// Zero-radius bound k in (0, 1]
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Leading coefficient as `re,im`
    #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
    leading: String,
    #[arg(long, default_value_t = 360)]
    points: usize,
    #[arg(long, default_value = "all", value_parser = parse_kinds)]
    kinds: KindList,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Relative equality tolerance per grid row
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn failure(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn emit(out: &Option<PathBuf>, body: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.write_all(b"\n")
        }
    }
}

fn seed_override(seed: u64) -> Result<u64, String> {
    match std::env::var("TURAN_SEED") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| format!("TURAN_SEED must be a 64-bit unsigned integer, got `{v}`")),
        Err(_) => Ok(seed),
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `re,im`, got `{s}`"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|_| format!("bad real part in `{s}`"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|_| format!("bad imaginary part in `{s}`"))?;
    Ok(Complex64::new(re, im))
}

fn parse_complex_list(s: &str) -> Result<Vec<Complex64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(|part| parse_complex(part.trim())).collect()
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Extremal(args) => cmd_extremal(args),
        Command::Selftest => cmd_selftest(),
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.format == Format::Csv {
        return usage_error("verify reports are nested aggregates; only --format json is supported");
    }
    let seed = match seed_override(args.seed) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let cfg = GenConfig {
        max_n: args.max_n,
        k_range: (args.k_min, args.k_max),
        pole_radius_range: (args.pole_min, args.pole_max),
        force_s_positive: args.force_s,
        force_m_equals_n: args.force_m_eq_n,
        seed,
    };
    if let Err(e) = cfg.validate() {
        return usage_error(&e.to_string());
    }
    let report = match verify_sweep(&cfg, &args.kinds.0, args.instances, args.points) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    if let Err(e) = emit(&args.out, &report.to_json()) {
        return failure(&format!("cannot write report: {e}"));
    }
    if report.has_violations() {
        eprintln!("{} violation(s) found", report.violations_total);
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_scan(args: ScanArgs) -> ExitCode {
    let poles = match parse_complex_list(&args.poles) {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("--poles: {e}")),
    };
    let zeros = match parse_complex_list(&args.zeros) {
        Ok(z) => z,
        Err(e) => return usage_error(&format!("--zeros: {e}")),
    };
    let leading = match parse_complex(&args.leading) {
        Ok(c) => c,
        Err(e) => return usage_error(&format!("--leading: {e}")),
    };
    if args.points == 0 {
        return usage_error("--points must be positive");
    }

    let poleset = match PoleSet::new(poles) {
        Ok(p) => p,
        Err(e) => return failure(&e.to_string()),
    };
    let r = match RationalFn::new(RootForm::new(leading, zeros, args.s), poleset, args.k) {
        Ok(r) => r,
        Err(e) => return failure(&e.to_string()),
    };

    let mut kinds = Vec::new();
    for &kind in &args.kinds.0 {
        match hypothesis_check(kind, &r) {
            Ok(()) => kinds.push(kind),
            Err(reason) => eprintln!("note: skipping {kind}: {reason}"),
        }
    }
    if kinds.is_empty() {
        return failure("no requested kind applies to this instance");
    }
    let ctx = match NormContext::for_kinds(&r, &kinds) {
        Ok(ctx) => ctx,
        Err(e) => return failure(&e.to_string()),
    };
    let blaschke = r.blaschke();

    let mut rows: Vec<(f64, Vec<f64>)> = Vec::with_capacity(args.points);
    for i in 0..args.points {
        let angle = std::f64::consts::TAU * i as f64 / args.points as f64;
        let z = Complex64::from_polar(1.0, angle);
        let mut cells = vec![
            r.eval(z).unwrap().norm(),
            r.derivative(z).unwrap().norm(),
            blaschke.abs_prime_on_circle(z).unwrap(),
        ];
        for &kind in &kinds {
            match check_point(kind, &r, z, &ctx) {
                Ok(m) => {
                    cells.push(m.rhs);
                    cells.push(m.margin);
                }
                Err(e) => return failure(&e.to_string()),
            }
        }
        rows.push((angle, cells));
    }

    let body = match args.format {
        Format::Csv => {
            let mut header = String::from("angle,abs_r,abs_r_prime,abs_b_prime");
            for kind in &kinds {
                header.push_str(&format!(",rhs_{kind},margin_{kind}"));
            }
            let mut body = header;
            for (angle, cells) in &rows {
                body.push('\n');
                body.push_str(&format!("{angle:.16e}"));
                for v in cells {
                    body.push_str(&format!(",{v:.16e}"));
                }
            }
            body
        }
        Format::Json => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|(angle, cells)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("angle".into(), (*angle).into());
                    obj.insert("abs_r".into(), cells[0].into());
                    obj.insert("abs_r_prime".into(), cells[1].into());
                    obj.insert("abs_b_prime".into(), cells[2].into());
                    for (j, kind) in kinds.iter().enumerate() {
                        obj.insert(format!("rhs_{kind}"), cells[3 + 2 * j].into());
                        obj.insert(format!("margin_{kind}"), cells[4 + 2 * j].into());
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "version": 1,
                "rows": rows_json,
            }))
            .expect("scan rows serialize")
        }
    };
    if let Err(e) = emit(&args.out, &body) {
        return failure(&format!("cannot write scan output: {e}"));
    }
    ExitCode::SUCCESS
}

fn cmd_extremal(args: ExtremalArgs) -> ExitCode {
    if args.format == Format::Csv {
        return usage_error("extremal reports are nested aggregates; only --format json is supported");
    }
    let report = match extremal_suite(args.tolerance) {
        Ok(r) => r,
        Err(e) => return failure(&e.to_string()),
    };
    if let Err(e) = emit(&args.out, &report.to_json()) {
        return failure(&format!("cannot write report: {e}"));
    }
    if report.all_sharp() {
        ExitCode::SUCCESS
    } else {
        eprintln!(
            "{} of {} equality rows outside tolerance {}",
            report.failures, report.asserted, report.tolerance
        );
        ExitCode::from(1)
    }
}

fn cmd_selftest() -> ExitCode {
    let mut ok = true;
    let mut check = |name: &str, pass: bool| {
        println!("selftest {name}: {}", if pass { "ok" } else { "FAILED" });
        ok &= pass;
    };

    // circle identities on seeded polesets
    let cfg = GenConfig::new(1);
    let mut identities = true;
    for i in 0..50u64 {
        let r = gen_instance(&cfg, &mut cfg.instance_rng(i));
        let b = r.blaschke();
        for j in 0..50 {
            let z = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / 50.0);
            identities &= lemma42_residual(r.poles(), z).unwrap().abs() < 1e-9;
            identities &= (b.eval(z).unwrap().norm() - 1.0).abs() < 1e-9;
        }
    }
    check("circle identities", identities);

    // sequence inequalities, driven by a small deterministic generator
    let mut seqs = true;
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next_unit = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..2000 {
        let len = 1 + (next_unit() * 16.0) as usize;
        let lo: Vec<f64> = (0..len).map(|_| next_unit()).collect();
        let hi: Vec<f64> = (0..len).map(|_| 1.0 + 7.0 * next_unit()).collect();
        seqs &= seq_inequality(&lo, SeqDirection::LeOne).unwrap().holds;
        seqs &= seq_inequality(&hi, SeqDirection::GeOne).unwrap().holds;
    }
    check("sequence inequalities", seqs);

    // the worked equality instance
    let worked = RationalFn::new(
        RootForm::new(Complex64::new(1.0, 0.0), vec![Complex64::new(-0.5, 0.0)], 1),
        PoleSet::new(vec![Complex64::new(2.0, 0.0); 2]).unwrap(),
        0.5,
    )
    .unwrap();
    let margin = check_point(
        BoundKind::Thm3_1,
        &worked,
        Complex64::new(1.0, 0.0),
        &NormContext::empty(),
    )
    .unwrap();
    check(
        "worked equality instance",
        (margin.lhs - 5.5).abs() < 1e-9 && margin.margin.abs() < 1e-9,
    );

    // shrinking a deliberately inverted check reaches the minimal instance
    let start = gen_instance(&cfg, &mut cfg.instance_rng(3));
    let out = shrink(&start, |cand| {
        check_point(
            BoundKind::Thm3_1,
            cand,
            Complex64::new(1.0, 0.0),
            &NormContext::empty(),
        )
        .map(|m| m.slack() > 1e-9)
        .unwrap_or(false)
    });
    check(
        "shrink self-test",
        out.was_violating && out.instance.n() == 1 && out.instance.m() == 0,
    );

    // small sweep over the counted kinds
    let counted: Vec<BoundKind> = BoundKind::ALL
        .iter()
        .copied()
        .filter(|k| k.counted())
        .collect();
    let report = verify_sweep(&GenConfig::new(3), &counted, 50, 32).unwrap();
    check("verification sweep", !report.has_violations());

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
