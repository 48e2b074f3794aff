//! `dspan`: generators, covering profiles, span invariants, bound chains,
//! exact-oracle runs and reproduction sweeps for finite point sets.
//!
//! Exit codes: 0 success, 2 usage error, 3 not applicable to the input,
//! 4 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use dspan::covering::{covering_bounds_nd, covering_profile_1d};
use dspan::error::Error;
use dspan::pointset::{
    load_pointset, make_geometric_set, make_grid_1d, make_grid_nd, make_power_set,
    pointset_to_json, Metric, PointSet,
};
use dspan::polywitness::{
    default_resolution, exact_remez_span, falsify, favard_bound, favard_subset_value,
    remez_estimate_to_json, FavardMode,
};
use dspan::remez::{remez_span_bound_with, LambdaNorm};
use dspan::span::{
    omega_1d, omega_min_distance_bound, omega_nd, span_curve, SpanResult, VitushkinModel,
};
use dspan::spread::{beta_spread_with_metric, SpreadMode};

#[derive(Parser)]
#[command(name = "dspan", version, about = "covering, span and bound machinery for finite point sets")]
struct Cli {
    /// Seed for all randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker-thread hint. Accepted for interface stability; the current
    /// implementation computes deterministically on one thread.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Force JSON output (the default for reports).
    #[arg(long, global = true)]
    json: bool,

    /// Force CSV output where a tabular form exists.
    #[arg(long, global = true)]
    csv: bool,

    /// JSON table of dimensional model constants for dimensions >= 3:
    /// {"3": [c0, c1, c2], ...}.
    #[arg(long, global = true, value_name = "FILE")]
    constants_table: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a canonical point set and write it as JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Covering profile (1D) or certified covering bounds at a scale.
    Covering {
        input: PathBuf,
        /// Scale for certified bounds; omit for the full 1D profile.
        #[arg(long)]
        eps: Option<f64>,
        /// Write the profile as CSV to this path.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Metric span of a point set.
    Omega {
        input: PathBuf,
        #[arg(long)]
        d: usize,
        /// Also write the span objective curve as CSV.
        #[arg(long, value_name = "FILE")]
        curve: Option<PathBuf>,
    },
    /// Bound chain: span, measure ratio, Chebyshev factor.
    Bound {
        input: PathBuf,
        #[arg(long)]
        d: usize,
        /// Feed the span into the factor without dividing by the box
        /// volume (the unit-volume reading).
        #[arg(long)]
        raw_lambda: bool,
    },
    /// Exact-oracle span over a probe grid, optionally with a falsifier run.
    Exact {
        input: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        resolution: Option<usize>,
        /// Run this many random falsifier trials against the chain bound.
        #[arg(long, value_name = "N")]
        falsify: Option<u64>,
    },
    /// Interpolation (subset) upper bound on the span constant.
    Favard {
        input: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = FavardModeArg::Exact)]
        mode: FavardModeArg,
    },
    /// Beta-spread report with the dispersion table.
    Spread {
        input: PathBuf,
        #[arg(long)]
        beta: f64,
        /// Rows of the dispersion table to keep in the report.
        #[arg(long)]
        p_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = MetricArg::Linf)]
        metric: MetricArg,
        /// Write the dispersion table as CSV to this path.
        #[arg(long, value_name = "FILE")]
        eta_csv: Option<PathBuf>,
    },
    /// Consistency battery: bound chain vs the exact oracle plus a
    /// falsifier run; nonzero exit on any violation.
    Verify {
        input: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long)]
        resolution: Option<usize>,
    },
    /// Parameter sweeps reproducing the canonical closed-form tables.
    Reproduce {
        #[arg(long, value_enum)]
        section: Section,
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Regular grid on [-1, 1].
    Grid1d {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// n-fold product grid on [-1, 1]^n.
    Gridnd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Truncated power-law set {1/k^r}.
    Power {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Truncated geometric set {q^m}.
    Geometric {
        #[arg(long)]
        q: f64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FavardModeArg {
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Linf,
    Euclidean,
}

#[derive(Clone, Copy, ValueEnum)]
enum Section {
    Example1,
    Example2,
    Example3,
    Thm25,
    Thm26,
    Lemma21,
}

#[derive(Serialize)]
struct Manifest {
    command: String,
    parameters: serde_json::Value,
    seed: u64,
    threads: usize,
    tool_version: &'static str,
    timestamp_unix: u64,
}

fn manifest(command: &str, parameters: serde_json::Value, cli: &Cli) -> Manifest {
    Manifest {
        command: command.to_string(),
        parameters,
        seed: cli.seed,
        threads: cli.threads,
        tool_version: env!("CARGO_PKG_VERSION"),
        timestamp_unix: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
    }
}

fn emit(manifest: Manifest, result: serde_json::Value) {
    use std::io::Write;
    let doc = json!({ "manifest": manifest, "result": result });
    let text = serde_json::to_string_pretty(&doc).expect("report json");
    // tolerate a closed pipe (e.g. piping into `head`)
    let _ = writeln!(std::io::stdout(), "{text}");
}

/// Exit-code classification of library errors.
fn code_for(err: &Error) -> u8 {
    match err {
        Error::NotApplicable(_) | Error::IndefiniteSet(_) => 3,
        Error::InvalidParameter(_)
        | Error::InsufficientPoints { .. }
        | Error::DimensionMismatch { .. }
        | Error::TooLarge(_)
        | Error::Divergent(_) => 2,
        _ => 1,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: code_for(&e),
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

fn model_for(cli: &Cli, dim: usize, degree: usize) -> Result<VitushkinModel, Failure> {
    if dim <= 2 {
        return Ok(VitushkinModel::builtin(dim, degree)?);
    }
    let path = cli.constants_table.as_ref().ok_or_else(|| Failure {
        code: 3,
        message: format!("dimension {dim} needs --constants-table"),
    })?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("cannot read constants table: {e}"),
    })?;
    let table: std::collections::BTreeMap<String, Vec<f64>> =
        serde_json::from_str(&text).map_err(|e| Failure {
            code: 1,
            message: format!("bad constants table: {e}"),
        })?;
    let primes = table.get(&dim.to_string()).ok_or_else(|| Failure {
        code: 3,
        message: format!("constants table has no entry for dimension {dim}"),
    })?;
    Ok(VitushkinModel::from_prime_constants(dim, degree, primes)?)
}

fn span_of(z: &PointSet, d: usize, model: &VitushkinModel) -> Result<SpanResult, Failure> {
    Ok(if z.dim() == 1 {
        omega_1d(z, d)?
    } else {
        omega_nd(z, d, model)?
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|e| Failure {
                code: 1,
                message: format!("cannot create {}: {e}", parent.display()),
            })?;
        }
    }
    std::fs::write(path, contents).map_err(|e| Failure {
        code: 1,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Gen { kind } => run_gen(cli, kind),
        Command::Covering { input, eps, out } => run_covering(cli, input, *eps, out.as_deref()),
        Command::Omega { input, d, curve } => run_omega(cli, input, *d, curve.as_deref()),
        Command::Bound { input, d, raw_lambda } => run_bound(cli, input, *d, *raw_lambda),
        Command::Exact {
            input,
            d,
            resolution,
            falsify,
        } => run_exact(cli, input, *d, *resolution, *falsify),
        Command::Favard { input, d, mode } => run_favard(cli, input, *d, *mode),
        Command::Spread {
            input,
            beta,
            p_max,
            metric,
            eta_csv,
        } => run_spread(cli, input, *beta, *p_max, *metric, eta_csv.as_deref()),
        Command::Verify {
            input,
            d,
            trials,
            resolution,
        } => run_verify(cli, input, *d, *trials, *resolution),
        Command::Reproduce { section, out } => run_reproduce(cli, *section, out),
    }
}

fn run_gen(cli: &Cli, kind: &GenKind) -> Result<(), Failure> {
    let (z, name, params, out) = match kind {
        GenKind::Grid1d { s, out } => (
            make_grid_1d(*s)?,
            "gen grid1d",
            json!({ "s": s }),
            out.clone(),
        ),
        GenKind::Gridnd { n, s, out } => (
            make_grid_nd(*n, *s)?,
            "gen gridnd",
            json!({ "n": n, "s": s }),
            out.clone(),
        ),
        GenKind::Power { r, k, out } => (
            make_power_set(*r, *k)?,
            "gen power",
            json!({ "r": r, "k": k }),
            out.clone(),
        ),
        GenKind::Geometric { q, k, out } => (
            make_geometric_set(*q, *k)?,
            "gen geometric",
            json!({ "q": q, "k": k }),
            out.clone(),
        ),
    };
    write_file(&out, &pointset_to_json(&z))?;
    emit(
        manifest(name, params, cli),
        json!({ "path": out, "dim": z.dim(), "points": z.len() }),
    );
    Ok(())
}

fn run_covering(cli: &Cli, input: &Path, eps: Option<f64>, out: Option<&Path>) -> Result<(), Failure> {
    let z = load_pointset(input)?;
    match eps {
        Some(eps) => {
            let b = covering_bounds_nd(&z, eps)?;
            emit(
                manifest("covering", json!({ "input": input, "eps": eps }), cli),
                serde_json::to_value(b).expect("interval json"),
            );
        }
        None => {
            let profile = covering_profile_1d(&z)?;
            if let Some(path) = out {
                write_file(path, &profile.to_csv())?;
            }
            if cli.csv && out.is_none() {
                print!("{}", profile.to_csv());
            } else {
                emit(
                    manifest("covering", json!({ "input": input }), cli),
                    serde_json::to_value(&profile).expect("profile json"),
                );
            }
        }
    }
    Ok(())
}

fn run_omega(cli: &Cli, input: &Path, d: usize, curve: Option<&Path>) -> Result<(), Failure> {
    let z = load_pointset(input)?;
    let model = model_for(cli, z.dim(), d)?;
    let span = span_of(&z, d, &model)?;
    if let Some(path) = curve {
        let rows = span_curve(&z, d, &model)?;
        let mut csv = String::from("eps,m_lo,m_hi,model,f_lo,f_hi\n");
        for r in rows {
            csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.eps, r.m_lo, r.m_hi, r.model_value, r.f_lo, r.f_hi
            ));
        }
        write_file(path, &csv)?;
    }
    emit(
        manifest("omega", json!({ "input": input, "d": d }), cli),
        serde_json::to_value(&span).expect("span json"),
    );
    Ok(())
}

fn run_bound(cli: &Cli, input: &Path, d: usize, raw_lambda: bool) -> Result<(), Failure> {
    let z = load_pointset(input)?;
    let model = model_for(cli, z.dim(), d)?;
    let span = span_of(&z, d, &model)?;
    let norm = if raw_lambda {
        LambdaNorm::Raw
    } else {
        LambdaNorm::BoxVolume
    };
    let report = dspan::remez::report_from_span(&z, d, &span, norm)?;
    emit(
        manifest(
            "bound",
            json!({ "input": input, "d": d, "raw_lambda": raw_lambda }),
            cli,
        ),
        json!({ "span": span, "report": report }),
    );
    Ok(())
}

fn run_exact(
    cli: &Cli,
    input: &Path,
    d: usize,
    resolution: Option<usize>,
    falsify_trials: Option<u64>,
) -> Result<(), Failure> {
    let z = load_pointset(input)?;
    let resolution = resolution.unwrap_or_else(|| default_resolution(z.dim()));
    let est = exact_remez_span(&z, d, resolution)?;
    let mut result: serde_json::Value =
        serde_json::from_str(&remez_estimate_to_json(&est)).expect("estimate json");
    if let Some(trials) = falsify_trials {
        let model = model_for(cli, z.dim(), d)?;
        let span = span_of(&z, d, &model)?;
        let chain = dspan::remez::report_from_span(&z, d, &span, LambdaNorm::BoxVolume)?;
        let fal = falsify(&z, d, chain.factor, trials, cli.seed, resolution)?;
        result["falsify"] = serde_json::to_value(&fal).expect("falsify json");
        emit(
            manifest(
                "exact",
                json!({ "input": input, "d": d, "resolution": resolution, "falsify": trials }),
                cli,
            ),
            result,
        );
        if !fal.passed() {
            return Err(Failure::verification(format!(
                "falsifier found {} violation(s) of the chain bound",
                fal.violations.len()
            )));
        }
        return Ok(());
    }
    emit(
        manifest(
            "exact",
            json!({ "input": input, "d": d, "resolution": resolution }),
            cli,
        ),
        result,
    );
    Ok(())
}

fn run_favard(cli: &Cli, input: &Path, d: usize, mode: FavardModeArg) -> Result<(), Failure> {
    let z = load_pointset(input)?;
    let mode = match mode {
        FavardModeArg::Exact => FavardMode::Exact,
        FavardModeArg::Heuristic => FavardMode::Heuristic,
    };
    let report = favard_bound(&z, d, mode)?;
    emit(
        manifest("favard", json!({ "input": input, "d": d }), cli),
        serde_json::to_value(&report).expect("favard json"),
    );
    Ok(())
}

fn run_spread(
    cli: &Cli,
    input: &Path,
    beta: f64,
    p_max: Option<usize>,
    metric: MetricArg,
    eta_csv: Option<&Path>,
) -> Result<(), Failure> {
    let z = load_pointset(input)?;
    let metric = match metric {
        MetricArg::Linf => Metric::Linf,
        MetricArg::Euclidean => Metric::Euclidean,
    };
    let mode = if z.len() <= dspan::spread::SPREAD_EXACT_MAX_POINTS {
        SpreadMode::Exact
    } else {
        SpreadMode::Heuristic
    };
    let mut report = beta_spread_with_metric(&z, beta, mode, metric)?;
    if let Some(p_max) = p_max {
        report.eta_table.retain(|(p, _, _)| *p <= p_max);
    }
    if let Some(path) = eta_csv {
        write_file(path, &report.eta_table_csv())?;
    }
    emit(
        manifest(
            "spread",
            json!({ "input": input, "beta": beta, "p_max": p_max }),
            cli,
        ),
        serde_json::to_value(&report).expect("spread json"),
    );
    Ok(())
}

fn run_verify(
    cli: &Cli,
    input: &Path,
    d: usize,
    trials: u64,
    resolution: Option<usize>,
) -> Result<(), Failure> {
    let z = load_pointset(input)?;
    let resolution = resolution.unwrap_or_else(|| default_resolution(z.dim()));
    let model = model_for(cli, z.dim(), d)?;
    let span = span_of(&z, d, &model)?;
    let chain = dspan::remez::report_from_span(&z, d, &span, LambdaNorm::BoxVolume)?;
    let est = exact_remez_span(&z, d, resolution)?;
    let fal = falsify(&z, d, chain.factor, trials, cli.seed, resolution)?;

    let sound = est.value <= chain.factor + 1e-6;
    let md = if z.len() >= 2 {
        omega_min_distance_bound(&z, d, &model)?
    } else {
        0.0
    };
    let md_ok = md <= span.omega_lo + 1e-12;

    // Interpolation bound reported alongside the oracle. The subset bound
    // is not proven to dominate the oracle, so a crossing is flagged
    // rather than treated as a failure.
    let favard = if z.dim() == 1 && z.len() > d {
        favard_bound(&z, d, FavardMode::Exact).ok()
    } else {
        None
    };
    let favard_value = favard.as_ref().map(|f| f.value);
    let favard_below_oracle = favard_value.map(|v| v < est.value - 1e-9);

    let checks = json!({
        "oracle_below_factor": sound,
        "falsifier_clean": fal.passed(),
        "min_distance_below_span": md_ok,
    });
    emit(
        manifest(
            "verify",
            json!({ "input": input, "d": d, "trials": trials, "resolution": resolution }),
            cli,
        ),
        json!({
            "span": span,
            "factor": chain.factor,
            "oracle": est.value,
            "min_distance_bound": md,
            "falsify_max_ratio": fal.max_ratio,
            "favard": favard_value,
            "favard_below_oracle": favard_below_oracle,
            "checks": checks,
        }),
    );
    if sound && fal.passed() && md_ok {
        Ok(())
    } else {
        Err(Failure::verification("consistency battery failed"))
    }
}

// ---------------------------------------------------------------------------
// Reproduction sweeps
// ---------------------------------------------------------------------------

fn run_reproduce(cli: &Cli, section: Section, out_dir: &Path) -> Result<(), Failure> {
    std::fs::create_dir_all(out_dir).map_err(|e| Failure {
        code: 1,
        message: format!("cannot create {}: {e}", out_dir.display()),
    })?;
    let (name, offenders, files) = match section {
        Section::Example1 => reproduce_example1(out_dir)?,
        Section::Example2 => reproduce_example2(out_dir)?,
        Section::Example3 => reproduce_example3(out_dir)?,
        Section::Thm25 => reproduce_thm25(out_dir)?,
        Section::Thm26 => reproduce_thm26(out_dir)?,
        Section::Lemma21 => reproduce_lemma21(out_dir)?,
    };
    emit(
        manifest(
            "reproduce",
            json!({ "section": name, "out": out_dir }),
            cli,
        ),
        json!({ "files": files, "offenders": offenders }),
    );
    if offenders.is_empty() {
        Ok(())
    } else {
        Err(Failure::verification(format!(
            "{} row(s) outside the stated tolerance: {}",
            offenders.len(),
            offenders.join("; ")
        )))
    }
}

type Sweep = (&'static str, Vec<String>, Vec<String>);

fn reproduce_example1(dir: &Path) -> Result<Sweep, Failure> {
    let mut csv = String::from("s,d,omega,closed_form,abs_err,pass\n");
    let mut offenders = Vec::new();
    for s in 5..=41usize {
        for d in [2usize, 3, 4] {
            if s <= d {
                continue;
            }
            let g = make_grid_1d(s)?;
            let omega = omega_1d(&g, d)?.omega_lo;
            let closed = 2.0 * (s - d) as f64 / (s - 1) as f64;
            let err = (omega - closed).abs();
            let pass = err <= 1e-10;
            if !pass {
                offenders.push(format!("s={s} d={d}"));
            }
            csv.push_str(&format!("{s},{d},{omega},{closed},{err},{pass}\n"));
        }
    }
    let path = dir.join("example1_grid_span.csv");
    write_file(&path, &csv)?;
    Ok((
        "example1",
        offenders,
        vec![path.display().to_string()],
    ))
}

fn reproduce_example2(dir: &Path) -> Result<Sweep, Failure> {
    let mut csv = String::from("r,d,K,omega,target,ratio,pass\n");
    let mut offenders = Vec::new();
    for r in [1.0f64, 2.0] {
        for d in 2..=5usize {
            let k = 8 * d * d;
            let z = make_power_set(r, k)?;
            let omega = omega_1d(&z, d)?.omega_lo;
            let target = r.powf(r) * (r + 1.0).powf(-(r + 1.0)) * (d as f64).powf(-r);
            let ratio = omega / target;
            let pass = (0.5..=2.0).contains(&ratio);
            if !pass {
                offenders.push(format!("r={r} d={d}"));
            }
            csv.push_str(&format!("{r},{d},{k},{omega},{target},{ratio},{pass}\n"));
        }
    }
    let path = dir.join("example2_power_span.csv");
    write_file(&path, &csv)?;

    // interpolation-head comparison for the harmonic set
    let mut head = String::from("d,favard_head,reference_2d_pow_d\n");
    for d in 2..=5usize {
        let z = make_power_set(1.0, d + 1)?;
        let xs: Vec<f64> = z.points().iter().map(|p| p[0]).collect();
        let favard = favard_subset_value(&xs)?;
        let reference = (2.0 * d as f64).powi(d as i32);
        head.push_str(&format!("{d},{favard},{reference}\n"));
    }
    let head_path = dir.join("example2_interpolation_head.csv");
    write_file(&head_path, &head)?;

    Ok((
        "example2",
        offenders,
        vec![path.display().to_string(), head_path.display().to_string()],
    ))
}

fn reproduce_example3(dir: &Path) -> Result<Sweep, Failure> {
    let mut csv = String::from("q,d,K,omega,target,ratio,pass\n");
    let mut offenders = Vec::new();
    for q in [0.5f64, 0.8] {
        for d in 2..=4usize {
            let k = 4 * d;
            let z = make_geometric_set(q, k)?;
            let omega = omega_1d(&z, d)?.omega_lo;
            let target = q.powi(d as i32) / (1.0 / q).ln();
            let ratio = omega / target;
            let pass = (0.25..=4.0).contains(&ratio);
            if !pass {
                offenders.push(format!("q={q} d={d}"));
            }
            csv.push_str(&format!("{q},{d},{k},{omega},{target},{ratio},{pass}\n"));
        }
    }
    let path = dir.join("example3_geometric_span.csv");
    write_file(&path, &csv)?;
    Ok((
        "example3",
        offenders,
        vec![path.display().to_string()],
    ))
}

fn reproduce_thm25(dir: &Path) -> Result<Sweep, Failure> {
    let mut csv = String::from("s,d,factor,closed_form,pass\n");
    let mut offenders = Vec::new();
    let d = 3usize;
    let model = VitushkinModel::builtin(1, d)?;
    let mut prev = f64::INFINITY;
    for s in [11usize, 21, 41, 81] {
        let g = make_grid_1d(s)?;
        let factor = remez_span_bound_with(&g, d, &model, LambdaNorm::BoxVolume)?.factor;
        let mu = 2.0 * (s - d) as f64 / (s - 1) as f64;
        let closed = dspan::remez::chebyshev_eval(d, (4.0 - mu) / mu);
        let mut pass = (factor - closed).abs() <= 1e-9 * closed.max(1.0);
        if factor >= prev {
            pass = false;
        }
        prev = factor;
        if !pass {
            offenders.push(format!("s={s}"));
        }
        csv.push_str(&format!("{s},{d},{factor},{closed},{pass}\n"));
    }
    let path = dir.join("thm25_grid_factor.csv");
    write_file(&path, &csv)?;
    Ok(("thm25", offenders, vec![path.display().to_string()]))
}

fn reproduce_thm26(dir: &Path) -> Result<Sweep, Failure> {
    let mut csv = String::from("set,d,omega,factor_box_norm,factor_raw,oracle,sound\n");
    let mut offenders = Vec::new();
    let sets: Vec<(String, PointSet)> = vec![
        ("power r=1 K=200".to_string(), make_power_set(1.0, 200)?),
        ("geometric q=0.5 K=40".to_string(), make_geometric_set(0.5, 40)?),
    ];
    for (name, z) in &sets {
        for d in 2..=4usize {
            let span = omega_1d(z, d)?;
            let boxn = dspan::remez::report_from_span(z, d, &span, LambdaNorm::BoxVolume)?;
            let raw = dspan::remez::report_from_span(z, d, &span, LambdaNorm::Raw)?;
            let est = exact_remez_span(z, d, 513)?;
            let sound = est.value <= boxn.factor + 1e-6;
            if !sound {
                offenders.push(format!("{name} d={d}"));
            }
            csv.push_str(&format!(
                "{name},{d},{},{},{},{},{sound}\n",
                span.omega_lo, boxn.factor, raw.factor, est.value
            ));
        }
    }
    let path = dir.join("thm26_tail_sets.csv");
    write_file(&path, &csv)?;
    Ok(("thm26", offenders, vec![path.display().to_string()]))
}

fn reproduce_lemma21(dir: &Path) -> Result<Sweep, Failure> {
    let mut csv = String::from("n,s,d,product_bound,oracle,pass\n");
    let mut offenders = Vec::new();
    let (n, s, d) = (2usize, 11usize, 3usize);
    let product = dspan::remez::grid_product_bound(n, s, d)?;
    let g = make_grid_nd(n, s)?;
    let est = exact_remez_span(&g, d, 65)?;
    let pass = est.value <= product + 1e-6;
    if !pass {
        offenders.push(format!("n={n} s={s} d={d}"));
    }
    csv.push_str(&format!("{n},{s},{d},{product},{},{pass}\n", est.value));
    let path = dir.join("lemma21_product_bound.csv");
    write_file(&path, &csv)?;
    Ok(("lemma21", offenders, vec![path.display().to_string()]))
}

