//! Command-line interface: simulate → corrupt → smooth → identify →
//! evaluate → benchmark.
//!
//! Configuration precedence: command-line flags override entries of an
//! optional `--config` key=value file, which override built-in defaults.
//! The config file format is one `key = value` pair per line, `#` starts a
//! comment; keys are the long flag names without the leading dashes.
//!
//! All randomness flows from a single base seed. The benchmark derives the
//! seed of repeat `r` of experiment number `e` (position in the suite's
//! experiment list) as `seed + 10_000 * e + r`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::dictionary::{build_system, Coefficients, DictionarySpec, RegressionSystem};
use crate::grid::Field;
use crate::identify::{sc, st, IdentificationReport, ScConfig, StConfig};
use crate::metrics::{coefficient_error, residual_error};
use crate::simulate::{add_noise, builtin_experiment, NoiseSpec};
use crate::smoothing::{sdd, smooth_space, SmootherKind, SmootherSpec};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "pdeid",
    version,
    about = "Identify governing PDEs from noisy space-time grid data"
)]
pub struct Cli {
    /// Key=value config file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a built-in experiment and write the clean downsampled data.
    Simulate(SimulateArgs),
    /// Add seeded Gaussian noise to a data file.
    Corrupt(CorruptArgs),
    /// Apply the spatial smoother to a data file.
    Smooth(SmoothArgs),
    /// Identify the governing PDE of a data file.
    Identify(IdentifyArgs),
    /// Score an identification report against a built-in ground truth.
    Evaluate(EvaluateArgs),
    /// Run a suite of seed-averaged identification experiments.
    Benchmark(BenchmarkArgs),
}

#[derive(Args)]
struct SimulateArgs {
    /// Built-in experiment name (transport, burgers, burgers-diffusion,
    /// twod-advdiff, twod-transport-x, twod-transport-xy).
    #[arg(long)]
    experiment: Option<String>,
    /// Output data file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CorruptArgs {
    /// Input data file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Noise level in percent of the root-mean-square signal.
    #[arg(long)]
    noise: Option<f64>,
    /// RNG seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output data file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct SmootherArgs {
    /// Smoother kind: mls, moving-average, diffusion, none.
    #[arg(long)]
    smoother: Option<String>,
    /// MLS bandwidth (physical length units of the smoothed axis).
    #[arg(long)]
    h: Option<f64>,
    /// Separate MLS bandwidth for the time axis (defaults to h capped at a
    /// tenth of the record length).
    #[arg(long = "h-t")]
    h_t: Option<f64>,
    /// Moving-average window (odd).
    #[arg(long)]
    window: Option<usize>,
    /// Diffusion smoothing iterations.
    #[arg(long)]
    steps: Option<usize>,
}

impl SmootherArgs {
    fn build(&self, file: &ConfigFile) -> Result<SmootherSpec> {
        let mut spec = SmootherSpec::default();
        if let Some(kind) = or_file(&self.smoother, file, "smoother")? {
            spec.kind = kind.parse::<SmootherKind>()?;
        }
        if let Some(h) = or_file(&self.h, file, "h")? {
            spec.h = h;
        }
        spec.h_t = or_file(&self.h_t, file, "h-t")?;
        if let Some(w) = or_file(&self.window, file, "window")? {
            spec.window = w;
        }
        if let Some(s) = or_file(&self.steps, file, "steps")? {
            spec.steps = s;
        }
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Args)]
struct SmoothArgs {
    /// Input data file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[command(flatten)]
    smoother: SmootherArgs,
    /// Output data file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct IdentifyArgs {
    /// Input data file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Selection method: st, sc, or both.
    #[arg(long)]
    method: Option<String>,
    /// Time-evolution window (number of coarse steps) for st.
    #[arg(long)]
    w: Option<usize>,
    /// First-block row fraction for sc cross-validation.
    #[arg(long)]
    alpha: Option<f64>,
    #[command(flatten)]
    smoother: SmootherArgs,
    /// Write the JSON identification report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvaluateArgs {
    /// JSON report produced by `identify`.
    #[arg(long)]
    report: Option<PathBuf>,
    /// The data file the report was produced from.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Built-in experiment providing the ground-truth coefficients.
    #[arg(long)]
    truth: Option<String>,
    #[command(flatten)]
    smoother: SmootherArgs,
    /// Write the JSON evaluation here as well as to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchmarkArgs {
    /// Suite name: paper (all experiments) or quick (transport only).
    #[arg(long)]
    suite: Option<String>,
    /// Repeats per noisy cell (clean cells always run once).
    #[arg(long)]
    repeats: Option<usize>,
    /// Base seed; per-repeat seeds are seed + 10_000*experiment + repeat.
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path.
    #[arg(long = "out-csv")]
    out_csv: Option<PathBuf>,
    /// Optional JSON summary path (includes per-cell failures).
    #[arg(long = "out-json")]
    out_json: Option<PathBuf>,
}

/// Parsed key=value configuration file.
#[derive(Default)]
struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = fs::read_to_string(path)?;
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(Error::InvalidArgument(format!(
                    "config line {}: expected key = value, got '{raw}'",
                    lineno + 1
                )));
            };
            entries.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Self { entries })
    }

    fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                Error::InvalidArgument(format!("config key '{key}': cannot parse '{raw}'"))
            }),
        }
    }
}

/// Flag value if present, else the config-file entry, else `None`.
fn or_file<T: Clone + std::str::FromStr>(
    flag: &Option<T>,
    file: &ConfigFile,
    key: &str,
) -> Result<Option<T>> {
    match flag {
        Some(v) => Ok(Some(v.clone())),
        None => file.get(key),
    }
}

fn required<T: Clone + std::str::FromStr>(
    flag: &Option<T>,
    file: &ConfigFile,
    key: &str,
) -> Result<T> {
    or_file(flag, file, key)?
        .ok_or_else(|| Error::InvalidArgument(format!("missing required option --{key}")))
}

/// Entry point. Returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let file = ConfigFile::load(cli.config.as_deref())?;
    match &cli.cmd {
        Cmd::Simulate(a) => cmd_simulate(a, &file),
        Cmd::Corrupt(a) => cmd_corrupt(a, &file),
        Cmd::Smooth(a) => cmd_smooth(a, &file),
        Cmd::Identify(a) => cmd_identify(a, &file),
        Cmd::Evaluate(a) => cmd_evaluate(a, &file),
        Cmd::Benchmark(a) => cmd_benchmark(a, &file),
    }
}

fn cmd_simulate(a: &SimulateArgs, file: &ConfigFile) -> Result<i32> {
    let name: String = required(&a.experiment, file, "experiment")?;
    let out: PathBuf = required(&a.out, file, "out")?;
    let exp = builtin_experiment(&name)?;
    let data = exp.clean_data()?;
    data.write(&out)?;
    println!("wrote {} ({})", out.display(), describe(&data));
    Ok(0)
}

fn cmd_corrupt(a: &CorruptArgs, file: &ConfigFile) -> Result<i32> {
    let input: PathBuf = required(&a.input, file, "in")?;
    let out: PathBuf = required(&a.out, file, "out")?;
    let percent: f64 = required(&a.noise, file, "noise")?;
    let seed: u64 = or_file(&a.seed, file, "seed")?.unwrap_or(0);
    let data = Field::read(&input)?;
    let noisy = add_noise(&data, &NoiseSpec { percent, seed })?;
    noisy.write(&out)?;
    println!("wrote {} ({percent}% noise, seed {seed})", out.display());
    Ok(0)
}

fn cmd_smooth(a: &SmoothArgs, file: &ConfigFile) -> Result<i32> {
    let input: PathBuf = required(&a.input, file, "in")?;
    let out: PathBuf = required(&a.out, file, "out")?;
    let spec = a.smoother.build(file)?;
    let data = Field::read(&input)?;
    let smoothed = smooth_space(&data, &spec)?;
    smoothed.write(&out)?;
    println!("wrote {}", out.display());
    Ok(0)
}

fn cmd_identify(a: &IdentifyArgs, file: &ConfigFile) -> Result<i32> {
    let input: PathBuf = required(&a.input, file, "in")?;
    let method: String = or_file(&a.method, file, "method")?.unwrap_or_else(|| "both".into());
    if !matches!(method.as_str(), "st" | "sc" | "both") {
        return Err(Error::InvalidArgument(format!(
            "method must be st, sc, or both, got '{method}'"
        )));
    }
    let w: usize = or_file(&a.w, file, "w")?.unwrap_or(20);
    let alpha: f64 = or_file(&a.alpha, file, "alpha")?.unwrap_or(1.0 / 200.0);
    let spec = a.smoother.build(file)?;
    let data = Field::read(&input)?;
    let sys = assemble(&data, &spec)?;
    let derivs = sdd(&data, &spec, &sys.dict.needed_derivatives())?;

    let mut reports = Vec::new();
    if method == "st" || method == "both" {
        let cfg = StConfig::with_window(w);
        let t0 = Instant::now();
        let out = st(&sys, &derivs.denoised, &cfg)?;
        reports.push(IdentificationReport::from_st(&sys, &out, &cfg, t0.elapsed().as_millis()));
    }
    if method == "sc" || method == "both" {
        let cfg = ScConfig::with_alpha(alpha);
        let t0 = Instant::now();
        let out = sc(&sys, &cfg)?;
        reports.push(IdentificationReport::from_sc(&sys, &out, &cfg, t0.elapsed().as_millis()));
    }

    if let Some(path) = or_file(&a.out, file, "out")? {
        let json = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])?
        } else {
            serde_json::to_string_pretty(&reports)?
        };
        fs::write(&path, json)?;
    }
    for r in &reports {
        println!("{}", r.pde);
    }
    Ok(0)
}

fn cmd_evaluate(a: &EvaluateArgs, file: &ConfigFile) -> Result<i32> {
    let report_path: PathBuf = required(&a.report, file, "report")?;
    let input: PathBuf = required(&a.input, file, "in")?;
    let truth_name: String = required(&a.truth, file, "truth")?;
    let spec = a.smoother.build(file)?;

    let exp = builtin_experiment(&truth_name)?;
    let data = Field::read(&input)?;
    let sys = assemble(&data, &spec)?;
    if sys.dict.d != exp.pde.dict.d {
        return Err(Error::ShapeMismatch(format!(
            "data is {}-dimensional but experiment '{truth_name}' is {}-dimensional",
            sys.dict.d, exp.pde.dict.d
        )));
    }

    let raw: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report_path)?)?;
    // `identify --method both` writes an array; evaluate each entry.
    let entries: Vec<&serde_json::Value> = match raw.as_array() {
        Some(arr) => arr.iter().collect(),
        None => vec![&raw],
    };
    let mut results = Vec::new();
    for entry in entries {
        let method = entry["method"].as_str().unwrap_or("?").to_string();
        let values: Vec<f64> = entry["coefficients"]
            .as_array()
            .ok_or_else(|| Error::MalformedFile("report lacks 'coefficients'".into()))?
            .iter()
            .map(|v| v.as_f64().unwrap_or(f64::NAN))
            .collect();
        if values.len() != sys.dict.len() {
            return Err(Error::ShapeMismatch(format!(
                "report has {} coefficients, dictionary has {}",
                values.len(),
                sys.dict.len()
            )));
        }
        let c_hat = Coefficients { d: sys.dict.d, values };
        let truth = &exp.pde.coefficients;
        results.push(serde_json::json!({
            "method": method,
            "coefficient_error": coefficient_error(&c_hat, truth)?,
            "residual_error": residual_error(&sys, &c_hat, truth)?,
            "support_exact": c_hat.support() == truth.support(),
        }));
    }
    let out_json = if results.len() == 1 {
        serde_json::to_string_pretty(&results[0])?
    } else {
        serde_json::to_string_pretty(&results)?
    };
    if let Some(path) = or_file(&a.out, file, "out")? {
        fs::write(&path, out_json.clone())?;
    }
    println!("{out_json}");
    Ok(0)
}

fn assemble(data: &Field, spec: &SmootherSpec) -> Result<RegressionSystem> {
    let dict = DictionarySpec::new(data.grid.d)?;
    let derivs = sdd(data, spec, &dict.needed_derivatives())?;
    build_system(&derivs, &dict)
}

fn describe(f: &Field) -> String {
    format!("d={}, M={}, N={}", f.grid.d, f.grid.m, f.grid.n)
}

// ---------------------------------------------------------------------------
// Benchmark
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Cell {
    experiment: &'static str,
    exp_index: u64,
    method: &'static str,
    noise_pct: f64,
}

#[derive(serde::Serialize)]
struct CellResult {
    experiment: String,
    method: String,
    noise_pct: f64,
    repeats: usize,
    mean_ec: f64,
    std_ec: f64,
    mean_er: f64,
    std_er: f64,
    support_hit_rate: f64,
    wall_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<String>,
}

fn suite_cells(suite: &str) -> Result<Vec<Cell>> {
    // Fixed experiment order; the position feeds the derived-seed formula.
    let grid: Vec<(&'static str, Vec<f64>)> = match suite {
        "quick" => vec![("transport", vec![0.0, 10.0])],
        "paper" => vec![
            ("transport", vec![0.0, 10.0, 30.0]),
            ("burgers", vec![0.0, 10.0]),
            ("burgers-diffusion", vec![0.0, 1.0, 10.0]),
            ("twod-advdiff", vec![0.0, 5.0]),
        ],
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite '{other}' (expected paper or quick)"
            )))
        }
    };
    let mut cells = Vec::new();
    for (exp_index, (experiment, noises)) in grid.into_iter().enumerate() {
        for noise_pct in noises {
            for method in ["st", "sc"] {
                cells.push(Cell { experiment, exp_index: exp_index as u64, method, noise_pct });
            }
        }
    }
    Ok(cells)
}

fn run_cell(cell: &Cell, repeats: usize, base_seed: u64) -> CellResult {
    let t0 = Instant::now();
    let repeats = if cell.noise_pct == 0.0 { 1 } else { repeats };
    let mut ecs = Vec::new();
    let mut ers = Vec::new();
    let mut hits = 0usize;
    let mut failure = None;
    for r in 0..repeats {
        let seed = base_seed + 10_000 * cell.exp_index + r as u64;
        match run_repeat(cell, seed) {
            Ok((ec, er, hit)) => {
                ecs.push(ec);
                ers.push(er);
                hits += hit as usize;
            }
            Err(e) => {
                failure = Some(format!("repeat {r}: {e}"));
                break;
            }
        }
    }
    let done = ecs.len().max(1) as f64;
    CellResult {
        experiment: cell.experiment.into(),
        method: cell.method.into(),
        noise_pct: cell.noise_pct,
        repeats,
        mean_ec: mean(&ecs),
        std_ec: std_dev(&ecs),
        mean_er: mean(&ers),
        std_er: std_dev(&ers),
        support_hit_rate: hits as f64 / done,
        wall_ms: t0.elapsed().as_millis(),
        failure,
    }
}

fn run_repeat(cell: &Cell, seed: u64) -> Result<(f64, f64, bool)> {
    let exp = builtin_experiment(cell.experiment)?;
    let clean = exp.clean_data()?;
    let data = if cell.noise_pct > 0.0 {
        add_noise(&clean, &NoiseSpec { percent: cell.noise_pct, seed })?
    } else {
        clean
    };
    let spec = SmootherSpec::default();
    let sys = assemble(&data, &spec)?;
    let c_hat = match cell.method {
        "st" => {
            let derivs = sdd(&data, &spec, &sys.dict.needed_derivatives())?;
            st(&sys, &derivs.denoised, &StConfig::with_window(exp.default_w))?.coefficients
        }
        _ => sc(&sys, &ScConfig::with_alpha(exp.default_alpha))?.coefficients,
    };
    let truth = &exp.pde.coefficients;
    Ok((
        coefficient_error(&c_hat, truth)?,
        residual_error(&sys, &c_hat, truth)?,
        c_hat.support() == truth.support(),
    ))
}

fn mean(v: &[f64]) -> f64 {
    if v.is_empty() {
        f64::NAN
    } else {
        v.iter().sum::<f64>() / v.len() as f64
    }
}

fn std_dev(v: &[f64]) -> f64 {
    match v.len() {
        0 => f64::NAN,
        1 => 0.0,
        n => {
            let m = mean(v);
            (v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n as f64 - 1.0)).sqrt()
        }
    }
}

fn cmd_benchmark(a: &BenchmarkArgs, file: &ConfigFile) -> Result<i32> {
    let suite: String = or_file(&a.suite, file, "suite")?.unwrap_or_else(|| "quick".into());
    let repeats: usize = or_file(&a.repeats, file, "repeats")?
        .unwrap_or(if suite == "paper" { 10 } else { 5 });
    let seed: u64 = or_file(&a.seed, file, "seed")?.unwrap_or(0);
    let out_csv: PathBuf = required(&a.out_csv, file, "out-csv")?;
    let out_json: Option<PathBuf> = or_file(&a.out_json, file, "out-json")?;

    let cells = suite_cells(&suite)?;
    // Cells are deterministic and independent; the output order is the fixed
    // suite order regardless of which worker finishes first.
    let results: Vec<CellResult> =
        cells.par_iter().map(|cell| run_cell(cell, repeats, seed)).collect();

    let mut csv = String::from(
        "experiment,method,noise_pct,repeats,mean_ec,std_ec,mean_er,std_er,support_hit_rate,wall_ms\n",
    );
    for r in &results {
        let _ = writeln!(
            csv,
            "{},{},{},{},{:.6e},{:.6e},{:.6e},{:.6e},{:.4},{}",
            r.experiment,
            r.method,
            r.noise_pct,
            r.repeats,
            r.mean_ec,
            r.std_ec,
            r.mean_er,
            r.std_er,
            r.support_hit_rate,
            r.wall_ms
        );
    }
    fs::write(&out_csv, &csv)?;
    if let Some(path) = &out_json {
        fs::write(path, serde_json::to_string_pretty(&results)?)?;
    }
    let failures: Vec<&CellResult> = results.iter().filter(|r| r.failure.is_some()).collect();
    for f in &failures {
        eprintln!(
            "cell failed: {} {} {}%: {}",
            f.experiment,
            f.method,
            f.noise_pct,
            f.failure.as_deref().unwrap_or("")
        );
    }
    println!("wrote {} ({} cells, {} failed)", out_csv.display(), results.len(), failures.len());
    Ok(if failures.is_empty() { 0 } else { 1 })
}
