//! Batch front end for the transform library.
//!
//! Subcommands:
//! - `eval-w` evaluates w(z) for each row of a CSV of complex points;
//! - `transform` / `inverse` apply the forward or inverse transform of a
//!   sampled function and write the result on a uniform grid;
//! - `window-demo` emits the Gaussian window kernels and the constant-function
//!   reconstruction curves whose ripple shrinks as the width c grows;
//! - `reproduce` runs a bundled error-envelope preset and writes the envelope
//!   CSV plus a JSON verdict.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 I/O error, 4 numerical
//! error (overflow, quadrature non-convergence). Error messages name the
//! offending row or flag. Identical invocations produce byte-identical output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gsft::reference::delta_envelope;
use gsft::sampling::{gaussian_kernel, reconstruct, SampledFunction, TransformConfig};
use gsft::transform::{self, Direction, EvaluationGrid};
use gsft::{faddeeva, Complex64};

mod io;

/// Gaussian-windowed sampling transforms and the complex error function w(z).
#[derive(Parser)]
#[command(name = "gsft", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate w(z) for each row of a CSV of complex points
    EvalW(EvalArgs),
    /// Forward transform of a sampled function
    Transform(JobArgs),
    /// Inverse transform of sampled spectrum values
    Inverse(JobArgs),
    /// Emit window kernel and reconstruction-ripple curves as CSV
    WindowDemo(DemoArgs),
    /// Run a bundled error-envelope preset (fig6 or fig7)
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Input CSV of evaluation points with header `re,im`
    #[arg(long)]
    input: PathBuf,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Evaluate with the adaptive-quadrature reference instead of the region
    /// evaluator, at this absolute tolerance (0 < tol <= 1e-6)
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Args)]
struct JobArgs {
    /// Sample spacing h (> 0)
    #[arg(long)]
    h: f64,
    /// Gaussian window width c (> 0)
    #[arg(long)]
    c: f64,
    /// Half sample count N; samples carry indices n = -N..N
    #[arg(long)]
    n: usize,
    /// Number of n < 0 terms the truncated and table formulations keep
    /// (default: 3, clamped to N)
    #[arg(long)]
    trunc_depth: Option<usize>,
    /// Evaluation formulation
    #[arg(long, value_enum, default_value_t = Formulation::Harmonic)]
    formulation: Formulation,
    /// First grid point
    #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
    grid_min: f64,
    /// Last grid point
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    grid_max: f64,
    /// Number of grid points
    #[arg(long, default_value_t = 201)]
    grid_count: usize,
    /// Input samples CSV with header `n,value_re,value_im`
    #[arg(long)]
    input: PathBuf,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DemoArgs {
    /// Output directory for kernels.csv and window.csv
    #[arg(long)]
    output: PathBuf,
    /// First grid point
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    grid_min: f64,
    /// Last grid point
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    grid_max: f64,
    /// Number of grid points
    #[arg(long, default_value_t = 1001)]
    grid_count: usize,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Bundled preset to run
    #[arg(value_enum)]
    preset: Preset,
    /// Output directory for envelope.csv and summary.json
    #[arg(long)]
    output: PathBuf,
    /// First grid point
    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    grid_min: f64,
    /// Last grid point
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    grid_max: f64,
    /// Number of grid points
    #[arg(long, default_value_t = 2001)]
    grid_count: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formulation {
    /// Full weighted sum of w-function evaluations
    Weighted,
    /// Weighted sum with the n < 0 tail cut at trunc-depth
    Truncated,
    /// Truncated sum applied through a precomputed weight table
    Table,
    /// Damped trigonometric sum (fastest; the default)
    Harmonic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// Coarse envelope: N = 50, h = c = 0.0099, bound 1e-3
    Fig6,
    /// Fine envelope: N = 300, h = c = 0.00166389, bound 3e-5
    Fig7,
}

struct PresetDetails {
    name: &'static str,
    half_count: usize,
    step: f64,
    bound: f64,
}

impl Preset {
    fn details(self) -> PresetDetails {
        match self {
            Preset::Fig6 => PresetDetails {
                name: "fig6",
                half_count: 50,
                step: 0.0099,
                bound: 1.0e-3,
            },
            Preset::Fig7 => PresetDetails {
                name: "fig7",
                half_count: 300,
                step: 0.00166389,
                bound: 3.0e-5,
            },
        }
    }
}

/// Process-level error classes, one exit code each.
#[derive(Debug)]
pub enum CliError {
    /// Flag values or file contents that do not parse or validate.
    Parse(String),
    /// Filesystem failures opening, creating, or writing artifacts.
    Io(String),
    /// Explicit numerical failure reported by the library.
    Numerical(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Io(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Io(m) | CliError::Numerical(m) => m,
        }
    }
}

/// Classifies a library error: I/O and numerical failures keep their class;
/// everything else reached the library through a bad flag or file and counts
/// as a parse error.
pub fn classify(err: gsft::Error, context: &str) -> CliError {
    match err {
        gsft::Error::Io(e) => CliError::Io(format!("{context}: {e}")),
        gsft::Error::Overflow { .. } | gsft::Error::QuadratureDidNotConverge { .. } => {
            CliError::Numerical(format!("{context}: {err}"))
        }
        other => CliError::Parse(format!("{context}: {other}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::EvalW(args) => run_eval_w(args),
        Command::Transform(args) => run_job(args, Direction::Forward),
        Command::Inverse(args) => run_job(args, Direction::Inverse),
        Command::WindowDemo(args) => run_window_demo(args),
        Command::Reproduce(args) => run_reproduce(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn linspace_from_flags(min: f64, max: f64, count: usize) -> Result<EvaluationGrid, CliError> {
    EvaluationGrid::linspace(min, max, count)
        .map_err(|e| CliError::Parse(format!("flags --grid-min/--grid-max/--grid-count: {e}")))
}

fn create_output_dir(dir: &std::path::Path) -> Result<(), CliError> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::Io(format!("cannot create directory {}: {e}", dir.display())))
}

fn run_eval_w(args: EvalArgs) -> Result<(), CliError> {
    if let Some(tol) = args.tolerance {
        if !(tol > 0.0 && tol <= 1.0e-6) {
            return Err(CliError::Parse(format!(
                "flag --tolerance: must be in (0, 1e-6], got {tol}"
            )));
        }
    }
    let points = io::read_points(&args.input)?;
    let mut values = Vec::with_capacity(points.len());
    for (index, z) in points.iter().enumerate() {
        // data rows start on file line 2, after the header
        let line = index + 2;
        let value = match args.tolerance {
            Some(tol) => faddeeva::w_quadrature_oracle(*z, tol),
            None => faddeeva::w(*z),
        }
        .map_err(|e| classify(e, &format!("{} row {line}", args.input.display())))?;
        values.push(value);
    }
    io::write_values(args.output.as_deref(), &values)
}

impl JobArgs {
    fn config(&self) -> Result<TransformConfig, CliError> {
        let config = TransformConfig::new(self.h, self.c, self.n)
            .map_err(|e| CliError::Parse(format!("flags --h/--c/--n: {e}")))?;
        match self.trunc_depth {
            Some(depth) => config
                .with_trunc_depth(depth)
                .map_err(|e| CliError::Parse(format!("flag --trunc-depth: {e}"))),
            None => Ok(config),
        }
    }
}

fn run_job(args: JobArgs, direction: Direction) -> Result<(), CliError> {
    let config = args.config()?;
    let grid = linspace_from_flags(args.grid_min, args.grid_max, args.grid_count)?;
    let samples = io::read_samples(&args.input, &config)?;
    let values = evaluate_grid(&samples, &config, &grid, direction, args.formulation)?;
    io::write_spectrum(args.output.as_deref(), grid.points(), &values)
}

fn evaluate_grid(
    samples: &SampledFunction,
    config: &TransformConfig,
    grid: &EvaluationGrid,
    direction: Direction,
    formulation: Formulation,
) -> Result<Vec<Complex64>, CliError> {
    let context = format!("{direction} evaluation");
    if formulation == Formulation::Table {
        let table = transform::precompute_weights(config, grid, direction)
            .map_err(|e| classify(e, &context))?;
        let spectrum = match direction {
            Direction::Forward => transform::forward_with_table(samples, &table),
            Direction::Inverse => transform::inverse_with_table(samples, &table),
        }
        .map_err(|e| classify(e, &context))?;
        return Ok(spectrum.values().to_vec());
    }
    let op = match (formulation, direction) {
        (Formulation::Weighted, Direction::Forward) => transform::forward_weighted,
        (Formulation::Weighted, Direction::Inverse) => transform::inverse_weighted,
        (Formulation::Truncated, Direction::Forward) => transform::forward_truncated,
        (Formulation::Truncated, Direction::Inverse) => transform::inverse_truncated,
        (Formulation::Harmonic, Direction::Forward) => transform::forward_harmonic,
        (Formulation::Harmonic, Direction::Inverse) => transform::inverse_harmonic,
        (Formulation::Table, _) => unreachable!("table formulation handled above"),
    };
    grid.points()
        .iter()
        .map(|&x| op(samples, config, x).map_err(|e| classify(e, &format!("{context} at {x}"))))
        .collect()
}

const DEMO_STEP: f64 = 0.25;
const DEMO_HALF_COUNT: usize = 10;
const DEMO_WIDTHS: [f64; 3] = [0.15, 0.20, 0.25];

fn run_window_demo(args: DemoArgs) -> Result<(), CliError> {
    let grid = linspace_from_flags(args.grid_min, args.grid_max, args.grid_count)?;
    create_output_dir(&args.output)?;
    let mut kernel_columns = Vec::new();
    let mut recon_columns = Vec::new();
    for width in DEMO_WIDTHS {
        let config = TransformConfig::new(DEMO_STEP, width, DEMO_HALF_COUNT)
            .map_err(|e| CliError::Parse(format!("window-demo preset: {e}")))?;
        let ones = SampledFunction::sample(&config, |_| 1.0);
        kernel_columns.push(
            grid.points()
                .iter()
                .map(|&t| gaussian_kernel(t, &config))
                .collect(),
        );
        let recon = grid
            .points()
            .iter()
            .map(|&t| {
                reconstruct(&ones, &config, t)
                    .map(|v| v.re)
                    .map_err(|e| classify(e, &format!("reconstruction at t = {t}")))
            })
            .collect::<Result<Vec<f64>, CliError>>()?;
        recon_columns.push(recon);
    }
    io::write_columns(
        &args.output.join("kernels.csv"),
        "t,kernel_c015,kernel_c020,kernel_c025",
        grid.points(),
        &kernel_columns,
    )?;
    io::write_columns(
        &args.output.join("window.csv"),
        "t,recon_c015,recon_c020,recon_c025",
        grid.points(),
        &recon_columns,
    )
}

fn run_reproduce(args: ReproduceArgs) -> Result<(), CliError> {
    let preset = args.preset.details();
    let config = TransformConfig::new(preset.step, preset.step, preset.half_count)
        .map_err(|e| CliError::Parse(format!("preset {}: {e}", preset.name)))?;
    let grid = linspace_from_flags(args.grid_min, args.grid_max, args.grid_count)?;
    let envelope = delta_envelope(&config, &grid)
        .map_err(|e| classify(e, &format!("preset {}", preset.name)))?;
    create_output_dir(&args.output)?;

    let csv_path = args.output.join("envelope.csv");
    let file = fs::File::create(&csv_path)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", csv_path.display())))?;
    envelope
        .write_csv(std::io::BufWriter::new(file))
        .map_err(|e| classify(e, &csv_path.display().to_string()))?;

    let pass = envelope.max_abs_re <= preset.bound && envelope.max_abs_im <= preset.bound;
    let summary = serde_json::json!({
        "schema": 1,
        "preset": preset.name,
        "n": preset.half_count,
        "h": preset.step,
        "c": preset.step,
        "grid_min": args.grid_min,
        "grid_max": args.grid_max,
        "grid_count": args.grid_count,
        "max_abs_re": envelope.max_abs_re,
        "max_abs_im": envelope.max_abs_im,
        "bound": preset.bound,
        "pass": pass,
    });
    let mut text = serde_json::to_string_pretty(&summary)
        .map_err(|e| CliError::Io(format!("summary serialization: {e}")))?;
    text.push('\n');
    let json_path = args.output.join("summary.json");
    fs::write(&json_path, &text)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", json_path.display())))?;
    print!("{text}");
    Ok(())
}
