use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bezier_fastsub::harness::io::{
    self, Direction, EXIT_DOMAIN, EXIT_IO, EXIT_NUMERIC, EXIT_PARSE,
};
use bezier_fastsub::harness::{
    parse_degrees, run_accuracy, run_bench, ExperimentConfig, Method, ScaleRule, TimingMode,
    DEFAULT_DEGREES,
};
use bezier_fastsub::Error;

/// Bézier curve subdivision through FFT polynomial multiplication.
#[derive(Debug, Parser)]
#[command(name = "bezsub", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for random test curves.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Fixed scale for the scaled methods (default: 0.375 n + 0.9).
    #[arg(long, global = true)]
    scale: Option<f64>,
    /// Comma-separated methods: decasteljau, fft, direct, unscaled.
    #[arg(long, global = true)]
    method: Option<String>,
    /// Degrees such as `2..20,25,30`.
    #[arg(long, global = true)]
    degrees: Option<String>,
    /// Random curves per degree.
    #[arg(long, global = true, default_value_t = 1000)]
    count: usize,
    /// Number of split parameters `i / (K + 1)`.
    #[arg(long, global = true, default_value_t = 499)]
    splits: usize,
    /// Dimension of random curves.
    #[arg(long, global = true, default_value_t = 2)]
    dim: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file (default: standard output).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    PerCall,
    Amortized,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Axis {
    T,
    U,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Split the curve in a JSON file into two segments.
    Subdivide {
        #[arg(long)]
        input: PathBuf,
        /// Split parameter in [0, 1].
        #[arg(long, allow_hyphen_values = true)]
        at: f64,
    },
    /// Time the methods on random curves.
    Bench {
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Digits of accuracy against de Casteljau on random curves.
    Accuracy,
    /// All derivatives at both endpoints of the curve in a JSON file.
    Derivatives {
        #[arg(long)]
        input: PathBuf,
    },
    /// Restrict the patch in a JSON file to [0, c] along one parameter.
    SurfaceSubdivide {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: f64,
        #[arg(long, value_enum, default_value_t = Axis::T)]
        direction: Axis,
    },
}

fn methods(cli: &Cli, default: &[Method]) -> Result<Vec<Method>, Error> {
    match &cli.method {
        None => Ok(default.to_vec()),
        Some(list) => list.split(',').map(str::parse).collect(),
    }
}

fn config(cli: &Cli) -> Result<ExperimentConfig, Error> {
    let config = ExperimentConfig {
        degrees: match &cli.degrees {
            Some(text) => parse_degrees(text)?,
            None => DEFAULT_DEGREES.to_vec(),
        },
        curves_per_degree: cli.count,
        split_points: cli.splits,
        dimension: cli.dim,
        seed: cli.seed,
        scale_rule: cli.scale.map_or(ScaleRule::Default, ScaleRule::Fixed),
        methods: methods(cli, &[Method::DeCasteljau, Method::Fft, Method::Direct])?,
        ..Default::default()
    };
    config.validate()?;
    Ok(config)
}

fn exit_for(e: &Error) -> u8 {
    let code = match e {
        Error::InvalidInput(_) | Error::DegreeMismatch { .. } | Error::DimensionMismatch { .. } => {
            EXIT_PARSE
        }
        Error::Domain(_) => EXIT_DOMAIN,
        _ => EXIT_NUMERIC,
    };
    code as u8
}

fn emit(text: &str, out: Option<&Path>) -> ExitCode {
    match out {
        Some(path) => match fs::write(path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(EXIT_IO as u8)
            }
        },
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_for(&e))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let out = cli.out.as_deref();
    let code = match &cli.command {
        Command::Subdivide { input, at } => {
            let method = match methods(&cli, &[Method::Fft]) {
                Ok(m) if m.len() == 1 => m[0],
                Ok(_) => {
                    return fail(Error::InvalidInput(
                        "subdivide takes exactly one method".into(),
                    ))
                }
                Err(e) => return fail(e),
            };
            io::subdivide_file(input, *at, cli.scale, method, out)
        }
        Command::Derivatives { input } => io::derivatives_file(input, out),
        Command::SurfaceSubdivide {
            input,
            at,
            direction,
        } => {
            let direction = match direction {
                Axis::T => Direction::T,
                Axis::U => Direction::U,
            };
            io::surface_subdivide_file(input, *at, direction, cli.scale, out)
        }
        Command::Accuracy => {
            let report = match config(&cli).and_then(|c| run_accuracy(&c)) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            return emit(
                &match cli.format {
                    Format::Csv => report.to_csv(),
                    Format::Md => report.to_markdown(),
                },
                out,
            );
        }
        Command::Bench { mode } => {
            let modes: &[TimingMode] = match mode {
                Mode::PerCall => &[TimingMode::PerCall],
                Mode::Amortized => &[TimingMode::Amortized],
                Mode::Both => &[TimingMode::PerCall, TimingMode::Amortized],
            };
            let report = match config(&cli).and_then(|c| run_bench(&c, modes)) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            return emit(
                &match cli.format {
                    Format::Csv => report.to_csv(),
                    Format::Md => report.to_markdown(),
                },
                out,
            );
        }
    };
    ExitCode::from(code as u8)
}
