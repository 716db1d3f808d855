//! The `h2e` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error, 3 I/O error. Data goes to the output target, diagnostics to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use h2e_core::H22Variant;

use crate::figure::{build_figure, Figure};
use crate::output::{format_number, OutputFormat};
use crate::scan::{
    records_table, run_scan, ScanConfig, ScanError, ScanRecord, DEFAULT_STEPS, DEFAULT_S_MAX, DEFAULT_S_MIN,
};
use crate::units::EnergyUnit;
use crate::verify::{run_verify, VerifyConfig, VerifyError};

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "h2e", version, about = "Binding energy and electron entanglement of the minimal-basis H2 molecule")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the model at a single internuclear distance.
    Point(PointArgs),
    /// Sweep a uniform grid of distances.
    Scan(ScanArgs),
    /// Emit the data behind one of the four standard plots.
    Figure(FigureArgs),
    /// Check every closed form against the numerical oracles.
    Verify(VerifyArgs),
}

/// Which `H22` matrix element to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum H22Choice {
    #[default]
    Corrected,
    Printed,
}

impl From<H22Choice> for H22Variant {
    fn from(c: H22Choice) -> Self {
        match c {
            H22Choice::Corrected => H22Variant::Corrected,
            H22Choice::Printed => H22Variant::Printed,
        }
    }
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Energy unit for every energy column.
    #[arg(long, value_enum, default_value_t)]
    pub unit: EnergyUnit,
    #[arg(long, value_enum, default_value_t)]
    pub h22: H22Choice,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Internuclear distance in Bohr radii.
    #[arg(long, allow_negative_numbers = true)]
    pub s: f64,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Emit a one-row table instead of labelled lines.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, allow_negative_numbers = true, default_value_t = DEFAULT_S_MIN)]
    pub s_min: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = DEFAULT_S_MAX)]
    pub s_max: f64,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    pub steps: usize,
    /// Worker threads.
    #[arg(long, env = "H2E_PARALLEL", default_value = "1")]
    pub parallel: NonZeroUsize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub which: Figure,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Monte-Carlo samples per two-electron integral.
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    /// Variant whose binding-curve minimum is checked.
    #[arg(long, value_enum, default_value_t)]
    pub h22: H22Choice,
    #[arg(long, env = "H2E_PARALLEL", default_value = "1")]
    pub parallel: NonZeroUsize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Scan(#[from] ScanError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("verification failed: {0} check(s) outside tolerance")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::VerifyFailed(_) => EXIT_VERIFY_FAILED,
            CliError::Scan(_) | CliError::Verify(_) => EXIT_USAGE,
        }
    }
}

fn scan_config(grid: &GridArgs, model: &ModelArgs, format: OutputFormat) -> ScanConfig {
    ScanConfig {
        s_min: grid.s_min,
        s_max: grid.s_max,
        steps: grid.steps,
        unit: model.unit,
        h22_variant: model.h22.into(),
        format,
        parallel: grid.parallel,
        ..ScanConfig::default()
    }
}

/// Writes `data` to `path`, or to standard output when `path` is `None`.
fn emit(path: Option<&Path>, data: &[u8]) -> Result<(), CliError> {
    let result = match path {
        Some(p) => File::create(p).and_then(|f| {
            let mut w = BufWriter::new(f);
            w.write_all(data).and_then(|()| w.flush())
        }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(data).and_then(|()| out.flush())
        }
    };
    result.map_err(|source| CliError::Io {
        path: path.map_or_else(|| "<stdout>".to_owned(), |p| p.display().to_string()),
        source,
    })
}

fn point_text(r: &ScanRecord, unit: EnergyUnit) -> String {
    let sym = unit.symbol();
    let mut lines = vec![format!("s = {}", format_number(r.s))];
    for (key, e) in [("e_psi1", r.e_psi1), ("e_psi2", r.e_psi2), ("e_ci", r.e_ci)] {
        lines.push(format!("{key} = {} {sym}", format_number(e)));
    }
    for (key, v) in [("c1_sq", r.c1_sq), ("c2_sq", r.c2_sq), ("concurrence", r.concurrence), ("entropy", r.entropy)] {
        lines.push(format!("{key} = {}", format_number(v)));
    }
    lines.join("\n") + "\n"
}

fn cmd_point(args: &PointArgs) -> Result<(), CliError> {
    if !(args.s.is_finite() && args.s > 0.0) {
        return Err(ScanError::Config(format!("s must be positive, got {}", args.s)).into());
    }
    let record = ScanRecord::compute(args.s, args.model.unit, args.model.h22.into())?;
    let text = match args.format {
        None => point_text(&record, args.model.unit),
        Some(f) => records_table(&[record]).render(f),
    };
    emit(None, text.as_bytes())
}

fn cmd_scan(args: &ScanArgs) -> Result<(), CliError> {
    let config = scan_config(&args.grid, &args.model, args.format);
    let records = run_scan(&config)?;
    emit(args.out.as_deref(), records_table(&records).render(config.format).as_bytes())
}

fn cmd_figure(args: &FigureArgs) -> Result<(), CliError> {
    let config = scan_config(&args.grid, &args.model, args.format);
    let table = build_figure(args.which, &config)?;
    emit(args.out.as_deref(), table.render(config.format).as_bytes())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let config =
        VerifyConfig { seed: args.seed, samples: args.samples, h22_variant: args.h22.into(), parallel: args.parallel };
    let report = run_verify(&config)?;
    emit(None, report.render().as_bytes())?;
    match report.failures().count() {
        0 => Ok(()),
        n => Err(CliError::VerifyFailed(n)),
    }
}

pub fn execute(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Point(a) => cmd_point(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Figure(a) => cmd_figure(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// Parses `args`, runs the command, and maps the outcome to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
