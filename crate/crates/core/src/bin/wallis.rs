use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wallis_rigidity::cli_io::{
    density_payload, pi_payload, rigidity_payload, sample_payload, shell_payload, Destination,
    Format, MSpec, OutputSpec, Payload, DEFAULT_PRECISION, THREADS_ENV,
};
use wallis_rigidity::models::load_radial_profile;
use wallis_rigidity::numerics::{Integrator, DEFAULT_ABS_TOL, DEFAULT_REL_TOL};
use wallis_rigidity::rigidity::{TableConfig, DEFAULT_QUADRATURE_CUTOFF};
use wallis_rigidity::{Error, QuantumIndex};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "wallis", version, about = "Equatorial rigidity and the finite Wallis product")]
struct Cli {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv, global = true)]
    format: FormatArg,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Significant digits for floating-point values (1-17).
    #[arg(long, default_value_t = DEFAULT_PRECISION, global = true)]
    precision: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rigidity index by every route, with defect and asymptotics.
    Rigidity(RigidityArgs),
    /// Polar density curves on a uniform θ grid.
    Density(DensityArgs),
    /// Wallis estimates of π with exact errors.
    Pi {
        #[arg(long, value_parser = parse_m)]
        m_max: u64,
    },
    /// Draw polar angles and summarize their moments.
    Sample {
        #[arg(long, value_parser = parse_m, allow_negative_numbers = true)]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Thin-shell effective radius and surface spectrum from a radial profile.
    Shell {
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        mass: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        radial_energy: f64,
        #[arg(long)]
        ell_max: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "m_source")]
struct MSource {
    #[arg(long, num_args = 1.., value_parser = parse_m, allow_negative_numbers = true)]
    m: Vec<u64>,
    #[arg(long, value_parser = parse_m)]
    m_max: Option<u64>,
}

#[derive(Args, Debug)]
struct RigidityArgs {
    #[command(flatten)]
    source: MSource,
    #[arg(long, default_value_t = 1, requires = "m_max")]
    stride: u64,
    /// Relative tolerance for the quadrature route.
    #[arg(long, default_value_t = DEFAULT_REL_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_ABS_TOL)]
    abs_tol: f64,
    #[arg(long, default_value_t = DEFAULT_QUADRATURE_CUTOFF)]
    quadrature_cutoff: u64,
}

#[derive(Args, Debug)]
struct DensityArgs {
    #[arg(long, required = true, num_args = 1.., value_parser = parse_m, allow_negative_numbers = true)]
    m: Vec<u64>,
    #[arg(long, default_value_t = 721)]
    points: usize,
    /// Add the equatorial Gaussian next to each exact curve.
    #[arg(long)]
    gaussian: bool,
}

fn parse_m(s: &str) -> Result<u64, String> {
    let v: i64 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    u64::try_from(v).map_err(|_| format!("m must be non-negative, got {v}"))
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::Domain(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Compute(e.to_string()))
}

fn to_indices(ms: &[u64]) -> Vec<QuantumIndex> {
    ms.iter().copied().map(QuantumIndex::new).collect()
}

/// Builds the payload plus any per-row diagnostics that should fail the run
/// after the data has been written.
fn build(command: Command) -> Result<(Payload, Vec<String>), Failure> {
    match command {
        Command::Rigidity(args) => {
            let spec = match args.source.m_max {
                Some(max) => MSpec::Range { max, stride: args.stride },
                None => MSpec::List(to_indices(&args.source.m)),
            };
            let config = TableConfig {
                integrator: Integrator::new(args.tol, args.abs_tol),
                quadrature_cutoff: args.quadrature_cutoff,
                ..TableConfig::default()
            };
            let (payload, failures) = rigidity_payload(&spec, &config)?;
            let diagnostics = failures
                .into_iter()
                .map(|(m, e)| format!("row m = {m}: {e}"))
                .collect();
            Ok((payload, diagnostics))
        }
        Command::Density(args) => Ok((
            density_payload(&to_indices(&args.m), args.points, args.gaussian)?,
            Vec::new(),
        )),
        Command::Pi { m_max } => Ok((pi_payload(QuantumIndex::new(m_max))?, Vec::new())),
        Command::Sample { m, count, seed } => {
            let count = usize::try_from(count)
                .map_err(|_| Failure::Compute(format!("sample count {count} too large")))?;
            let payload = sample_payload(QuantumIndex::new(m), count, seed, &Integrator::default())?;
            Ok((payload, Vec::new()))
        }
        Command::Shell {
            profile,
            mass,
            radial_energy,
            ell_max,
        } => {
            let file = File::open(&profile)
                .map_err(|e| Failure::Compute(format!("{}: {e}", profile.display())))?;
            let parsed = load_radial_profile(io::BufReader::new(file))
                .map_err(|e| Failure::Compute(format!("{}: {e}", profile.display())))?;
            let label = profile.display().to_string();
            Ok((shell_payload(&parsed, &label, mass, radial_energy, ell_max)?, Vec::new()))
        }
    }
}

fn write_output(spec: &OutputSpec, text: &str) -> Result<(), Failure> {
    let result = match &spec.destination {
        Destination::Stdout => io::stdout().lock().write_all(text.as_bytes()),
        Destination::File(path) => std::fs::write(path, text),
    };
    match result {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other.map_err(|e| Failure::Compute(format!("writing output: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = match cli.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let destination = cli.out.map_or(Destination::Stdout, Destination::File);
    let spec = OutputSpec::new(format, destination, cli.precision)?;
    configure_threads()?;

    let (payload, diagnostics) = build(cli.command)?;
    write_output(&spec, &payload.render(spec.format, spec.precision()))?;
    if diagnostics.is_empty() {
        Ok(())
    } else {
        Err(Failure::Compute(diagnostics.join("\n")))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
