use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ptnu::commands::{self, CommandError};
use ptnu::RunConfig;

#[derive(Parser, Debug)]
#[command(name = "ptnu", version, about = "Trigonometric Pöschl-Teller s-wave spectra via the parametric Nikiforov-Uvarov method")]
struct Cli {
    #[command(flatten)]
    overrides: Overrides,
    #[command(subcommand)]
    command: Command,
}

/// Flags override values read from `--config`.
#[derive(Args, Debug)]
struct Overrides {
    /// Mass, fm⁻¹
    #[arg(long, global = true)]
    m: Option<String>,
    /// Well parameter V1, fm⁻¹
    #[arg(long, global = true)]
    v1: Option<String>,
    /// Well parameter V2, fm⁻¹
    #[arg(long, global = true)]
    v2: Option<String>,
    /// Comma-separated range parameters α, fm⁻¹
    #[arg(long, global = true)]
    alpha: Option<String>,
    /// Largest radial quantum number
    #[arg(long, global = true)]
    nmax: Option<String>,
    /// Interior points of the coarse finite-difference grid
    #[arg(long = "grid-points", global = true)]
    grid_points: Option<String>,
    /// Relative band for the finite-difference check in `verify`
    #[arg(long, global = true)]
    tol: Option<String>,
    /// csv, tsv or json
    #[arg(long, global = true)]
    format: Option<String>,
    /// Decimal digits in printed values
    #[arg(long, global = true)]
    precision: Option<String>,
    /// File of `key = value` lines using the flag names as keys
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form energy table E(n, α)
    Table2,
    /// Normalized radial wavefunction samples
    Wavefunction {
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// Cross-check closed form, NU root and finite-difference oracle
    Verify,
    /// Approach of the ground state to the α → 0 limit
    Limit,
}

fn build_config(overrides: &Overrides) -> Result<RunConfig, CommandError> {
    let mut config = RunConfig::default();
    if let Some(path) = &overrides.config {
        config.apply_file(path)?;
    }
    let flags = [
        ("m", &overrides.m),
        ("v1", &overrides.v1),
        ("v2", &overrides.v2),
        ("alpha", &overrides.alpha),
        ("nmax", &overrides.nmax),
        ("grid-points", &overrides.grid_points),
        ("tol", &overrides.tol),
        ("format", &overrides.format),
        ("precision", &overrides.precision),
    ];
    for (key, value) in flags {
        if let Some(value) = value {
            config.set(key, value)?;
        }
    }
    config.validate()?;
    Ok(config)
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool, CommandError> {
    let config = build_config(&cli.overrides)?;
    match cli.command {
        Command::Table2 => commands::table2(&config, out)?,
        Command::Wavefunction { n, points } => commands::wavefunction(&config, n, points, out)?,
        Command::Verify => return commands::verify(&config, out),
        Command::Limit => commands::limit(&config, out)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => {
            eprintln!("ptnu: verification failed: at least one cell outside its band");
            ExitCode::from(1)
        }
        (Err(e), _) => {
            eprintln!("ptnu: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        (_, Err(e)) => {
            eprintln!("ptnu: output error: {e}");
            ExitCode::from(1)
        }
    }
}
