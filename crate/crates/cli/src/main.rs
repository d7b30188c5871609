mod commands;
mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::CliError;
use config::Config;
use render::{Format, Target};

/// Full flag codes over prime fields: analysis, enumeration, diagrams and verification.
///
/// Configuration is read from the TOML file named by FLAGCODES_CONFIG.
/// Exit codes: 0 ok, 1 usage, 2 parse, 3 consistency failure.
#[derive(Parser, Debug)]
#[command(name = "flagcodes", version, about)]
struct Cli {
    /// Run above the configured size caps (prints a warning).
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze a code file (text or JSON).
    Analyze {
        file: PathBuf,
        /// Print the full analysis as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Count distance paths of length n by distance.
    Paths {
        n: usize,
        /// Only this distance.
        #[arg(short, long)]
        distance: Option<usize>,
        /// List every path.
        #[arg(long)]
        list: bool,
    },
    /// Compare paths of distance d with splittings of D^n - d.
    Bijection { n: usize },
    /// Print a two-flag code file realizing a distance path.
    Realize {
        /// Field size.
        #[arg(short, long, default_value_t = 2)]
        q: u32,
        /// Ambient dimension; defaults to the number of deltas minus one.
        #[arg(short, long)]
        n: Option<usize>,
        /// Emit JSON instead of the text format.
        #[arg(long)]
        json: bool,
        #[arg(required = true, num_args = 1.., value_delimiter = ',')]
        deltas: Vec<usize>,
    },
    /// Draw the support, enriched support, frame, a path or a staircase.
    Render {
        #[arg(value_enum)]
        target: Target,
        /// Ambient dimension; inferred from a delta vector when omitted.
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Deltas for `path`, partition parts for `staircase`.
        #[arg(value_delimiter = ',')]
        payload: Vec<usize>,
    },
    /// Run the randomized and exhaustive property suite.
    Verify {
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        /// Field sizes, comma separated.
        #[arg(long, value_delimiter = ',')]
        q: Option<Vec<u32>>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate partitions embedded in FF(n) with their splittings.
    Partitions {
        n: usize,
        /// Only partitions of this size.
        #[arg(long)]
        size: Option<usize>,
        /// Only partitions with this splitting value.
        #[arg(long)]
        splitting: Option<usize>,
        /// Print the distinct splittings per codistance instead of partitions.
        #[arg(long)]
        splittings: bool,
    },
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let config = Config::from_env().map_err(CliError::Usage)?;
    let ctx = commands::Context {
        config,
        force: cli.force,
    };
    match cli.command {
        Command::Analyze { file, json } => commands::analyze(&ctx, &file, json),
        Command::Paths { n, distance, list } => commands::paths(&ctx, n, distance, list),
        Command::Bijection { n } => commands::bijection(&ctx, n),
        Command::Realize { q, n, json, deltas } => commands::realize(&ctx, q, n, &deltas, json),
        Command::Render {
            target,
            n,
            format,
            payload,
        } => commands::render(&ctx, target, format, n, &payload),
        Command::Verify {
            n_max,
            n_min,
            q,
            trials,
            seed,
            json,
        } => commands::verify(&ctx, n_min, n_max, q, trials, seed, json),
        Command::Partitions {
            n,
            size,
            splitting,
            splittings,
        } => commands::partitions(&ctx, n, size, splitting, splittings),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
