use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use motzeta::cli::{self, BlowupFlags, Command, ZetaFlags};
use motzeta::zeta::Level;

/// Exact zeta functions and stringy invariants from log-resolution data.
#[derive(Parser)]
#[command(name = "motzeta", version, about)]
struct Args {
    #[command(subcommand)]
    command: Cli,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Motivic,
    Hodge,
    Top,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Motivic => Level::Motivic,
            LevelArg::Hodge => Level::Hodge,
            LevelArg::Top => Level::Topological,
        }
    }
}

#[derive(Subcommand)]
enum Cli {
    /// Compute the zeta function and invariants of a resolution document.
    Zeta {
        file: PathBuf,
        /// Subvariety to compute over (default X).
        #[arg(long = "W")]
        w: Option<String>,
        /// Level to print in detail.
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        /// Render LaTeX instead of plain text.
        #[arg(long)]
        latex: bool,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
    /// Solve a weighted dual graph and compute its zeta over the origin.
    Surface {
        file: PathBuf,
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        #[arg(long)]
        latex: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check blow-up invariance of the zeta on random modifications.
    #[command(name = "blowup-test")]
    BlowupTest {
        file: PathBuf,
        /// Number of random sequences.
        #[arg(long, default_value_t = 100)]
        count: u32,
        /// Maximum blow-ups per sequence.
        #[arg(long = "max-depth", default_value_t = 5)]
        max_depth: u32,
        /// PRNG seed (fixed seed gives a byte-identical report).
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Compare brute-force p-adic counting with the resolution formula.
    #[command(name = "padic-test")]
    PadicTest { file: PathBuf },
}

fn read_input(path: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(cli::EXIT_PARSE as u8)
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match &args.command {
        Cli::Zeta {
            file,
            w,
            level,
            latex,
            json,
        } => {
            let input = match read_input(file) {
                Ok(i) => i,
                Err(c) => return c,
            };
            Command::Zeta {
                input,
                flags: ZetaFlags {
                    w: w.clone(),
                    level: level.map(Into::into),
                    latex: *latex,
                    json: *json,
                },
            }
        }
        Cli::Surface {
            file,
            level,
            latex,
            json,
        } => {
            let input = match read_input(file) {
                Ok(i) => i,
                Err(c) => return c,
            };
            Command::Surface {
                input,
                flags: ZetaFlags {
                    w: None,
                    level: level.map(Into::into),
                    latex: *latex,
                    json: *json,
                },
            }
        }
        Cli::BlowupTest {
            file,
            count,
            max_depth,
            seed,
        } => {
            let input = match read_input(file) {
                Ok(i) => i,
                Err(c) => return c,
            };
            Command::BlowupTest {
                input,
                flags: BlowupFlags {
                    count: *count,
                    max_depth: *max_depth,
                    seed: *seed,
                },
            }
        }
        Cli::PadicTest { file } => {
            let input = match read_input(file) {
                Ok(i) => i,
                Err(c) => return c,
            };
            Command::PadicTest { input }
        }
    };
    let (output, code) = cli::execute(&command);
    print!("{output}");
    ExitCode::from(code as u8)
}
