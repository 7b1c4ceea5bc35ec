use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fpnorm_cli::bench::{parse_primes, to_csv};
use fpnorm_cli::{parse_input, run_bench, run_normalize, ExitStatus, Family, Flags};

/// Integral closure of affine rings over F_p.
#[derive(Parser)]
#[command(name = "fpnorm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone)]
struct Primes(Vec<u64>);

fn primes(list: &str) -> Result<Primes, String> {
    parse_primes(list).map(Primes)
}

#[derive(Subcommand)]
enum Command {
    /// Compute the integral closure of the ring described in FILE.
    Normalize {
        file: PathBuf,
        /// Use this conductor element instead of a Jacobian minor.
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        conductor: Option<String>,
        #[arg(long)]
        json: bool,
        /// Also print the reduced basis of every U_e.
        #[arg(long)]
        trace: bool,
        /// Check the result independently; exit 8 if a check fails.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_name = "N")]
        max_iter: Option<usize>,
        /// Abort any single basis computation after N critical pairs.
        #[arg(long, value_name = "N")]
        pair_limit: Option<usize>,
    },
    /// Time one family over a list of primes and emit CSV.
    Bench {
        /// segre, quartic or quadratic-p
        #[arg(long)]
        family: Family,
        /// Comma-separated, e.g. 2,3,5,7
        #[arg(long, value_parser = primes)]
        primes: Primes,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Runs per prime; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

fn finish(status: ExitStatus) -> ExitCode {
    ExitCode::from(status.code() as u8)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Normalize {
            file,
            conductor,
            json,
            trace,
            verify,
            max_iter,
            pair_limit,
        } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {}: {e}", file.display());
                    return finish(ExitStatus::Io);
                }
            };
            let pf = match parse_input(&text) {
                Ok(pf) => pf,
                Err(e) => {
                    eprintln!("error: {}: {e}", file.display());
                    return finish(ExitStatus::Parse);
                }
            };
            let flags = Flags {
                conductor,
                json,
                trace,
                verify,
                max_iter,
                pair_limit,
            };
            let out = run_normalize(&pf, &flags);
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            finish(out.status)
        }
        Command::Bench {
            family,
            primes,
            csv,
            repeat,
        } => {
            let table = to_csv(&run_bench(family, &primes.0, repeat));
            match csv {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, table) {
                        eprintln!("error: {}: {e}", path.display());
                        return finish(ExitStatus::Io);
                    }
                }
                None => print!("{table}"),
            }
            finish(ExitStatus::Success)
        }
    }
}
