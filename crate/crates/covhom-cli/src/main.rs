//! covhom: exact first homology of finite cyclic covers of line-arrangement
//! boundary manifolds.
//!
//! Exit codes: 0 on success, 1 for input problems (bad descriptions,
//! violated validity constraints, size guards), 2 when an internal
//! mathematical cross-check fails.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use covhom_cli::{jobspec, report, run};

#[derive(Parser)]
#[command(
    name = "covhom",
    version,
    about = "Exact first homology of finite cyclic covers of line-arrangement boundary manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Arrangement description (JSON: multiplicities, eps, point_weights,
    /// optional lines and modulus)
    input: PathBuf,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Bypass the size guards (N <= 64 and n*N <= 4096)
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact H1 of the N-sheeted covers: integral Smith forms, field Betti
    /// numbers, the rank bound, and the hypothesis certificate
    Analyze {
        #[command(flatten)]
        io: IoArgs,
        /// Sheet counts, comma separated (default: the character modulus,
        /// or 1..8 for integral characters)
        #[arg(long = "n", value_delimiter = ',')]
        sheets: Vec<u64>,
        /// Field characteristics for Betti numbers, 0 = rationals
        #[arg(long, value_delimiter = ',', default_values_t = [0u64, 2, 3, 5])]
        primes: Vec<u64>,
        /// Reinterpret the character as integral, dropping any modulus
        #[arg(long)]
        integral: bool,
        /// Cross-check each connected cover against the independent
        /// Reidemeister-Schreier route; disagreement exits 2
        #[arg(long)]
        oracle: bool,
    },
    /// The Betti-number bound (n-1) + sum (m_i - 2)(gcd(eps_i, N) - 1)
    Bound {
        #[command(flatten)]
        io: IoArgs,
        /// Sheet counts, comma separated
        #[arg(long = "n", value_delimiter = ',')]
        sheets: Vec<u64>,
        /// Reinterpret the character as integral, dropping any modulus
        #[arg(long)]
        integral: bool,
    },
    /// Check the torsion-freeness hypotheses without computing homology
    Certify {
        #[command(flatten)]
        io: IoArgs,
        /// Sheet counts, comma separated
        #[arg(long = "n", value_delimiter = ',')]
        sheets: Vec<u64>,
        /// Reinterpret the character as integral, dropping any modulus
        #[arg(long)]
        integral: bool,
    },
    /// Alexander polynomial of the infinite cyclic cover and its division
    /// of the canonical divisor, over one or more coefficient fields
    Divisor {
        #[command(flatten)]
        io: IoArgs,
        /// Field characteristics to test over, 0 = rationals
        #[arg(long = "char", value_delimiter = ',', default_values_t = [0u64, 2, 3])]
        chars: Vec<u64>,
        /// Reinterpret the character as integral, dropping any modulus
        #[arg(long)]
        integral: bool,
    },
    /// Sweep the rank identity rank(C_n^k - I) = n - gcd(k, n) over fields
    Lemma {
        /// Largest matrix size to sweep
        #[arg(long, default_value_t = 24)]
        max_n: u64,
        /// Field characteristics, 0 = rationals
        #[arg(long, value_delimiter = ',', default_values_t = [0u64, 2, 3, 5, 7])]
        chars: Vec<u64>,
        /// Emit machine-readable JSON instead of text
        #[arg(long)]
        json: bool,
        /// Lift the cap on --max-n
        #[arg(long)]
        force: bool,
    },
    /// Analyze the Milnor cover: all-ones weights mod n, n sheets
    /// (character fields in the input are ignored)
    Milnor {
        #[command(flatten)]
        io: IoArgs,
        /// Sheet counts (default: n; must divide n)
        #[arg(long = "n", value_delimiter = ',')]
        sheets: Vec<u64>,
        /// Field characteristics for Betti numbers, 0 = rationals
        #[arg(long, value_delimiter = ',', default_values_t = [0u64, 2, 3, 5])]
        primes: Vec<u64>,
        /// Cross-check against the Reidemeister-Schreier route
        #[arg(long)]
        oracle: bool,
    },
    /// H1 of the covers by the Reidemeister-Schreier route alone
    Oracle {
        #[command(flatten)]
        io: IoArgs,
        /// Sheet counts, comma separated
        #[arg(long = "n", value_delimiter = ',')]
        sheets: Vec<u64>,
        /// Field characteristics for Betti numbers, 0 = rationals
        #[arg(long, value_delimiter = ',', default_values_t = [0u64, 2, 3, 5])]
        primes: Vec<u64>,
        /// Reinterpret the character as integral, dropping any modulus
        #[arg(long)]
        integral: bool,
    },
}

fn dispatch(cli: Cli) -> Result<(run::Output, bool), run::AppError> {
    match cli.command {
        Command::Analyze { io, sheets, primes, integral, oracle } => {
            let spec = jobspec::load(&io.input)?;
            let out = run::analyze(&spec, &sheets, &primes, integral, oracle, io.force, false)?;
            Ok((out, io.json))
        }
        Command::Bound { io, sheets, integral } => {
            let spec = jobspec::load(&io.input)?;
            Ok((run::bound(&spec, &sheets, integral, io.force)?, io.json))
        }
        Command::Certify { io, sheets, integral } => {
            let spec = jobspec::load(&io.input)?;
            Ok((run::certify_covers(&spec, &sheets, integral, io.force)?, io.json))
        }
        Command::Divisor { io, chars, integral } => {
            let spec = jobspec::load(&io.input)?;
            Ok((run::divisor(&spec, &chars, integral)?, io.json))
        }
        Command::Lemma { max_n, chars, json, force } => {
            Ok((run::lemma(max_n, &chars, force)?, json))
        }
        Command::Milnor { io, sheets, primes, oracle } => {
            let spec = jobspec::load(&io.input)?;
            let out = run::analyze(&spec, &sheets, &primes, false, oracle, io.force, true)?;
            Ok((out, io.json))
        }
        Command::Oracle { io, sheets, primes, integral } => {
            let spec = jobspec::load(&io.input)?;
            Ok((run::oracle(&spec, &sheets, &primes, integral, io.force)?, io.json))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout and exit 0; genuine usage
            // errors are input errors, exit 1 rather than clap's default 2.
            let _ = e.print();
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok((out, json)) => {
            let text = if json { report::render_json(&out.report) } else { report::render_text(&out.report) };
            // Tolerate a closed pipe (e.g. piping into head).
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{text}");
            if out.code != 0 {
                std::process::exit(out.code);
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
