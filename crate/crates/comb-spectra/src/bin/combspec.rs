use clap::{Parser, Subcommand, ValueEnum};

use comb_spectra::cli::{self, OutputFormat, VerifyChecks, VerifyOptions};
use comb_spectra::error::Error;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> OutputFormat {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Checks {
    All,
    Finite,
    Bounds,
    Triple,
}

impl From<Checks> for VerifyChecks {
    fn from(c: Checks) -> VerifyChecks {
        match c {
            Checks::All => VerifyChecks::All,
            Checks::Finite => VerifyChecks::Finite,
            Checks::Bounds => VerifyChecks::Bounds,
            Checks::Triple => VerifyChecks::Triple,
        }
    }
}

/// Spectra of comb graphs, with and without an infinite tail.
#[derive(Parser)]
#[command(name = "combspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full spectrum of the finite comb graph with backbone order n and
    /// finger order k.
    Finite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Discrete spectrum of the comb graph with an infinite tail.
    Tail {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Grid of positive discrete-spectrum counts (k rows, n columns).
    Table {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Cross-verify formulas against the brute-force eigensolver oracle.
    Verify {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        /// Tail truncation length for the oracle comparison.
        #[arg(long, default_value_t = 300)]
        l: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Checks::All)]
        checks: Checks,
        /// Test hook: flip adjacency entry "i,j" (0-based) before the oracle
        /// comparison; a correct sweep must then report a mismatch.
        #[arg(long, hide = true)]
        inject_flip: Option<String>,
    },
    /// Classify arccos(p/q) as a rational or irrational multiple of pi.
    Arccos {
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_flip(s: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected \"i,j\" for --inject-flip, got {s:?}"
        )));
    }
    let i = parts[0]
        .trim()
        .parse()
        .map_err(|e| Error::InvalidArgument(format!("bad flip index: {e}")))?;
    let j = parts[1]
        .trim()
        .parse()
        .map_err(|e| Error::InvalidArgument(format!("bad flip index: {e}")))?;
    Ok((i, j))
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Finite { n, k, tol, format } => {
            print!("{}", cli::cmd_finite(n, k, tol, format.into())?);
            Ok(0)
        }
        Command::Tail { n, k, tol, format } => {
            print!("{}", cli::cmd_tail(n, k, tol, format.into())?);
            Ok(0)
        }
        Command::Table {
            n_max,
            k_max,
            format,
        } => {
            print!("{}", cli::cmd_table(n_max, k_max, format.into())?);
            Ok(0)
        }
        Command::Verify {
            n_max,
            k_max,
            l,
            tol,
            checks,
            inject_flip,
        } => {
            let opts = VerifyOptions {
                n_max,
                k_max,
                tail_len: l,
                tol,
                checks: checks.into(),
                inject_flip: inject_flip.as_deref().map(parse_flip).transpose()?,
            };
            let (report, ok) = cli::cmd_verify(&opts)?;
            print!("{report}");
            Ok(if ok { 0 } else { 3 })
        }
        Command::Arccos { p, q, format } => {
            print!("{}", cli::cmd_arccos(p, q, format.into())?);
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
