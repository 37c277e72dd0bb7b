use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quatcusp_cli::{
    cmd_classnumber, cmd_cusps, cmd_hilbert, cmd_maximalize, cmd_oracle, cmd_ramify, cmd_report, render,
    CliError, Format,
};

#[derive(Parser)]
#[command(name = "quatcusp", version)]
#[command(about = "Quaternion algebras over Q, congruence indices, cusp counts and cohomology at infinity")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for the definite algebra ramified at {inf, p} at level `level^e`
    Report {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        level: u64,
        #[arg(long)]
        e: u32,
        /// Cross-check Hilbert symbols (and |SL4(F_q)| for level 2 or 3) by brute force
        #[arg(long)]
        oracle: bool,
    },
    /// Cusp count of Gamma(level^e) for any division algebra Q(a, b)
    Cusps {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Class number (defaults to the Eichler value for prime discriminant)
        #[arg(long)]
        h: Option<u64>,
        #[arg(long)]
        level: u64,
        #[arg(long)]
        e: u32,
        /// |units mod level| of the quaternion order; indefinite algebras only
        #[arg(long)]
        mu: Option<u64>,
    },
    /// Hilbert symbols (a, b)_v at one place or at every relevant place
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// `inf` or a prime
        #[arg(long)]
        place: Option<String>,
        #[arg(long)]
        oracle: bool,
    },
    /// Ramification set, definiteness and discriminant of Q(a, b)
    Ramify {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Class number of the definite algebra of prime discriminant p
    Classnumber {
        #[arg(long)]
        p: u64,
    },
    /// Maximal order containing Z<1, i, j, ij> in Q(a, b)
    Maximalize {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Brute-force oracles: `sl4` enumerates SL4(F_q); `hilbert` sweeps small a, b at q
    Oracle {
        kind: String,
        #[arg(long)]
        q: u64,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let doc = match cli.command {
        Command::Report { p, level, e, oracle } => cmd_report(p, level, e, oracle)?,
        Command::Cusps { a, b, h, level, e, mu } => cmd_cusps(a, b, h, level, e, mu)?,
        Command::Hilbert { a, b, place, oracle } => cmd_hilbert(a, b, place.as_deref(), oracle)?,
        Command::Ramify { a, b } => cmd_ramify(a, b)?,
        Command::Classnumber { p } => cmd_classnumber(p)?,
        Command::Maximalize { a, b } => cmd_maximalize(a, b)?,
        Command::Oracle { kind, q } => cmd_oracle(&kind, q)?,
    };
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
        OutputFormat::Csv => Format::Csv,
    };
    Ok(render(&doc, format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
