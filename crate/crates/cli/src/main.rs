use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use demazure_mult::commands::{self, Method, OuterMultArgs, Output, VerifyArgs, VerifyKind};
use demazure_mult::format::Format;
use demazure_mult::weight_spec::parse_weight;
use demazure_mult::CliError;
use demazure_mult_core::Node;

/// Outer multiplicities of affine sl2 tensor products and the checks behind them.
///
/// Weights are written like `2*Lambda0 - omega1 + 3*delta`; `Lambda1` is
/// `Lambda0 + omega1`. Exit status: 0 success, 1 failed check or computation
/// error, 2 usage error. DEMAZURE_MULT_THREADS sets the worker count.
#[derive(Parser)]
#[command(name = "demazure-mult", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicities of V(Phi) in V(Lambda_i) (x) V(Lambda) for level-one Lambda.
    OuterMult {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        i: u8,
        /// Level-one dominant weight.
        #[arg(long, allow_hyphen_values = true)]
        with: String,
        #[arg(long, default_value_t = 10)]
        s_max: u32,
        #[arg(long, value_enum, default_value_t = Method::ClosedForm)]
        method: Method,
        /// Fixed lambda bound for --method limit.
        #[arg(long)]
        lambda_max: Option<u64>,
        /// Include zero rows.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Run a family of exact checks; exits 1 if any case fails.
    Verify {
        #[arg(value_enum)]
        which: VerifyKind,
        #[arg(long, default_value_t = 10)]
        s_max: u32,
        /// Oracle truncation depth, raised to --s-max when smaller.
        #[arg(long, default_value_t = 8)]
        depth: u32,
        /// Series order for bformula.
        #[arg(long, default_value_t = 50)]
        order: u32,
        #[arg(long, default_value_t = 3)]
        level_max: i64,
        #[arg(long, default_value_t = 50)]
        k_max: i64,
    },
    /// Weight multiplicities of V(Lambda) for a dominant weight.
    Character {
        #[arg(allow_hyphen_values = true)]
        spec: String,
        #[arg(long, default_value_t = 8)]
        depth: u32,
    },
    /// Graded multiplicities [W(mu) : D(2, lambda)](q).
    FlagMult {
        #[arg(allow_negative_numbers = true)]
        mu: i64,
    },
    /// Labels (lambda, r) of the Weyl orbit of a dominant weight.
    Gamma {
        #[arg(allow_hyphen_values = true)]
        spec: String,
        #[arg(long, default_value_t = 20)]
        lambda_max: u64,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("DEMAZURE_MULT_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "DEMAZURE_MULT_THREADS must be a positive integer, got {value:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn dispatch(command: Command) -> Result<Output, CliError> {
    match command {
        Command::OuterMult {
            i,
            with,
            s_max,
            method,
            lambda_max,
            verbose,
        } => commands::outer_mult(&OuterMultArgs {
            i: Node::from_index(i).expect("range-checked by clap"),
            with: parse_weight(&with)?,
            s_max,
            method,
            lambda_max,
            verbose,
        }),
        Command::Verify {
            which,
            s_max,
            depth,
            order,
            level_max,
            k_max,
        } => commands::verify(&VerifyArgs {
            kind: which,
            s_max,
            depth,
            order,
            level_max,
            k_max,
        }),
        Command::Character { spec, depth } => commands::character(&parse_weight(&spec)?, depth),
        Command::FlagMult { mu } => commands::flag_mult(mu),
        Command::Gamma { spec, lambda_max } => commands::gamma(&parse_weight(&spec)?, lambda_max),
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    configure_threads()?;
    let output = dispatch(cli.command)?;
    let rendered = output.table.render(cli.format)?;
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(output.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
