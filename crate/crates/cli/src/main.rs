use std::process::ExitCode;

use adk_cli::{CliError, CliResult, FieldArg};
use clap::{Parser, Subcommand};

/// Primes and factorization in the ring of dyadic Laurent polynomials.
#[derive(Parser)]
#[command(name = "adk", version)]
struct Cli {
    /// Coefficient field: Q, or F<q> for a prime power q (F3, F9, ...).
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    /// Refuse inputs whose degree after X -> X^4 exceeds this.
    #[arg(long, global = true, env = "ADK_MAX_DEGREE", default_value_t = 256)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical factorization over Q.
    Factor {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Primality in D, with a witness.
    IsPrime {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Monic degree-m primes of D over a finite field.
    Primes {
        #[arg(long)]
        degree: u32,
    },
    /// Number of monic irreducibles of degree m and how many are prime in D.
    Count {
        #[arg(long)]
        degree: u32,
    },
    /// Order of an irreducible polynomial over a finite field.
    Order {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// The d-th cyclotomic polynomial, optionally factored mod a finite field.
    Cyclotomic {
        d: u64,
        #[arg(long = "mod")]
        modulus: Option<String>,
    },
    /// Greatest common divisor in D over Q.
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Least common multiple in D over Q.
    Lcm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Splitting tree of each irreducible factor.
    Tree {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
}

fn run(cli: Cli) -> CliResult<String> {
    let field = FieldArg::parse(&cli.field)?;
    let limit = cli.max_degree;
    match cli.command {
        Command::Factor { expr, json } => adk_cli::factor(&expr, &field, json, limit),
        Command::IsPrime { expr } => adk_cli::is_prime(&expr, &field, limit),
        Command::Primes { degree } => adk_cli::primes(&field, degree),
        Command::Count { degree } => adk_cli::count(&field, degree),
        Command::Order { poly } => adk_cli::order(&poly, &field),
        Command::Cyclotomic { d, modulus } => {
            let m = modulus.as_deref().map(FieldArg::parse).transpose()?;
            adk_cli::cyclotomic(d, m.as_ref())
        }
        Command::Gcd { a, b } => adk_cli::gcd_or_lcm(&a, &b, &field, false, limit),
        Command::Lcm { a, b } => adk_cli::gcd_or_lcm(&a, &b, &field, true, limit),
        Command::Tree { expr, depth } => adk_cli::tree(&expr, &field, depth, limit),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Usage(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
