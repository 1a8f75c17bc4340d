//! `umbral`: tables, single values and verification sweeps for the umbral
//! Bernoulli numbers B_{r,s}.
//!
//! Exit status: 0 when everything checks out, 1 when a mathematical
//! falsification was found (the witness is printed), 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use umbral_bernoulli::arith::denominator;
use umbral_bernoulli::denom::{denom_exact, denom_formula, psi};
use umbral_bernoulli::umbral::{bs_direct, bs_polynomial, bs_table_recursive};
use umbral_bernoulli::{BernoulliCache, Error};
use umbral_cli::render::{render_denom, render_int_table, render_poly, render_psi, render_table, render_value};
use umbral_cli::{verify, OutputFormat, Property};

#[derive(Parser)]
#[command(name = "umbral", version, about = "Exact umbral Bernoulli numbers B_{r,s} and their denominators")]
struct Cli {
    /// Output encoding
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    /// Worker threads for verification sweeps
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print B_{r,s}, or with --poly the coefficients of B_{r,s}(x) lowest power first
    Value {
        r: usize,
        s: usize,
        #[arg(long)]
        poly: bool,
    },
    /// Print the grid of B_{r,s} for 0 <= r <= MAX_R, 0 <= s <= MAX_S
    Table {
        max_r: usize,
        max_s: usize,
        /// Print the denominators D_{r,s} instead of the values
        #[arg(long)]
        denoms: bool,
    },
    /// Print Psi_{r,s}(p)
    Psi {
        r: u64,
        s: u64,
        p: u64,
        /// Also print the contributing indices
        #[arg(long)]
        show_indices: bool,
    },
    /// Print D_{r,s}, cross-checked against the closed-form product
    Denom {
        r: u64,
        s: u64,
        /// Also print the prime factorization
        #[arg(long)]
        factors: bool,
    },
    /// Run a verification sweep
    Verify {
        #[arg(value_enum)]
        property: Property,
        #[arg(long)]
        max_r: usize,
        #[arg(long)]
        max_s: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::NotPrime(_) | Error::Domain(_) => ExitCode::from(2),
                Error::CapacityExceeded { .. } | Error::InvariantViolation(_) => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    match cli.command {
        Command::Value { r, s, poly } => {
            let cache = BernoulliCache::new(r + s + 2);
            if poly {
                println!("{}", render_poly(&bs_polynomial(&cache, r, s)?, format));
            } else {
                println!("{}", render_value(&bs_direct(&cache, r, s)?, format));
            }
        }
        Command::Table { max_r, max_s, denoms } => {
            let cache = BernoulliCache::new(max_r + max_s + 2);
            let table = bs_table_recursive(&cache, max_r, max_s)?;
            if denoms {
                let grid: Vec<Vec<_>> = table.rows().map(|row| row.iter().map(denominator).collect()).collect();
                print!("{}", render_int_table(&grid, format));
            } else {
                print!("{}", render_table(table.rows(), format));
            }
        }
        Command::Psi { r, s, p, show_indices } => {
            println!("{}", render_psi(&psi(r, s, p)?, show_indices, format));
        }
        Command::Denom { r, s, factors } => {
            let cache = BernoulliCache::new((r + s) as usize + 2);
            let exact = denom_exact(&cache, r as usize, s as usize)?;
            let formula = denom_formula(r, s);
            println!("{}", render_denom(r, s, &formula, factors, format));
            if exact != formula.value {
                eprintln!("falsified: denom(B_{{{r},{s}}}) = {exact} but the product formula gives {}", formula.value);
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify { property, max_r, max_s } => {
            let report = verify::run(property, max_r, max_s, cli.jobs as usize);
            print!("{}", report.render(format));
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
