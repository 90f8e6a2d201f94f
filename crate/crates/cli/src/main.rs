use clap::{Parser, Subcommand};
use qpbw::commands;
use std::path::PathBuf;

/// Exact computer algebra for q-commutation algebras: PBW normal forms,
/// weight re-filtering, growth counts, and q-Koszul homology.
#[derive(Parser)]
#[command(name = "qpbw", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation: tail order under a weight order, plus the
    /// associativity check (all generator triples and 50 random triples).
    Check {
        /// Presentation file.
        file: PathBuf,
        /// Comma-separated positive weights, one per variable
        /// (default: all ones).
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<i64>>,
    },
    /// Evaluate an expression in the algebra and print its standard form.
    Normalize {
        /// Presentation file.
        file: PathBuf,
        /// Expression over the declared variables and coefficients.
        #[arg(long)]
        expr: String,
    },
    /// Search for a weight vector that makes every relation tail strictly
    /// lower order, and emit the re-graded presentation or an
    /// infeasibility certificate.
    Refilter {
        /// Presentation file.
        file: PathBuf,
    },
    /// Count monomials of bounded total degree in a tail-free algebra.
    Count {
        /// Presentation file (must have no relation tails).
        file: PathBuf,
        /// Largest total degree to count up to.
        #[arg(long = "max-degree")]
        max_degree: u32,
    },
    /// Estimate the growth dimension, or compute the exact dimension of a
    /// monomial quotient.
    Gkdim {
        /// Presentation file (must have no relation tails).
        file: PathBuf,
        /// Comma-separated monomial generators of an ideal, e.g.
        /// "x1,x2^2*x3".
        #[arg(long)]
        ideal: Option<String>,
        /// Growth horizon for the estimate.
        #[arg(long = "n-max", default_value_t = 64)]
        n_max: u32,
    },
    /// Build and verify the resolution for a variable subset, compute the
    /// grade from dual cohomology, and check the dimension balance.
    Koszul {
        /// Presentation file (must have no relation tails and no inverted
        /// variables).
        file: PathBuf,
        /// Comma-separated 1-based variable indices, e.g. "1,3".
        #[arg(long)]
        vars: String,
        /// Largest internal degree to scan (default: c + s + 2).
        #[arg(long = "degree-bound")]
        degree_bound: Option<i64>,
    },
    /// List the stock algebras, or print one as a presentation file.
    Catalog {
        /// Entry name; omit to list all entries.
        name: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check { file, weights } => commands::check(file, weights.clone()),
        Command::Normalize { file, expr } => commands::normalize(file, expr),
        Command::Refilter { file } => commands::refilter(file),
        Command::Count { file, max_degree } => commands::count(file, *max_degree),
        Command::Gkdim { file, ideal, n_max } => {
            commands::gkdim(file, ideal.as_deref(), *n_max)
        }
        Command::Koszul {
            file,
            vars,
            degree_bound,
        } => commands::koszul(file, vars, *degree_bound),
        Command::Catalog { name } => commands::catalog(name.as_deref()),
    };
    print!("{}", outcome.text);
    std::process::exit(outcome.exit);
}
