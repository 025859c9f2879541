mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "fpnf", version, about = "Certified normal forms for finitely presented algebras and lattices")]
pub struct Cli {
    /// Override the monomial order declared in the presentation.
    #[arg(long, global = true, value_enum)]
    order: Option<OrderArg>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grlex,
    Degrevlex,
}

#[derive(Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis of the relations.
    Gb {
        presentation: String,
        /// Also print each basis element as a combination of the relations.
        #[arg(long)]
        transition: bool,
    },
    /// Normal form of a term.
    Nf { presentation: String, term: String },
    /// Decide equality of two terms (exit 1 when unequal).
    Eq { presentation: String, lhs: String, rhs: String },
    /// Emit a certificate for `lhs = rhs`, or for `lhs = nf(lhs)` when `rhs` is omitted.
    Cert { presentation: String, lhs: String, rhs: Option<String> },
    /// Check a certificate (exit 1 when it does not verify).
    Check {
        certificate: String,
        /// Also expand the certificate into a derivation, check and print it.
        #[arg(long)]
        derivation: bool,
    },
    /// Check that a morphism respects the relations (exit 1 when it does not).
    Hom {
        morphism: String,
        /// Push a source term through the morphism.
        #[arg(long)]
        apply: Option<String>,
    },
    /// Normal form of a lattice term.
    LatNf { presentation: String, term: String },
    /// Decide equality of two lattice terms (exit 1 when unequal).
    LatEq { presentation: String, lhs: String, rhs: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = commands::run(&cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(commands::Outcome::Positive) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.0.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
