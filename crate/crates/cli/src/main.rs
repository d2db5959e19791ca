use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

mod commands;
mod input;
mod render;

use commands::{DEFAULT_ATTEMPTS, DEFAULT_DEPTH, DEFAULT_EPS};

/// Decide, certify and bound realizability of real spectra by nonnegative
/// matrices. Inputs are a file path, `-` for standard input, or inline JSON.
#[derive(Parser)]
#[command(name = "nniep", version)]
struct Cli {
    /// Print the canonical JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Attach the rationale for each reported line.
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Run the necessary conditions and classify for NIEP, D-RNIEP and SNIEP.
    Check {
        /// Spectrum JSON, e.g. {"values": ["3", "3", "-2", "-2", "-2"]}.
        spectrum: String,
        /// Power-sum and JLL depth.
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
    },
    /// Emit a family or catalog matrix with its verification report.
    Construct {
        name: String,
        /// Family parameter (rational); not accepted for catalog entries.
        #[arg(long, allow_negative_numbers = true)]
        t: Option<String>,
    },
    /// Verify a matrix against a spectrum, with Jordan data at each eigenvalue.
    Verify { matrix: String, spectrum: String },
    /// Isolate the nonnegativity threshold of a family.
    Threshold {
        family: String,
        #[arg(long, default_value = DEFAULT_EPS)]
        eps: String,
    },
    /// Fit the four-parameter structured matrix at t.
    FitMeehan {
        #[arg(long, allow_negative_numbers = true)]
        t: String,
        #[arg(long, default_value_t = DEFAULT_ATTEMPTS)]
        attempts: usize,
    },
    /// Isolate every real root of a polynomial (coefficients low to high).
    Roots {
        poly: String,
        #[arg(long, default_value = DEFAULT_EPS)]
        eps: String,
    },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Self::Check { .. } => "check",
            Self::Construct { .. } => "construct",
            Self::Verify { .. } => "verify",
            Self::Threshold { .. } => "threshold",
            Self::FitMeehan { .. } => "fit-meehan",
            Self::Roots { .. } => "roots",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let explain = cli.explain;
    let outcome = match &cli.verb {
        Verb::Check { spectrum, depth } => commands::check(spectrum, *depth, explain),
        Verb::Construct { name, t } => commands::construct(name, t.as_deref(), explain),
        Verb::Verify { matrix, spectrum } => commands::verify(matrix, spectrum, explain),
        Verb::Threshold { family, eps } => commands::threshold(family, eps, explain),
        Verb::FitMeehan { t, attempts } => commands::fit_meehan(t, *attempts, explain),
        Verb::Roots { poly, eps } => commands::roots(poly, eps, explain),
    };
    match outcome {
        Ok(report) => {
            let value = report.to_json();
            if cli.json {
                println!("{}", nniep::json::to_canonical_string(&value));
            } else {
                print!("{}", render::text(&value));
            }
            ExitCode::from(report.exit_code)
        }
        Err(commands::Invalid(msg)) => {
            if cli.json {
                let value = json!({"error": msg, "exit_code": 2, "verb": cli.verb.name()});
                println!("{}", nniep::json::to_canonical_string(&value));
            }
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
