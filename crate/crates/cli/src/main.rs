//! `lch`: batch front end for the contact homology pipeline.
//!
//! Exit codes: 0 success, 1 validation failure, 2 input error, 3 budget.

mod input;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "lch", version, about = "Legendrian contact homology from plat fronts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Coefficient characteristic: 0 (integers) or a prime.
    #[arg(long = "char", global = true, value_parser = parse_char)]
    pub char: Option<u32>,
    /// Value of t in the field; reduced mod p. Default 1 over F_2, -1 otherwise.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t_value: Option<i64>,
    /// Spin structure: 0 bounding, 1 Lie.
    #[arg(long, global = true, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub spin: u8,
    /// Cross-check disks against the exhaustive search with this corner budget.
    #[arg(long, global = true)]
    pub max_corners: Option<usize>,
    /// Most assignments the augmentation search may try.
    #[arg(long, global = true)]
    pub aug_budget: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and resolve a plat; print classical invariants and gradings.
    Validate { input: String },
    /// Print the DGA of a plat in the canonical text format.
    Dga { input: String },
    /// Print every rigid disk, one per line.
    Disks { input: String },
    /// Check ∂² = 0, degree −1 and the action filtration.
    CheckD2 { input: String },
    /// List the graded augmentations over F_p.
    Augs { input: String },
    /// Augmentation count and linearized Poincaré polynomials over F_p.
    Linhom { input: String },
    /// Try to tell two knots apart with stable tame invariants.
    Compare { left: String, right: String },
    /// Front of the conormal lift of a plane curve: `theta z p sheet`.
    ConormalFront { input: String },
    /// Reeb chords of the conormal lift: `s1 s2 theta action`.
    ConormalChords {
        input: String,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Check that Ψ pulls the jet-space contact form back to q·dp.
    PsiCheck {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1e-5)]
        step: f64,
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
    },
    /// List the bundled corpus, or print one entry.
    Corpus {
        #[arg(long)]
        show: Option<String>,
    },
}

fn parse_char(s: &str) -> Result<u32, String> {
    let n: u32 = s.parse().map_err(|_| format!("`{s}` is not a characteristic"))?;
    if n == 0 || lch_core::ncalg::is_prime(n) {
        Ok(n)
    } else {
        Err(format!("{n} is neither 0 nor prime"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = match run::run(&cli) {
        Ok(r) => (r.text, r.code),
        Err(f) => {
            eprintln!("lch: {f}");
            return ExitCode::from(f.code());
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report) {
                eprintln!("lch: cli::write_report: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{report}"),
    }
    ExitCode::from(code)
}
