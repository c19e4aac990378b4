//! Exact arithmetic in the free graded algebra on chord generators over
//! ℤ[t, t⁻¹] or 𝔽_p[t, t⁻¹], graded derivations, and stable tame moves.

pub mod coeff;
pub mod dga;
pub mod element;
pub mod moves;
pub mod text;

pub use coeff::{is_prime, LaurentCoeff};
pub use dga::{Action, ChordGenerator, DSquaredReport, Dga, Homogeneity};
pub use element::{Element, Word};
pub use moves::{apply_tame_automorphism, stabilize};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("signature mismatch: characteristic {left} vs {right}")]
    SignatureMismatch { left: u32, right: u32 },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("generator {0} must have positive action")]
    NonPositiveAction(String),
    #[error("characteristic {0} is neither 0 nor prime")]
    BadCharacteristic(u32),
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("malformed DGA: {0}")]
    Malformed(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
