//! Fronts given as plat words, and their resolved Lagrangian diagrams.

pub mod front;
pub mod lagrangian;
pub mod plat;
pub mod random;

pub use front::{
    classical_invariants, elaborate_front, ClassicalInvariants, FrontDiagram, Heading, Node,
    Rational,
};
pub use lagrangian::{gradings, resolve, End, LagrangianDiagram, Origin, Quadrant};
pub use plat::{parse_plat, Event, EventKind, PlatWord};
pub use random::random_plat;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("plat is not a knot: traversal covers {covered} of {total} strand positions")]
    Disconnected { covered: usize, total: usize },
    #[error("plat too large: {0} events")]
    TooLarge(usize),
    #[error("resolved diagram is not planar (Euler characteristic {euler})")]
    NonPlanar { euler: i64 },
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
}

/// `resolve ∘ elaborate_front`.
pub fn resolve_plat(plat: &PlatWord) -> Result<LagrangianDiagram, DiagramError> {
    resolve(&elaborate_front(plat)?)
}
