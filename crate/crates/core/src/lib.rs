//! Legendrian contact homology of knots in the one-jet space of the line,
//! computed from front diagrams.
//!
//! The pipeline is: plat word → coordinatized front → resolved Lagrangian
//! diagram → rigid disks → DGA → augmentations and linearized homology.
//! [`conormal`] handles unit conormal lifts of plane curves numerically.

pub mod conormal;
pub mod corpus;
pub mod diagram;
pub mod disks;
pub mod invariants;
pub mod ncalg;
