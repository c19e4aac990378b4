//! Rigid disks on a resolved diagram, and the differential they define.
//!
//! Two enumerators: [`sweep_enumerate`], a right-to-left automaton over the
//! plat, and [`brute_force_enumerate`], a boundary-walk search used as an
//! independent oracle. Both return the same disks in the same order.

mod brute;
mod disk;
mod signs;
mod sweep;

pub use brute::brute_force_enumerate;
pub use disk::{disk_t_exponent, format_disk, AdmissibleDisk};
pub use signs::{disk_sign, disk_sign_with, SignTable, SIGN_TABLE};
pub use sweep::sweep_enumerate;

use thiserror::Error;

use crate::diagram::LagrangianDiagram;
use crate::ncalg::{AlgebraError, ChordGenerator, Dga, Element, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiskError {
    #[error("corner budget {max_corners} exceeded while enumerating disks at {generator}")]
    Budget {
        generator: String,
        max_corners: usize,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Spin structure on the knot: `Bounding` is the default; `Lie` negates
/// every term with odd `t` exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Spin {
    #[default]
    Bounding,
    Lie,
}

impl Spin {
    pub fn from_flag(flag: u8) -> Option<Spin> {
        match flag {
            0 => Some(Spin::Bounding),
            1 => Some(Spin::Lie),
            _ => None,
        }
    }
}

/// The generators of the diagram's algebra, in vertex order.
pub fn chord_generators(d: &LagrangianDiagram) -> Vec<ChordGenerator> {
    d.vertices()
        .iter()
        .map(|v| ChordGenerator::new(v.name.clone(), v.grading, v.action))
        .collect()
}

/// Assembles `∂` from per-generator disk lists, with an explicit sign table.
pub fn assemble(
    d: &LagrangianDiagram,
    disks: &[Vec<AdmissibleDisk>],
    char: u32,
    spin: Spin,
    table: &SignTable,
) -> Result<Dga, DiskError> {
    let mut diff = Vec::with_capacity(disks.len());
    for list in disks {
        let mut x = Element::zero(0);
        for k in list {
            let mut sign = disk_sign_with(k, d, table);
            if spin == Spin::Lie && k.t_exp % 2 != 0 {
                sign = -sign;
            }
            let w = Word(k.negatives.iter().map(|&(v, _)| v as u32).collect());
            x.add_monomial(w, sign, k.t_exp);
        }
        diff.push(x);
    }
    let dga = Dga::new(chord_generators(d), d.rot(), 0, diff)?;
    Ok(if char == 0 { dga } else { dga.reduce_mod(char)? })
}

/// All disks, one list per generator, from the sweep.
pub fn enumerate_all(d: &LagrangianDiagram) -> Vec<Vec<AdmissibleDisk>> {
    (0..d.vertices().len()).map(|a| sweep_enumerate(d, a)).collect()
}

/// `∂a = Σ sign · t^{tExp} · (negative word)` over the disks at `a`.
pub fn differential(d: &LagrangianDiagram, char: u32, spin: Spin) -> Result<Dga, DiskError> {
    assemble(d, &enumerate_all(d), char, spin, &SIGN_TABLE)
}
