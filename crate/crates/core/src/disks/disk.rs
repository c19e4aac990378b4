use std::fmt::Write as _;

use crate::diagram::lagrangian::Dart;
use crate::diagram::{LagrangianDiagram, Quadrant, Rational};

/// An immersed disk with one positive corner and convex negative corners.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleDisk {
    /// Boundary darts, counterclockwise, starting just after the positive
    /// corner. Disks are ordered by this path first.
    pub boundary: Vec<Dart>,
    pub positive: usize,
    pub positive_quadrant: Quadrant,
    /// Negative corners in boundary order.
    pub negatives: Vec<(usize, Quadrant)>,
    pub t_exp: i32,
    /// Sign under the shipped table.
    pub sign: i64,
    pub area: Rational,
}

impl AdmissibleDisk {
    /// Builds a disk from its boundary walk and fills in the derived fields.
    pub(crate) fn from_walk(
        d: &LagrangianDiagram,
        positive: usize,
        positive_quadrant: Quadrant,
        negatives: Vec<(usize, Quadrant)>,
        boundary: Vec<Dart>,
    ) -> Self {
        let vs = d.vertices();
        let area = negatives
            .iter()
            .fold(vs[positive].action, |acc, &(v, _)| acc - vs[v].action);
        let mut k = AdmissibleDisk {
            boundary,
            positive,
            positive_quadrant,
            negatives,
            t_exp: 0,
            sign: 1,
            area,
        };
        k.t_exp = disk_t_exponent(&k, d);
        k.sign = super::disk_sign(&k, d);
        k
    }
}

/// Signed passes over the basepoint edge; passing along the knot's
/// orientation counts +1.
pub fn disk_t_exponent(k: &AdmissibleDisk, d: &LagrangianDiagram) -> i32 {
    let bp = d.basepoint_edge();
    k.boundary
        .iter()
        .map(|&dart| match (dart / 2 == bp, dart % 2) {
            (false, _) => 0,
            (true, 0) => 1,
            (true, _) => -1,
        })
        .sum()
}

/// One line of the disk-trace format.
pub fn format_disk(k: &AdmissibleDisk, d: &LagrangianDiagram) -> String {
    let vs = d.vertices();
    let mut out = format!("disk pos={} neg=[", vs[k.positive].name);
    for (i, &(v, q)) in k.negatives.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{}:{}", vs[v].name, q).unwrap();
    }
    write!(
        out,
        "] t={} sign={} area={}/{}",
        k.t_exp,
        if k.sign > 0 { "+1" } else { "-1" },
        k.area.numer(),
        k.area.denom()
    )
    .unwrap();
    out
}
