//! Coordinatized fronts: strands, crossings, cusps, orientation and Maslov
//! potentials.
//!
//! Event `i` (1-based) sits at `x = i`. Slab `s` is the open interval
//! `(s, s + 1)`; in it the strand at level `k` has height `z = k`. Slab 0 and
//! slab `n` are empty.

use num_rational::Ratio;

use super::plat::{EventKind, PlatWord};
use super::DiagramError;

pub type Rational = Ratio<i64>;

/// Horizontal direction of travel along the oriented knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Heading {
    Left,
    Right,
}

impl Heading {
    pub fn flip(self) -> Self {
        match self {
            Heading::Left => Heading::Right,
            Heading::Right => Heading::Left,
        }
    }
}

/// A strand position: level `level` (1-based) inside slab `slab`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub slab: usize,
    pub level: usize,
}

/// A smooth branch of the front between two cusps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub x_start: Rational,
    pub x_end: Rational,
    /// Positions covered, in traversal order.
    pub nodes: Vec<Node>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontCrossing {
    pub event: usize,
    pub level: usize,
    /// Strand of lesser slope (descending from `level + 1` to `level`).
    pub over: usize,
    /// Strand of greater slope.
    pub under: usize,
    pub over_slope: Rational,
    pub under_slope: Rational,
    /// Writhe contribution.
    pub sign: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuspKind {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cusp {
    pub event: usize,
    pub kind: CuspKind,
    pub level: usize,
    pub lower: usize,
    pub upper: usize,
    /// True when the orientation runs from the lower branch to the upper.
    pub upward: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub rot: i64,
}

#[derive(Clone, Debug)]
pub struct FrontDiagram {
    plat: PlatWord,
    counts: Vec<usize>,
    strand_at: Vec<Vec<usize>>,
    heading_at: Vec<Vec<Heading>>,
    strands: Vec<Strand>,
    crossings: Vec<FrontCrossing>,
    cusps: Vec<Cusp>,
    maslov: Vec<i64>,
    rot: i64,
    traversal: Vec<(Node, Heading)>,
}

enum Link {
    Pass(Node),
    Turn(Node),
}

fn left_link(plat: &PlatWord, n: Node) -> Link {
    let e = plat.events()[n.slab - 1];
    let (s, j, k) = (n.slab, n.level, e.level);
    let to = |level| Link::Pass(Node { slab: s - 1, level });
    match e.kind {
        EventKind::Crossing if j == k => to(k + 1),
        EventKind::Crossing if j == k + 1 => to(k),
        EventKind::Crossing => to(j),
        EventKind::LeftCusp if j == k => Link::Turn(Node { slab: s, level: k + 1 }),
        EventKind::LeftCusp if j == k + 1 => Link::Turn(Node { slab: s, level: k }),
        EventKind::LeftCusp if j < k => to(j),
        EventKind::LeftCusp => to(j - 2),
        EventKind::RightCusp if j < k => to(j),
        EventKind::RightCusp => to(j + 2),
    }
}

fn right_link(plat: &PlatWord, n: Node) -> Link {
    let e = plat.events()[n.slab];
    let (s, j, k) = (n.slab, n.level, e.level);
    let to = |level| Link::Pass(Node { slab: s + 1, level });
    match e.kind {
        EventKind::Crossing if j == k => to(k + 1),
        EventKind::Crossing if j == k + 1 => to(k),
        EventKind::Crossing => to(j),
        EventKind::RightCusp if j == k => Link::Turn(Node { slab: s, level: k + 1 }),
        EventKind::RightCusp if j == k + 1 => Link::Turn(Node { slab: s, level: k }),
        EventKind::RightCusp if j < k => to(j),
        EventKind::RightCusp => to(j - 2),
        EventKind::LeftCusp if j < k => to(j),
        EventKind::LeftCusp => to(j + 2),
    }
}

/// Builds the front of a plat word.
///
/// The orientation is fixed by the basepoint: the knot runs leftward along
/// the upper branch of the rightmost right cusp. Maslov potentials are
/// integer lifts along the knot cut at that cusp; when `rot ≠ 0` they are
/// meaningful modulo `2|rot|`.
pub fn elaborate_front(plat: &PlatWord) -> Result<FrontDiagram, DiagramError> {
    let n = plat.len();
    let mut counts = vec![0usize; n + 1];
    counts[1..].copy_from_slice(&plat.strand_counts());
    let total: usize = counts.iter().sum();

    // the last event is a right cusp closing levels 1, 2
    let start = (Node { slab: n - 1, level: 2 }, Heading::Left);
    let mut traversal = vec![start];
    let mut turns: Vec<(usize, usize, Node, Node)> = Vec::new(); // (index, event, from, to)
    let (mut node, mut heading) = start;
    loop {
        let link = match heading {
            Heading::Left => left_link(plat, node),
            Heading::Right => right_link(plat, node),
        };
        let (next, next_heading) = match link {
            Link::Pass(m) => (m, heading),
            Link::Turn(m) if (m, heading.flip()) == start => break,
            Link::Turn(m) => {
                let event = match heading {
                    Heading::Left => node.slab,
                    Heading::Right => node.slab + 1,
                };
                turns.push((traversal.len(), event, node, m));
                (m, heading.flip())
            }
        };
        if (next, next_heading) == start {
            break;
        }
        if traversal.len() > total {
            unreachable!("traversal exceeded node count");
        }
        traversal.push((next, next_heading));
        node = next;
        heading = next_heading;
    }
    if traversal.len() != total {
        return Err(DiagramError::Disconnected {
            covered: traversal.len(),
            total,
        });
    }

    // strands are the runs between consecutive turns; the start sits right
    // after the final cusp, so turn boundaries align with strand boundaries
    let mut strand_at = counts.iter().map(|&c| vec![usize::MAX; c]).collect::<Vec<_>>();
    let mut heading_at = counts
        .iter()
        .map(|&c| vec![Heading::Left; c])
        .collect::<Vec<_>>();
    let mut strands = Vec::new();
    let mut maslov = Vec::new();
    let mut cusps = Vec::new();
    let mut boundaries: Vec<usize> = turns.iter().map(|t| t.0).collect();
    boundaries.push(traversal.len());
    let mut begin = 0usize;
    let mut mu = 0i64;
    let mut down = 0i64;
    let mut up = 0i64;
    for (si, &end) in boundaries.iter().enumerate() {
        let id = strands.len();
        let nodes: Vec<Node> = traversal[begin..end].iter().map(|&(m, _)| m).collect();
        for &(m, h) in &traversal[begin..end] {
            strand_at[m.slab][m.level - 1] = id;
            heading_at[m.slab][m.level - 1] = h;
        }
        let lo = nodes.iter().map(|m| m.slab).min().unwrap();
        let hi = nodes.iter().map(|m| m.slab).max().unwrap();
        strands.push(Strand {
            x_start: Rational::from_integer(lo as i64),
            x_end: Rational::from_integer(hi as i64 + 1),
            nodes,
        });
        maslov.push(mu);
        if let Some(&(_, _, from, to)) = turns.get(si) {
            if to.level > from.level {
                mu += 1;
                up += 1;
            } else {
                mu -= 1;
                down += 1;
            }
        }
        begin = end;
    }
    // the closing cusp at event n runs from level 1 up to level 2
    up += 1;
    for &(_, event, from, to) in &turns {
        let kind = match plat.events()[event - 1].kind {
            EventKind::LeftCusp => CuspKind::Left,
            _ => CuspKind::Right,
        };
        let (lo, hi) = if from.level < to.level { (from, to) } else { (to, from) };
        cusps.push(Cusp {
            event,
            kind,
            level: lo.level,
            lower: strand_at[lo.slab][lo.level - 1],
            upper: strand_at[hi.slab][hi.level - 1],
            upward: to.level > from.level,
        });
    }
    cusps.push(Cusp {
        event: n,
        kind: CuspKind::Right,
        level: 1,
        lower: strand_at[n - 1][0],
        upper: strand_at[n - 1][1],
        upward: true,
    });
    cusps.sort_by_key(|c| c.event);
    debug_assert_eq!((down - up).rem_euclid(2), 0);
    let rot = (down - up) / 2;

    let mut crossings = Vec::new();
    for (i, e) in plat.events().iter().enumerate() {
        if e.kind != EventKind::Crossing {
            continue;
        }
        let s = i; // slab to the left of event i + 1
        let k = e.level;
        let under = strand_at[s][k - 1];
        let over = strand_at[s][k];
        let same = heading_at[s][k - 1] == heading_at[s][k];
        crossings.push(FrontCrossing {
            event: i + 1,
            level: k,
            over,
            under,
            over_slope: Rational::from_integer(-1),
            under_slope: Rational::from_integer(1),
            sign: if same { 1 } else { -1 },
        });
    }

    Ok(FrontDiagram {
        plat: plat.clone(),
        counts,
        strand_at,
        heading_at,
        strands,
        crossings,
        cusps,
        maslov,
        rot,
        traversal,
    })
}

impl FrontDiagram {
    pub fn plat(&self) -> &PlatWord {
        &self.plat
    }

    /// Number of strands in each slab, slabs `0..=n`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn strand_at(&self, slab: usize, level: usize) -> usize {
        self.strand_at[slab][level - 1]
    }

    pub fn heading_at(&self, slab: usize, level: usize) -> Heading {
        self.heading_at[slab][level - 1]
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn crossings(&self) -> &[FrontCrossing] {
        &self.crossings
    }

    pub fn cusps(&self) -> &[Cusp] {
        &self.cusps
    }

    /// Maslov potential of each strand (integer lift).
    pub fn maslov(&self) -> &[i64] {
        &self.maslov
    }

    /// Modulus in which the potentials are well defined (0 means ℤ).
    pub fn maslov_modulus(&self) -> i64 {
        2 * self.rot.abs()
    }

    pub fn rot(&self) -> i64 {
        self.rot
    }

    /// Oriented traversal starting at the basepoint.
    pub fn traversal(&self) -> &[(Node, Heading)] {
        &self.traversal
    }

    pub fn right_cusp_count(&self) -> usize {
        self.cusps.iter().filter(|c| c.kind == CuspKind::Right).count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign).sum()
    }

    /// `tb = writhe − #right cusps`, `rot = (#down cusps − #up cusps) / 2`.
    pub fn classical_invariants(&self) -> ClassicalInvariants {
        ClassicalInvariants {
            tb: self.writhe() - self.right_cusp_count() as i64,
            rot: self.rot,
        }
    }

    /// Height of a position under the canonical coordinates.
    pub fn z(&self, node: Node) -> Rational {
        Rational::from_integer(node.level as i64)
    }
}

/// Free-function form of [`FrontDiagram::classical_invariants`].
pub fn classical_invariants(front: &FrontDiagram) -> ClassicalInvariants {
    front.classical_invariants()
}
