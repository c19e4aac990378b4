//! Exhaustive search, in two stages.
//!
//! Candidates: boundary walks that leave the positive corner and at every
//! crossing go straight or turn left into a negative quadrant. A dart crossed
//! `k` times forces its left face to be covered at least `k` times, and the
//! covered area can never exceed `ℓ(a) − Σ ℓ(negatives)`; that bounds the
//! walk. A closed walk determines face multiplicities by winding numbers,
//! which must be non-negative and fit together into whole sheets.
//!
//! Certification: multiplicities alone do not determine a disk, so every
//! candidate is rebuilt by gluing. Start from the face at the positive corner
//! and take the first undecided side: it stays on the boundary, gets a copy
//! of the face across it (within the face counts the walk allows), or waits
//! to be zipped. Where the quadrants around a vertex visit add up to a full
//! turn, the two sides there are one edge traversed both ways and get zipped.
//! A candidate is kept when some gluing closes up with the walk as boundary.
//! Distinct immersions with the same boundary are not told apart.

use std::collections::VecDeque;

use super::{AdmissibleDisk, DiskError};
use crate::diagram::lagrangian::Dart;
use crate::diagram::{LagrangianDiagram, Quadrant, Rational};

struct Search<'a> {
    d: &'a LagrangianDiagram,
    a: usize,
    q: Quadrant,
    max_corners: usize,
    count: Vec<u32>,
    fmax: Vec<u32>,
    lower_bound: Rational,
    remaining: Rational,
    path: Vec<Dart>,
    negatives: Vec<(usize, Quadrant)>,
    found: Vec<AdmissibleDisk>,
}

/// All admissible disks with positive corner at `a`, by exhaustive search.
/// Fails with a budget error when a disk would need more than `max_corners`
/// corners, instead of dropping it.
pub fn brute_force_enumerate(
    d: &LagrangianDiagram,
    a: usize,
    max_corners: usize,
) -> Result<Vec<AdmissibleDisk>, DiskError> {
    if max_corners == 0 {
        return Err(DiskError::Budget {
            generator: d.vertices()[a].name.clone(),
            max_corners,
        });
    }
    let mut found = Vec::new();
    for q in [Quadrant::Left, Quadrant::Right] {
        let mut s = Search {
            d,
            a,
            q,
            max_corners,
            count: vec![0; 2 * d.edges().len()],
            fmax: vec![0; d.faces().len()],
            lower_bound: Rational::from_integer(0),
            remaining: d.vertices()[a].action,
            path: Vec::new(),
            negatives: Vec::new(),
            found: Vec::new(),
        };
        let first = d.vertices()[a].out[q.ends().0 as usize];
        if let Some(old) = s.push(first) {
            s.walk()?;
            s.pop(old);
        }
        found.append(&mut s.found);
    }
    found.sort();
    Ok(found)
}

impl Search<'_> {
    fn push(&mut self, dart: Dart) -> Option<u32> {
        let f = self.d.face_left(dart);
        if f == self.d.unbounded_face() {
            return None;
        }
        let c = self.count[dart] + 1;
        let old = self.fmax[f];
        let mut lb = self.lower_bound;
        if c > old {
            lb += self.d.faces()[f].area * Rational::from_integer((c - old) as i64);
        }
        if lb > self.remaining {
            return None;
        }
        self.count[dart] = c;
        self.fmax[f] = old.max(c);
        self.lower_bound = lb;
        self.path.push(dart);
        Some(old)
    }

    fn pop(&mut self, old: u32) {
        let dart = self.path.pop().unwrap();
        let f = self.d.face_left(dart);
        self.count[dart] -= 1;
        if self.fmax[f] > old {
            self.lower_bound -=
                self.d.faces()[f].area * Rational::from_integer((self.fmax[f] - old) as i64);
            self.fmax[f] = old;
        }
    }

    fn walk(&mut self) -> Result<(), DiskError> {
        let d = self.d;
        let (v, e_in) = d.dart_head(*self.path.last().unwrap());
        let turn = Quadrant::left_turn_after(e_in);
        let zero = Rational::from_integer(0);

        if v == self.a && turn == self.q && self.remaining > zero {
            if let Some(m) = multiplicities(d, &self.path, &self.count) {
                if certify(d, self.a, self.q, &self.path, m) {
                    self.found.push(AdmissibleDisk::from_walk(
                        d,
                        self.a,
                        self.q,
                        self.negatives.clone(),
                        self.path.clone(),
                    ));
                }
            }
        }

        let straight = d.vertices()[v].out[e_in.opposite() as usize];
        if let Some(old) = self.push(straight) {
            self.walk()?;
            self.pop(old);
        }

        if !turn.is_positive() {
            let left = self.remaining - d.vertices()[v].action;
            if left > zero && self.lower_bound <= left {
                if self.negatives.len() + 2 > self.max_corners {
                    return Err(DiskError::Budget {
                        generator: d.vertices()[self.a].name.clone(),
                        max_corners: self.max_corners,
                    });
                }
                let saved = self.remaining;
                self.remaining = left;
                self.negatives.push((v, turn));
                let next = d.vertices()[v].out[e_in.cw() as usize];
                if let Some(old) = self.push(next) {
                    self.walk()?;
                    self.pop(old);
                }
                self.negatives.pop();
                self.remaining = saved;
            }
        }
        Ok(())
    }
}

/// Face multiplicities of a closed walk, when they could belong to an
/// immersed disk: winding numbers non-negative, every edge and vertex
/// covered by whole sheets, Euler characteristic 1.
fn multiplicities(d: &LagrangianDiagram, path: &[Dart], count: &[u32]) -> Option<Vec<u32>> {
    let nf = d.faces().len();
    let ne = d.edges().len();
    let mut m: Vec<Option<i64>> = vec![None; nf];
    m[d.unbounded_face()] = Some(0);
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nf];
    for e in 0..ne {
        let (l, r) = (d.face_left(2 * e), d.face_right(2 * e));
        let net = count[2 * e] as i64 - count[2 * e + 1] as i64;
        adj[r].push((l, net));
        adj[l].push((r, -net));
    }
    let mut queue = VecDeque::from([d.unbounded_face()]);
    while let Some(f) = queue.pop_front() {
        let mf = m[f].unwrap();
        for &(g, delta) in &adj[f] {
            match m[g] {
                None => {
                    m[g] = Some(mf + delta);
                    queue.push_back(g);
                }
                Some(x) if x != mf + delta => return None,
                Some(_) => {}
            }
        }
    }
    let m: Vec<i64> = m.into_iter().map(|x| x.unwrap_or(0)).collect();
    if m.iter().any(|&x| x < 0) {
        return None;
    }

    let faces: i64 = m.iter().sum();
    let mut edges = 0i64;
    for e in 0..ne {
        let k = count[2 * e] as i64;
        let j = count[2 * e + 1] as i64;
        let sheets = m[d.face_left(2 * e)] - k;
        if sheets < 0 || m[d.face_right(2 * e)] - j != sheets {
            return None;
        }
        edges += sheets + k + j;
    }

    let nv = d.vertices().len();
    let mut cover = vec![[0i64; 4]; nv];
    let mut visits = vec![0i64; nv];
    for i in 0..path.len() {
        let (v, e_in) = d.dart_head(path[i]);
        let (_, e_out) = d.dart_tail(path[(i + 1) % path.len()]);
        visits[v] += 1;
        cover[v][e_in.cw() as usize] += 1;
        if e_out == e_in.opposite() {
            cover[v][e_in.cw().cw() as usize] += 1;
        }
    }
    let mut vertices = 0i64;
    for v in 0..nv {
        let inner: Vec<i64> = Quadrant::ALL
            .iter()
            .map(|&q| m[d.corner_face(v, q)] - cover[v][q as usize])
            .collect();
        if inner[0] < 0 || inner.iter().any(|&x| x != inner[0]) {
            return None;
        }
        vertices += inner[0] + visits[v];
    }
    (faces - edges + vertices == 1).then(|| m.into_iter().map(|x| x as u32).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Open,
    /// On the final boundary.
    Fixed,
    /// Interior; will be zipped against another side.
    Pending,
}

#[derive(Clone, Debug)]
struct Polygon {
    /// Boundary darts, interior on the left; `sides[0]` leaves the positive
    /// corner and the last side enters it.
    sides: Vec<Dart>,
    state: Vec<Side>,
    /// `angles[i]`: quadrants filled at the vertex between side `i` and
    /// side `i + 1`.
    angles: Vec<u8>,
}

/// Whether exactly `copies[f]` copies of each face glue into an immersed
/// disk with boundary `target`.
fn certify(d: &LagrangianDiagram, a: usize, q: Quadrant, target: &[Dart], mut copies: Vec<u32>) -> bool {
    let f0 = d.corner_face(a, q);
    if copies[f0] == 0 {
        return false;
    }
    copies[f0] -= 1;
    let face = &d.faces()[f0];
    let i = face.corners.iter().position(|&c| c == (a, q)).unwrap();
    let n = face.darts.len();
    let sides: Vec<Dart> = (1..=n).map(|j| face.darts[(i + j) % n]).collect();
    let mut state = vec![Side::Open; n];
    state[0] = Side::Fixed;
    state[n - 1] = Side::Fixed;
    let poly = Polygon {
        sides,
        state,
        angles: vec![1; n],
    };
    grow(d, target, poly, &mut copies)
}

/// The fixed runs at both ends of the boundary must agree with the target.
fn matches_target(p: &Polygon, target: &[Dart]) -> bool {
    let n = p.sides.len();
    let head = p.state.iter().take_while(|&&f| f == Side::Fixed).count();
    if head == n {
        return p.sides == target;
    }
    let tail = p.state.iter().rev().take_while(|&&f| f == Side::Fixed).count();
    head + tail <= target.len()
        && p.sides[..head] == target[..head]
        && p.sides[n - tail..] == target[target.len() - tail..]
}

fn grow(d: &LagrangianDiagram, target: &[Dart], poly: Polygon, copies: &mut [u32]) -> bool {
    if !matches_target(&poly, target) {
        return false;
    }
    let Some(i) = poly.state.iter().position(|&f| f == Side::Open) else {
        return poly.state.iter().all(|&f| f == Side::Fixed)
            && copies.iter().all(|&c| c == 0)
            && (0..poly.sides.len()).all(|v| visit_ok(d, &poly, v));
    };

    // keep the side on the boundary: nothing is ever glued before the first
    // open side, so the sides before it are final and a pending side there
    // could never be zipped
    if poly.state[i - 1] == Side::Fixed && target.get(i) == Some(&poly.sides[i]) {
        let mut kept = poly.clone();
        kept.state[i] = Side::Fixed;
        if visit_ok(d, &kept, i - 1) && visit_ok(d, &kept, i) && grow(d, target, kept, copies) {
            return true;
        }
    }

    // glue the face across it
    let f = d.face_left(poly.sides[i] ^ 1);
    if f != d.unbounded_face() && copies[f] > 0 {
        if let Some(glued) = glue(d, &poly, i) {
            copies[f] -= 1;
            let ok = grow(d, target, glued, copies);
            copies[f] += 1;
            if ok {
                return true;
            }
        }
    }

    // leave it for a later zip
    let mut pending = poly;
    pending.state[i] = Side::Pending;
    grow(d, target, pending, copies)
}

/// A visit between two fixed sides must be a convex negative corner or a
/// straight pass. The positive corner is the last visit.
fn visit_ok(d: &LagrangianDiagram, p: &Polygon, v: usize) -> bool {
    let n = p.sides.len();
    if v == n - 1 || p.state[v] != Side::Fixed || p.state[(v + 1) % n] != Side::Fixed {
        return true;
    }
    match p.angles[v] {
        1 => {
            let (_, e_in) = d.dart_head(p.sides[v]);
            !Quadrant::left_turn_after(e_in).is_positive()
        }
        2 => true,
        _ => false,
    }
}

fn glue(d: &LagrangianDiagram, p: &Polygon, i: usize) -> Option<Polygon> {
    let dart = p.sides[i];
    let face = &d.faces()[d.face_left(dart ^ 1)];
    let j = face.darts.iter().position(|&x| x == dart ^ 1).unwrap();
    let m = face.darts.len();
    let rest: Vec<Dart> = (1..m).map(|s| face.darts[(j + s) % m]).collect();

    let n = p.sides.len();
    let mut sides = Vec::with_capacity(n + m);
    let mut state = Vec::with_capacity(n + m);
    let mut angles = Vec::with_capacity(n + m);
    sides.extend_from_slice(&p.sides[..i]);
    state.extend_from_slice(&p.state[..i]);
    angles.extend_from_slice(&p.angles[..i]);
    // the visit before side i gains the face's corner there; a one-sided
    // face (a cusp loop) instead merges the visits at both ends of side i
    *angles.last_mut().unwrap() += if rest.is_empty() { p.angles[i] + 1 } else { 1 };
    for (s, &x) in rest.iter().enumerate() {
        sides.push(x);
        state.push(Side::Open);
        angles.push(if s + 1 == rest.len() { p.angles[i] + 1 } else { 1 });
    }
    sides.extend_from_slice(&p.sides[i + 1..]);
    state.extend_from_slice(&p.state[i + 1..]);
    angles.extend_from_slice(&p.angles[i + 1..]);
    let mut poly = Polygon { sides, state, angles };
    close_up(&mut poly)?;
    Some(poly)
}

/// Zips every visit whose angle reached a full turn; there the two sides
/// are one edge traversed both ways. Fails on overfull visits, or when a
/// side to be zipped was already fixed on the boundary.
fn close_up(p: &mut Polygon) -> Option<()> {
    while let Some(v) = p.angles.iter().position(|&x| x >= 4) {
        let n = p.sides.len();
        let (x, y) = (v, v + 1);
        if p.angles[v] > 4
            || y >= n
            || p.state[x] == Side::Fixed
            || p.state[y] == Side::Fixed
            || p.sides[y] != p.sides[x] ^ 1
        {
            return None;
        }
        // x ≥ 1 and y ≤ n − 2 because the sides at the positive corner are fixed
        let merged = p.angles[x - 1] + p.angles[y];
        p.sides.drain(x..=y);
        p.state.drain(x..=y);
        p.angles.drain(x..=y);
        p.angles[x - 1] = merged;
    }
    Some(())
}
