//! The resolved diagram: a planar model of the Lagrangian projection.
//!
//! Each front crossing stays a crossing. Each right cusp becomes a crossing
//! followed by a small loop to its right. Left cusps become smooth turns.
//! Strands keep the front's `(x, level)` layout, so the rotation system at
//! every crossing is the same: ends `NE, NW, SW, SE` in counterclockwise
//! order, with quadrants `Top, Left, Bottom, Right` between consecutive ends.
//!
//! Actions grow geometrically with x: the crossing at event `x` has action
//! `3^{x-1}`. A bounded face has its rightmost point at a positive corner,
//! and every earlier event contributes at most two negative corners, so the
//! signed corner sum of every bounded face is positive.

use std::fmt;

use super::front::{FrontDiagram, Heading, Node, Rational};
use super::plat::EventKind;
use super::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    NE = 0,
    NW = 1,
    SW = 2,
    SE = 3,
}

impl End {
    pub const ALL: [End; 4] = [End::NE, End::NW, End::SW, End::SE];

    pub fn from_index(i: usize) -> End {
        End::ALL[i % 4]
    }

    /// Next end clockwise.
    pub fn cw(self) -> End {
        End::from_index(self as usize + 3)
    }

    /// Next end counterclockwise.
    pub fn ccw(self) -> End {
        End::from_index(self as usize + 1)
    }

    pub fn opposite(self) -> End {
        End::from_index(self as usize + 2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    Top = 0,
    Left = 1,
    Bottom = 2,
    Right = 3,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::Top, Quadrant::Left, Quadrant::Bottom, Quadrant::Right];

    /// The quadrant between `e` and its clockwise neighbour, i.e. the corner
    /// filled when a boundary arriving through `e` turns left.
    pub fn left_turn_after(e: End) -> Quadrant {
        Quadrant::ALL[e.cw() as usize]
    }

    /// The two ends bounding the quadrant, in counterclockwise order.
    pub fn ends(self) -> (End, End) {
        let i = self as usize;
        (End::from_index(i), End::from_index(i + 1))
    }

    /// Reeb sign: left and right quadrants are positive.
    pub fn is_positive(self) -> bool {
        matches!(self, Quadrant::Left | Quadrant::Right)
    }

    pub fn letter(self) -> char {
        match self {
            Quadrant::Top => 'T',
            Quadrant::Left => 'L',
            Quadrant::Bottom => 'B',
            Quadrant::Right => 'R',
        }
    }

    pub fn from_letter(c: char) -> Option<Quadrant> {
        Quadrant::ALL.into_iter().find(|q| q.letter() == c)
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    FrontCrossing,
    RightCusp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub event: usize,
    /// Lower of the two levels meeting here (left-hand side).
    pub level: usize,
    pub origin: Origin,
    pub grading: i64,
    pub action: Rational,
    pub position: (Rational, Rational),
    /// Outgoing dart through each end, indexed by `End`.
    pub out: [usize; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// `(vertex, end)` where the oriented knot leaves the tail vertex.
    pub tail: (usize, End),
    /// `(vertex, end)` where it enters the head vertex.
    pub head: (usize, End),
    /// Front positions the edge runs through, in knot order.
    pub nodes: Vec<Node>,
}

/// A dart is an edge with a direction: `2e` follows the knot, `2e + 1`
/// runs against it.
pub type Dart = usize;

#[derive(Clone, Debug)]
pub struct LagrangianDiagram {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    slab_edge: Vec<Vec<(usize, Heading)>>,
    event_vertex: Vec<Option<usize>>,
    face_of: Vec<usize>,
    faces: Vec<Face>,
    unbounded: usize,
    basepoint_edge: usize,
    rot: i64,
    counts: Vec<usize>,
    kinds: Vec<(EventKind, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Darts with this face on their left, in boundary order.
    pub darts: Vec<Dart>,
    /// `(vertex, quadrant)` corners in boundary order.
    pub corners: Vec<(usize, Quadrant)>,
    /// Signed area from the corner actions (positive for bounded faces).
    pub area: Rational,
}

/// `3^{x-1}` must fit in an `i64`.
const MAX_EVENTS: usize = 39;

/// Resolves a front into its Lagrangian diagram.
pub fn resolve(front: &FrontDiagram) -> Result<LagrangianDiagram, DiagramError> {
    let plat = front.plat();
    let n = plat.len();
    if n > MAX_EVENTS {
        return Err(DiagramError::TooLarge(n));
    }
    let events = plat.events();

    // vertices in event order
    let mut vertices = Vec::new();
    let mut event_vertex = vec![None; n + 1];
    let (mut nb, mut na) = (0, 0);
    for (i, e) in events.iter().enumerate() {
        let event = i + 1;
        let (name, origin, grading) = match e.kind {
            EventKind::LeftCusp => continue,
            EventKind::Crossing => {
                nb += 1;
                let over = front.strand_at(event - 1, e.level + 1);
                let under = front.strand_at(event - 1, e.level);
                let g = front.maslov()[over] - front.maslov()[under];
                (format!("b{nb}"), Origin::FrontCrossing, g)
            }
            EventKind::RightCusp => {
                na += 1;
                (format!("a{na}"), Origin::RightCusp, 1)
            }
        };
        event_vertex[event] = Some(vertices.len());
        vertices.push(Vertex {
            name,
            event,
            level: e.level,
            origin,
            grading,
            action: Rational::from_integer(3i64.pow(event as u32 - 1)),
            position: (
                Rational::from_integer(event as i64),
                Rational::new(2 * e.level as i64 + 1, 2),
            ),
            out: [usize::MAX; 4],
        });
    }

    let last = event_vertex[n].expect("plats end with a right cusp");
    let mut edges: Vec<Edge> = Vec::new();
    let mut slab_edge: Vec<Vec<(usize, Heading)>> = front
        .counts()
        .iter()
        .map(|&c| vec![(usize::MAX, Heading::Left); c])
        .collect();
    let mut current = Edge {
        tail: (last, End::NW),
        head: (usize::MAX, End::NE),
        nodes: Vec::new(),
    };
    let trav = front.traversal();
    for i in 0..trav.len() {
        let (node, heading) = trav[i];
        let id = edges.len();
        slab_edge[node.slab][node.level - 1] = (id, heading);
        current.nodes.push(node);
        let (next, _) = trav[(i + 1) % trav.len()];
        let event = match heading {
            Heading::Left => node.slab,
            Heading::Right => node.slab + 1,
        };
        let e = events[event - 1];
        let pass = match e.kind {
            EventKind::LeftCusp => None,
            EventKind::RightCusp if next.slab == node.slab => {
                // turning around the cusp: through the crossing, the loop,
                // and back through the crossing
                let v = event_vertex[event].unwrap();
                let (enter, loop_from, loop_to, leave) = if node.level == e.level {
                    (End::SW, End::NE, End::SE, End::NW)
                } else {
                    (End::NW, End::SE, End::NE, End::SW)
                };
                current.head = (v, enter);
                edges.push(std::mem::replace(
                    &mut current,
                    Edge {
                        tail: (v, loop_from),
                        head: (v, loop_to),
                        nodes: Vec::new(),
                    },
                ));
                Some((v, leave))
            }
            EventKind::Crossing => {
                let k = e.level;
                let v = event_vertex[event].unwrap();
                match (heading, node.level) {
                    (Heading::Right, j) if j == k => Some((v, End::SW, End::NE)),
                    (Heading::Right, j) if j == k + 1 => Some((v, End::NW, End::SE)),
                    (Heading::Left, j) if j == k => Some((v, End::SE, End::NW)),
                    (Heading::Left, j) if j == k + 1 => Some((v, End::NE, End::SW)),
                    _ => None,
                }
                .map(|(v, enter, leave)| {
                    current.head = (v, enter);
                    (v, leave)
                })
            }
            EventKind::RightCusp => None,
        };
        if let Some((v, leave)) = pass {
            edges.push(std::mem::replace(
                &mut current,
                Edge {
                    tail: (v, leave),
                    head: (usize::MAX, End::NE),
                    nodes: Vec::new(),
                },
            ));
        }
    }
    // the walk ends by re-entering the start vertex, which closes the loop
    debug_assert!(current.nodes.is_empty());
    debug_assert_eq!(current.tail, (last, End::NW));

    for (id, edge) in edges.iter().enumerate() {
        let (tv, te) = edge.tail;
        let (hv, he) = edge.head;
        vertices[tv].out[te as usize] = 2 * id;
        vertices[hv].out[he as usize] = 2 * id + 1;
    }
    debug_assert!(vertices.iter().all(|v| v.out.iter().all(|&d| d != usize::MAX)));

    let mut diagram = LagrangianDiagram {
        vertices,
        edges,
        slab_edge,
        event_vertex,
        face_of: Vec::new(),
        faces: Vec::new(),
        unbounded: usize::MAX,
        basepoint_edge: 0,
        rot: front.rot(),
        counts: front.counts().to_vec(),
        kinds: events.iter().map(|e| (e.kind, e.level)).collect(),
    };
    diagram.trace_faces();

    let v = diagram.vertices.len() as i64;
    let e = diagram.edges.len() as i64;
    let f = diagram.faces.len() as i64;
    if v - e + f != 2 {
        return Err(DiagramError::NonPlanar { euler: v - e + f });
    }
    // the face above the top strand in slab 1 is unbounded
    let top = diagram.counts[1];
    let (edge, heading) = diagram.slab_edge[1][top - 1];
    let dart = if heading == Heading::Right { 2 * edge } else { 2 * edge + 1 };
    diagram.unbounded = diagram.face_of[dart];
    for (i, face) in diagram.faces.iter().enumerate() {
        if i != diagram.unbounded && face.area <= Rational::from_integer(0) {
            return Err(DiagramError::DegenerateGeometry(format!(
                "face {i} has non-positive area {}",
                face.area
            )));
        }
    }
    Ok(diagram)
}

impl LagrangianDiagram {
    fn trace_faces(&mut self) {
        let ndarts = 2 * self.edges.len();
        self.face_of = vec![usize::MAX; ndarts];
        for start in 0..ndarts {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let id = self.faces.len();
            let mut face = Face {
                darts: Vec::new(),
                corners: Vec::new(),
                area: Rational::from_integer(0),
            };
            let mut d = start;
            loop {
                self.face_of[d] = id;
                face.darts.push(d);
                let (v, e_in) = self.dart_head(d);
                let q = Quadrant::left_turn_after(e_in);
                face.corners.push((v, q));
                let a = self.vertices[v].action;
                face.area += if q.is_positive() { a } else { -a };
                d = self.vertices[v].out[e_in.cw() as usize];
                if d == start {
                    break;
                }
            }
            self.faces.push(face);
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn unbounded_face(&self) -> usize {
        self.unbounded
    }

    /// Face on the left of a dart.
    pub fn face_left(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// Face on the right of a dart.
    pub fn face_right(&self, d: Dart) -> usize {
        self.face_of[d ^ 1]
    }

    /// Face filling quadrant `q` at vertex `v`.
    pub fn corner_face(&self, v: usize, q: Quadrant) -> usize {
        let (_, second) = q.ends();
        self.face_of[self.vertices[v].out[second as usize] ^ 1]
    }

    /// `(vertex, end)` the dart leaves through.
    pub fn dart_tail(&self, d: Dart) -> (usize, End) {
        let e = &self.edges[d / 2];
        if d % 2 == 0 {
            e.tail
        } else {
            e.head
        }
    }

    /// `(vertex, end)` the dart arrives through.
    pub fn dart_head(&self, d: Dart) -> (usize, End) {
        let e = &self.edges[d / 2];
        if d % 2 == 0 {
            e.head
        } else {
            e.tail
        }
    }

    /// Edge holding the basepoint (the arc just left of the rightmost right
    /// cusp, on its upper branch).
    pub fn basepoint_edge(&self) -> usize {
        self.basepoint_edge
    }

    pub fn rot(&self) -> i64 {
        self.rot
    }

    pub fn t_grading(&self) -> i64 {
        -2 * self.rot
    }

    /// Number of events in the underlying plat.
    pub fn event_count(&self) -> usize {
        self.kinds.len()
    }

    /// Kind and level of event `event` (1-based).
    pub fn event(&self, event: usize) -> (EventKind, usize) {
        self.kinds[event - 1]
    }

    pub fn strand_count(&self, slab: usize) -> usize {
        self.counts[slab]
    }

    /// Edge running through `level` in `slab`, with the knot's heading there.
    pub fn slab_edge(&self, slab: usize, level: usize) -> (usize, Heading) {
        self.slab_edge[slab][level - 1]
    }

    pub fn vertex_at_event(&self, event: usize) -> Option<usize> {
        self.event_vertex[event]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Loop edge of a right-cusp vertex.
    pub fn loop_edge(&self, v: usize) -> Option<usize> {
        if self.vertices[v].origin != Origin::RightCusp {
            return None;
        }
        self.edges
            .iter()
            .position(|e| e.tail.0 == v && e.head.0 == v && e.nodes.is_empty())
    }

    /// Gradings of all crossings, in vertex order.
    pub fn gradings(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.grading).collect()
    }

    /// Smallest bounded face area.
    pub fn min_face_area(&self) -> Rational {
        self.faces
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != self.unbounded)
            .map(|(_, f)| f.area)
            .min()
            .expect("at least one bounded face")
    }
}

/// Free-function form of [`LagrangianDiagram::gradings`].
pub fn gradings(d: &LagrangianDiagram) -> Vec<i64> {
    d.gradings()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{elaborate_front, parse_plat};

    fn diagram(text: &str) -> LagrangianDiagram {
        resolve(&elaborate_front(&parse_plat(text).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn unknot_is_a_figure_eight() {
        let d = diagram("L 1\nR 1");
        assert_eq!(d.vertices().len(), 1);
        assert_eq!(d.vertices()[0].action, Rational::from_integer(3));
        assert_eq!(d.vertices()[0].grading, 1);
        assert_eq!(d.edges().len(), 2);
        assert_eq!(d.faces().len(), 3);
        assert_eq!(d.loop_edge(0), Some(1));
        // two lobes of area 3 each
        let mut areas: Vec<_> = (0..3)
            .filter(|&f| f != d.unbounded_face())
            .map(|f| d.faces()[f].area)
            .collect();
        areas.sort();
        assert_eq!(areas, vec![Rational::from_integer(3); 2]);
    }

    #[test]
    fn trefoil_resolution() {
        let d = diagram("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
        assert_eq!(d.vertices().len(), 5);
        let fc = d
            .vertices()
            .iter()
            .filter(|v| v.origin == Origin::FrontCrossing)
            .count();
        assert_eq!(fc, 3);
        let mut g = d.gradings();
        g.sort();
        assert_eq!(g, vec![0, 0, 0, 1, 1]);
        let names: Vec<_> = d.vertices().iter().map(|v| v.name.as_str()).collect();
        assert_eq!(names, vec!["b1", "b2", "b3", "a1", "a2"]);
    }

    #[test]
    fn end_and_quadrant_bookkeeping() {
        assert_eq!(End::NE.cw(), End::SE);
        assert_eq!(End::SW.ccw(), End::SE);
        assert_eq!(End::NW.opposite(), End::SE);
        assert_eq!(Quadrant::left_turn_after(End::SW), Quadrant::Left);
        assert_eq!(Quadrant::Bottom.ends(), (End::SW, End::SE));
        assert_eq!(Quadrant::from_letter('T'), Some(Quadrant::Top));
    }
}
