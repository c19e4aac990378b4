//! Right-to-left sweep.
//!
//! A disk with positive corner at `a` has `a` as its only local maximum in
//! x, so sweeping leftwards from `a` its x-slices form a list of intervals
//! (sheets), each bounded by a top and a bottom strand. The state is the
//! disk's boundary word read counterclockwise from `a`, with one `Open`
//! placeholder per live sheet: a sheet's top boundary is found right to
//! left and is written just before its placeholder; its bottom boundary is
//! read left to right and is written just after.
//!
//! Transitions, per sheet `[b, t]` and event:
//!
//! * crossing `X k`: strands both inside or both outside pass; a boundary
//!   strand meeting an outside strand may go straight or turn into the
//!   negative quadrant (`Bottom` under the top boundary, `Top` over the
//!   bottom boundary); a boundary strand meeting an inside strand goes
//!   straight; `b = k, t = k + 1` would need a second positive corner.
//! * left cusp `L k`: `[k, k + 1]` closes; a cusp wholly inside or outside
//!   passes; anything else would merge two sheets of one connected piece,
//!   which cannot happen in a disk.
//! * right cusp `R k` inside a sheet: either the sheet covers the loop, or
//!   it splits around it. Above the loop the new sheet's bottom is the upper
//!   branch (after a `Top` corner) or the lower branch (passing straight);
//!   below, symmetrically, with a `Bottom` corner or straight.

use super::AdmissibleDisk;
use crate::diagram::lagrangian::Dart;
use crate::diagram::{End, EventKind, Heading, LagrangianDiagram, Origin, Quadrant, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token {
    Edge(Dart),
    Corner(usize, Quadrant),
    Open { b: usize, t: usize },
}

struct State {
    tokens: Vec<Token>,
    remaining: Rational,
}

/// All admissible disks with positive corner at `a`, sorted by boundary.
pub fn sweep_enumerate(d: &LagrangianDiagram, a: usize) -> Vec<AdmissibleDisk> {
    let v = &d.vertices()[a];
    let mut out = Vec::new();

    if v.origin == Origin::RightCusp {
        // the lobe inside the loop
        out.push(AdmissibleDisk::from_walk(
            d,
            a,
            Quadrant::Right,
            Vec::new(),
            vec![v.out[End::SE as usize]],
        ));
    }

    let start = State {
        tokens: vec![
            Token::Edge(v.out[End::NW as usize]),
            Token::Open {
                b: v.level,
                t: v.level + 1,
            },
            Token::Edge(v.out[End::SW as usize] ^ 1),
        ],
        remaining: v.action,
    };
    let mut states = vec![start];
    for event in (1..v.event).rev() {
        let mut next = Vec::new();
        for s in states {
            if s.tokens.iter().any(|t| matches!(t, Token::Open { .. })) {
                advance(d, event, &s, &mut next);
            } else {
                next.push(s);
            }
        }
        states = next;
    }
    for s in states {
        debug_assert!(!s.tokens.iter().any(|t| matches!(t, Token::Open { .. })));
        let mut boundary = Vec::new();
        let mut negatives = Vec::new();
        for t in s.tokens {
            match t {
                Token::Edge(e) => boundary.push(e),
                Token::Corner(c, q) => negatives.push((c, q)),
                Token::Open { .. } => unreachable!(),
            }
        }
        out.push(AdmissibleDisk::from_walk(d, a, Quadrant::Left, negatives, boundary));
    }
    out.sort();
    out
}

fn top_dart(d: &LagrangianDiagram, slab: usize, level: usize) -> Dart {
    let (e, h) = d.slab_edge(slab, level);
    if h == Heading::Left {
        2 * e
    } else {
        2 * e + 1
    }
}

fn bottom_dart(d: &LagrangianDiagram, slab: usize, level: usize) -> Dart {
    top_dart(d, slab, level) ^ 1
}

/// One way a sheet can continue across an event: the tokens replacing its
/// placeholder, and the area spent on new corners.
type Option_ = (Vec<Token>, Rational);

/// Ways a sheet `[b, t]` in slab `event` continues into slab `event − 1`.
fn options(d: &LagrangianDiagram, event: usize, b: usize, t: usize) -> Vec<Option_> {
    let (kind, k) = d.event(event);
    let slab = event - 1;
    let zero = Rational::from_integer(0);
    let sheet = |b: usize, t: usize| {
        vec![
            Token::Edge(top_dart(d, slab, t)),
            Token::Open { b, t },
            Token::Edge(bottom_dart(d, slab, b)),
        ]
    };
    match kind {
        EventKind::Crossing => {
            let c = d.vertex_at_event(event).unwrap();
            let cost = d.vertices()[c].action;
            if (t < k || b > k + 1) || (b < k && t > k + 1) {
                vec![(sheet(b, t), zero)]
            } else if b == k && t == k + 1 {
                Vec::new()
            } else if t == k {
                let mut turn = vec![Token::Corner(c, Quadrant::Bottom)];
                turn.extend(sheet(b, k));
                vec![(sheet(b, k + 1), zero), (turn, cost)]
            } else if b == k + 1 {
                let mut turn = sheet(k + 1, t);
                turn.push(Token::Corner(c, Quadrant::Top));
                vec![(sheet(k, t), zero), (turn, cost)]
            } else if t == k + 1 {
                vec![(sheet(b, k), zero)]
            } else {
                debug_assert_eq!(b, k);
                vec![(sheet(k + 1, t), zero)]
            }
        }
        EventKind::LeftCusp => {
            let shift = |j: usize| if j > k + 1 { j - 2 } else { j };
            if b == k && t == k + 1 {
                vec![(Vec::new(), zero)]
            } else if t < k || b > k + 1 || (b < k && t > k + 1) {
                vec![(sheet(shift(b), shift(t)), zero)]
            } else {
                Vec::new()
            }
        }
        EventKind::RightCusp => {
            let shift = |j: usize| if j >= k { j + 2 } else { j };
            if !(b < k && t >= k) {
                return vec![(sheet(shift(b), shift(t)), zero)];
            }
            let c = d.vertex_at_event(event).unwrap();
            let cost = d.vertices()[c].action;
            let (b, t) = (b, t + 2);
            let (p, q) = (k, k + 1);
            let lobe = d.vertices()[c].out[End::NE as usize];
            let mut all = vec![(sheet(b, t), zero)];
            for upper_turns in [true, false] {
                for lower_turns in [true, false] {
                    let mut tokens = Vec::new();
                    let mut spent = zero;
                    let ub = if upper_turns { q } else { p };
                    tokens.extend(sheet(ub, t));
                    if upper_turns {
                        tokens.push(Token::Corner(c, Quadrant::Top));
                        spent += cost;
                    }
                    tokens.push(Token::Edge(lobe));
                    let dt = if lower_turns { p } else { q };
                    if lower_turns {
                        tokens.push(Token::Corner(c, Quadrant::Bottom));
                        spent += cost;
                    }
                    tokens.extend(sheet(b, dt));
                    all.push((tokens, spent));
                }
            }
            all
        }
    }
}

fn advance(d: &LagrangianDiagram, event: usize, s: &State, out: &mut Vec<State>) {
    let zero = Rational::from_integer(0);
    let mut partial = vec![State {
        tokens: Vec::with_capacity(s.tokens.len() + 8),
        remaining: s.remaining,
    }];
    for &tok in &s.tokens {
        match tok {
            Token::Open { b, t } => {
                let opts = options(d, event, b, t);
                let mut grown = Vec::with_capacity(partial.len() * opts.len());
                for p in &partial {
                    for (tokens, cost) in &opts {
                        let remaining = p.remaining - cost;
                        if remaining <= zero {
                            continue;
                        }
                        let mut t = p.tokens.clone();
                        t.extend_from_slice(tokens);
                        grown.push(State {
                            tokens: t,
                            remaining,
                        });
                    }
                }
                partial = grown;
                if partial.is_empty() {
                    return;
                }
            }
            other => {
                for p in &mut partial {
                    p.tokens.push(other);
                }
            }
        }
    }
    for mut p in partial {
        p.tokens.dedup_by(|x, y| matches!((x, y), (Token::Edge(a), Token::Edge(b)) if a == b));
        out.push(p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{elaborate_front, parse_plat, resolve};

    fn diagram(text: &str) -> LagrangianDiagram {
        resolve(&elaborate_front(&parse_plat(text).unwrap()).unwrap()).unwrap()
    }

    fn words(d: &LagrangianDiagram, a: &str) -> Vec<String> {
        let a = d.vertex_by_name(a).unwrap();
        let mut w: Vec<String> = sweep_enumerate(d, a)
            .iter()
            .map(|k| {
                k.negatives
                    .iter()
                    .map(|&(v, q)| format!("{}{}", d.vertices()[v].name, q))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        w.sort();
        w
    }

    #[test]
    fn crossing_pass_and_turn() {
        // a sheet whose top meets an outside strand branches in two
        let d = diagram("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
        let opts = options(&d, 5, 1, 2);
        assert_eq!(opts.len(), 2);
        assert!(matches!(opts[0].0[1], Token::Open { b: 1, t: 3 }));
        assert_eq!(opts[1].0[0], Token::Corner(2, Quadrant::Bottom));
        assert!(matches!(opts[1].0[2], Token::Open { b: 1, t: 2 }));
        let opts = options(&d, 5, 3, 4);
        assert_eq!(opts.len(), 2);
        assert!(matches!(opts[0].0[1], Token::Open { b: 2, t: 4 }));
        assert_eq!(opts[1].0[3], Token::Corner(2, Quadrant::Top));
    }

    #[test]
    fn crossing_between_boundaries_is_dead() {
        let d = diagram("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
        assert!(options(&d, 5, 2, 3).is_empty());
        // inside strand: straight only
        assert_eq!(options(&d, 5, 1, 3).len(), 1);
        assert_eq!(options(&d, 5, 2, 4).len(), 1);
        // wholly inside or outside
        assert_eq!(options(&d, 5, 1, 4).len(), 1);
    }

    #[test]
    fn left_cusp_closes_or_kills() {
        let d = diagram("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
        assert_eq!(options(&d, 2, 1, 2), vec![(Vec::new(), Rational::from_integer(0))]);
        assert!(options(&d, 2, 2, 3).is_empty());
        assert!(options(&d, 2, 1, 3).is_empty());
        assert_eq!(options(&d, 2, 3, 4).len(), 1);
    }

    #[test]
    fn right_cusp_inside_has_five_continuations() {
        let d = diagram("L 1\nL 2\nX 1\nR 2\nR 1");
        // the cusp at event 4 closes inside the sheet [1, 2] of slab 4
        let opts = options(&d, 4, 1, 2);
        assert_eq!(opts.len(), 5);
        // outside the gap: a single pass
        let d = diagram("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
        assert_eq!(options(&d, 6, 1, 2).len(), 1);
    }

    #[test]
    fn golden_words() {
        assert_eq!(words(&diagram("L 1\nR 1"), "a1"), vec!["", ""]);
        let d = diagram("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
        assert_eq!(words(&d, "a1"), vec!["", "b1B", "b3B", "b3B b2B b1B"]);
        assert_eq!(words(&d, "a2"), vec!["", "b1T", "b1T b2T b3T", "b3T"]);
        for b in ["b1", "b2", "b3"] {
            assert!(words(&d, b).is_empty());
        }
    }
}
