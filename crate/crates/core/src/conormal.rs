//! Unit conormal lifts of plane curves, numerically.
//!
//! `Ψ(p, q) = (q, p − ⟨q, p⟩q, ⟨q, p⟩)` identifies the unit cotangent bundle
//! `ℝⁿ × Sⁿ⁻¹` (contact form `q·dp`) with `J¹(Sⁿ⁻¹)` (contact form
//! `dz − p_J·dq`). For a plane curve `γ` the conormal lift has two sheets,
//! one per unit normal `n = ±rot90(γ′)`, with front coordinates
//! `θ = arg n`, `z = ⟨γ, n⟩` and `p = ⟨γ, rot90(n)⟩`.
//!
//! Reeb chords are pairs of lift points with equal `(θ, p)`, i.e. double
//! normals of the curve. Each double normal shows up twice, at `θ` and
//! `θ + π` (co-orientation reversed); chords are reported once per double
//! normal.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConormalError {
    #[error("psi: |q| = {0}, expected a unit vector")]
    NotUnit(f64),
    #[error("psi: dimension mismatch ({0} vs {1})")]
    Dimension(usize, usize),
    #[error("curve: zero tangent at sample {0}")]
    NotImmersed(usize),
    #[error("curve: need at least 4 samples, got {0}")]
    TooFewSamples(usize),
    #[error("curve: line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("chords: not chord generic ({0})")]
    NotChordGeneric(String),
}

const UNIT_TOL: f64 = 1e-12;

/// A point of the unit cotangent bundle: base point `p ∈ ℝⁿ`, unit
/// covector `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitCotangentPoint {
    pub p: Vec<f64>,
    pub q: Vec<f64>,
}

/// A point of `J¹(Sⁿ⁻¹)`: `q_jet ∈ Sⁿ⁻¹`, `p_jet ⊥ q_jet`, and `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct JetPoint {
    pub q_jet: Vec<f64>,
    pub p_jet: Vec<f64>,
    pub z: f64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn psi(x: &UnitCotangentPoint) -> Result<JetPoint, ConormalError> {
    if x.p.len() != x.q.len() {
        return Err(ConormalError::Dimension(x.p.len(), x.q.len()));
    }
    let nq = norm(&x.q);
    if (nq - 1.0).abs() > UNIT_TOL {
        return Err(ConormalError::NotUnit(nq));
    }
    let z = dot(&x.q, &x.p);
    let p_jet = x.p.iter().zip(&x.q).map(|(p, q)| p - z * q).collect();
    Ok(JetPoint {
        q_jet: x.q.clone(),
        p_jet,
        z,
    })
}

/// `(q, p_J, z) ↦ (p_J + z·q, q)`.
pub fn psi_inverse(y: &JetPoint) -> UnitCotangentPoint {
    UnitCotangentPoint {
        p: y.p_jet.iter().zip(&y.q_jet).map(|(p, q)| p + y.z * q).collect(),
        q: y.q_jet.clone(),
    }
}

fn random_unit<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r = norm(&v);
        if r > 0.1 && r <= 1.0 {
            return v.into_iter().map(|x| x / r).collect();
        }
    }
}

/// Largest `|Ψ*(dz − λ)(v) − (q·dp)(v)|` over `trials` random points and
/// tangent vectors, with `Ψ_*v` taken by central differences of step `step`.
pub fn check_contact_pullback(n: usize, trials: usize, step: f64) -> f64 {
    check_contact_pullback_seeded(n, trials, step, 0)
}

pub fn check_contact_pullback_seeded(n: usize, trials: usize, step: f64, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let p: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let q = random_unit(&mut rng, n);
        let dp: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let along = dot(&raw, &q);
        let dq: Vec<f64> = raw.iter().zip(&q).map(|(r, q)| r - along * q).collect();

        let at = |s: f64| {
            let qs: Vec<f64> = q.iter().zip(&dq).map(|(q, d)| q + s * d).collect();
            let r = norm(&qs);
            psi(&UnitCotangentPoint {
                p: p.iter().zip(&dp).map(|(p, d)| p + s * d).collect(),
                q: qs.into_iter().map(|x| x / r).collect(),
            })
            .expect("normalized")
        };
        let (plus, minus, here) = (at(step), at(-step), at(0.0));
        let dz = (plus.z - minus.z) / (2.0 * step);
        let dqj: Vec<f64> = plus
            .q_jet
            .iter()
            .zip(&minus.q_jet)
            .map(|(a, b)| (a - b) / (2.0 * step))
            .collect();
        let pulled = dz - dot(&here.p_jet, &dqj);
        worst = worst.max((pulled - dot(&q, &dp)).abs());
    }
    worst
}

/// Least-squares slope of `log(deviation)` against `log(step)`.
pub fn pullback_convergence_order(n: usize, trials: usize, steps: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = steps
        .iter()
        .map(|&h| (h.ln(), check_contact_pullback(n, trials, h).ln()))
        .collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// A closed immersed plane curve given by samples; the last sample connects
/// back to the first.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurve {
    pub params: Vec<f64>,
    pub points: Vec<[f64; 2]>,
    pub tangents: Vec<[f64; 2]>,
}

impl PlaneCurve {
    /// Samples with parameters `0, 1, …`; unit tangents by central
    /// differences.
    pub fn from_points(points: Vec<[f64; 2]>) -> Result<Self, ConormalError> {
        let n = points.len();
        if n < 4 {
            return Err(ConormalError::TooFewSamples(n));
        }
        let mut tangents = Vec::with_capacity(n);
        for i in 0..n {
            let a = points[(i + n - 1) % n];
            let b = points[(i + 1) % n];
            let d = [b[0] - a[0], b[1] - a[1]];
            let r = d[0].hypot(d[1]);
            if r == 0.0 || points[i] == points[(i + 1) % n] {
                return Err(ConormalError::NotImmersed(i));
            }
            tangents.push([d[0] / r, d[1] / r]);
        }
        Ok(PlaneCurve {
            params: (0..n).map(|i| i as f64).collect(),
            points,
            tangents,
        })
    }

    /// `n` samples of `γ` on `[0, 2π)` with exact derivative `dγ`.
    pub fn from_fn(
        n: usize,
        gamma: impl Fn(f64) -> [f64; 2],
        dgamma: impl Fn(f64) -> [f64; 2],
    ) -> Result<Self, ConormalError> {
        if n < 4 {
            return Err(ConormalError::TooFewSamples(n));
        }
        let params: Vec<f64> = (0..n).map(|i| TAU * i as f64 / n as f64).collect();
        let mut tangents = Vec::with_capacity(n);
        for (i, &s) in params.iter().enumerate() {
            let d = dgamma(s);
            let r = d[0].hypot(d[1]);
            if r < 1e-300 {
                return Err(ConormalError::NotImmersed(i));
            }
            tangents.push([d[0] / r, d[1] / r]);
        }
        Ok(PlaneCurve {
            points: params.iter().map(|&s| gamma(s)).collect(),
            params,
            tangents,
        })
    }

    pub fn ellipse(a: f64, b: f64, n: usize) -> Self {
        Self::from_fn(n, |s| [a * s.cos(), b * s.sin()], |s| [-a * s.sin(), b * s.cos()])
            .expect("ellipse is immersed")
    }

    pub fn circle(center: [f64; 2], r: f64, n: usize) -> Self {
        Self::from_fn(
            n,
            |s| [center[0] + r * s.cos(), center[1] + r * s.sin()],
            |s| [-r * s.sin(), r * s.cos()],
        )
        .expect("circle is immersed")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The same curve moved by `v`.
    pub fn translated(&self, v: [f64; 2]) -> Self {
        PlaneCurve {
            points: self.points.iter().map(|p| [p[0] + v[0], p[1] + v[1]]).collect(),
            ..self.clone()
        }
    }

    /// The same curve rotated by `phi` about the origin.
    pub fn rotated(&self, phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        let rot = |p: &[f64; 2]| [c * p[0] - s * p[1], s * p[0] + c * p[1]];
        PlaneCurve {
            params: self.params.clone(),
            points: self.points.iter().map(rot).collect(),
            tangents: self.tangents.iter().map(rot).collect(),
        }
    }
}

/// One sample per line, `x y`; `#` comments and blank lines skipped.
pub fn parse_curve(text: &str) -> Result<PlaneCurve, ConormalError> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ConormalError::Parse {
                line: i + 1,
                msg: format!("expected `x y`, got {} fields", fields.len()),
            });
        }
        let mut xy = [0.0; 2];
        for (k, f) in fields.iter().enumerate() {
            xy[k] = f
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| ConormalError::Parse {
                    line: i + 1,
                    msg: format!("bad number `{f}`"),
                })?;
        }
        points.push(xy);
    }
    PlaneCurve::from_points(points)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrontPoint {
    /// Conormal direction in `[0, 2π)`.
    pub theta: f64,
    pub z: f64,
    /// The `T*S¹` coordinate.
    pub p: f64,
    /// `0` for the left normal `rot90(γ′)`, `1` for its negative.
    pub sheet: u8,
    /// Index of the curve sample.
    pub sample: usize,
}

/// Both sheets of the conormal front, sheet 0 first, each in sample order.
#[derive(Clone, Debug, PartialEq)]
pub struct ConormalFront {
    pub params: Vec<f64>,
    pub points: Vec<FrontPoint>,
}

impl ConormalFront {
    pub fn sheet(&self, k: u8) -> &[FrontPoint] {
        let n = self.params.len();
        &self.points[k as usize * n..(k as usize + 1) * n]
    }

    /// Lines `theta z p sheet`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for fp in &self.points {
            s.push_str(&format!("{:.12} {:.12} {:.12} {}\n", fp.theta, fp.z, fp.p, fp.sheet));
        }
        s
    }
}

fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

pub fn conormal_front(c: &PlaneCurve) -> Result<ConormalFront, ConormalError> {
    let n = c.len();
    if n < 4 {
        return Err(ConormalError::TooFewSamples(n));
    }
    let mut points = Vec::with_capacity(2 * n);
    for sheet in 0..2u8 {
        let sign = if sheet == 0 { 1.0 } else { -1.0 };
        for i in 0..n {
            let t = c.tangents[i];
            if t[0].hypot(t[1]) < 0.5 {
                return Err(ConormalError::NotImmersed(i));
            }
            let nv = [-sign * t[1], sign * t[0]];
            let perp = [-nv[1], nv[0]];
            let g = c.points[i];
            points.push(FrontPoint {
                theta: wrap_angle(nv[1].atan2(nv[0])),
                z: g[0] * nv[0] + g[1] * nv[1],
                p: g[0] * perp[0] + g[1] * perp[1],
                sheet,
                sample: i,
            });
        }
    }
    Ok(ConormalFront {
        params: c.params.clone(),
        points,
    })
}

fn angle_diff(a: f64, b: f64) -> f64 {
    (b - a + PI).rem_euclid(TAU) - PI
}

/// Front cusps: samples where `θ` reverses direction along a sheet.
pub fn front_cusps(f: &ConormalFront) -> Vec<(u8, usize)> {
    let mut out = Vec::new();
    for sheet in 0..2u8 {
        let pts = f.sheet(sheet);
        let n = pts.len();
        let d: Vec<f64> = (0..n)
            .map(|i| angle_diff(pts[i].theta, pts[(i + 1) % n].theta))
            .collect();
        for i in 0..n {
            let (a, b) = (d[i], d[(i + 1) % n]);
            if a * b < 0.0 {
                out.push((sheet, (i + 1) % n));
            }
        }
    }
    out
}

/// A Reeb chord, once per double normal. `s1` is the upper end.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericChord {
    pub s1: f64,
    pub s2: f64,
    pub theta: f64,
    pub action: f64,
}

impl NumericChord {
    pub fn to_line(&self) -> String {
        format!("{:.9} {:.9} {:.9} {:.9}", self.s1, self.s2, self.theta, self.action)
    }
}

/// A front segment between consecutive samples of one sheet, unwrapped in θ.
struct Segment {
    sheet: u8,
    i: usize,
    theta: [f64; 2],
    p: [f64; 2],
    z: [f64; 2],
    s: [f64; 2],
}

fn segments(f: &ConormalFront) -> Vec<Segment> {
    let n = f.params.len();
    // parameter span of the closing segment
    let period = if n > 1 {
        f.params[n - 1] - f.params[0] + (f.params[n - 1] - f.params[0]) / (n - 1) as f64
    } else {
        1.0
    };
    let mut out = Vec::with_capacity(2 * n);
    for sheet in 0..2u8 {
        let pts = f.sheet(sheet);
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let s_b = if i + 1 == n { f.params[0] + period } else { f.params[i + 1] };
            out.push(Segment {
                sheet,
                i,
                theta: [a.theta, a.theta + angle_diff(a.theta, b.theta)],
                p: [a.p, b.p],
                z: [a.z, b.z],
                s: [f.params[i], s_b],
            });
        }
    }
    out
}

/// Intersection of two segments in the `(θ, p)` plane, as parameters
/// `(u, v) ∈ [0, 1]²`; `None` when disjoint, `Some(Err)` when collinear and
/// overlapping.
fn intersect(a: &Segment, b: &Segment, shift: f64, eps: f64) -> Option<Result<(f64, f64), ()>> {
    let (ax, ay) = (a.theta[0], a.p[0]);
    let (dx, dy) = (a.theta[1] - a.theta[0], a.p[1] - a.p[0]);
    let (bx, by) = (b.theta[0] + shift, b.p[0]);
    let (ex, ey) = (b.theta[1] - b.theta[0], b.p[1] - b.p[0]);
    let den = dx * ey - dy * ex;
    let (wx, wy) = (bx - ax, by - ay);
    let scale = (dx.hypot(dy) * ex.hypot(ey)).max(1e-300);
    if den.abs() <= 1e-12 * scale {
        // parallel: collinear if b's start lies on a's line
        let off = (wx * dy - wy * dx).abs() / dx.hypot(dy).max(1e-300);
        if off > eps {
            return None;
        }
        let len2 = (dx * dx + dy * dy).max(1e-300);
        let t0 = (wx * dx + wy * dy) / len2;
        let t1 = ((wx + ex) * dx + (wy + ey) * dy) / len2;
        let (lo, hi) = (t0.min(t1), t0.max(t1));
        return (hi >= 0.0 && lo <= 1.0).then_some(Err(()));
    }
    let u = (wx * ey - wy * ex) / den;
    let v = (wx * dy - wy * dx) / den;
    ((0.0..=1.0).contains(&u) && (0.0..=1.0).contains(&v)).then_some(Ok((u, v)))
}

fn raw_chords(f: &ConormalFront, tol: f64) -> Result<Vec<NumericChord>, ConormalError> {
    let segs = segments(f);
    let n = f.params.len();
    let bins = (n / 8).clamp(16, 1 << 14);
    let width = TAU / bins as f64;
    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); bins];
    for (k, s) in segs.iter().enumerate() {
        let lo = s.theta[0].min(s.theta[1]);
        let hi = s.theta[0].max(s.theta[1]);
        let first = (lo / width).floor() as i64;
        let last = (hi / width).floor() as i64;
        for b in first..=last.min(first + bins as i64 - 1) {
            bucket[b.rem_euclid(bins as i64) as usize].push(k);
        }
    }

    let start = f.params[0];
    let period = (f.params[n - 1] - start) * n as f64 / (n - 1) as f64;
    let wrap_param = |s: f64| {
        let r = (s - start).rem_euclid(period);
        start + if r >= period { 0.0 } else { r }
    };
    let mut found = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for list in &bucket {
        for (x, &ka) in list.iter().enumerate() {
            for &kb in &list[x + 1..] {
                let (a, b) = (&segs[ka], &segs[kb]);
                if a.sheet == b.sheet && (a.i.abs_diff(b.i) <= 1 || a.i.abs_diff(b.i) == n - 1) {
                    continue;
                }
                if !seen.insert((ka, kb)) {
                    continue;
                }
                for shift in [-TAU, 0.0, TAU] {
                    match intersect(a, b, shift, tol) {
                        None => {}
                        Some(Err(())) => {
                            let za = (a.z[0] + a.z[1]) / 2.0;
                            let zb = (b.z[0] + b.z[1]) / 2.0;
                            if (za - zb).abs() > 10.0 * tol {
                                return Err(ConormalError::NotChordGeneric(format!(
                                    "front segments overlap near θ = {:.6}",
                                    wrap_angle(a.theta[0])
                                )));
                            }
                        }
                        Some(Ok((u, v))) => {
                            let za = a.z[0] + u * (a.z[1] - a.z[0]);
                            let zb = b.z[0] + v * (b.z[1] - b.z[0]);
                            if (za - zb).abs() <= 10.0 * tol {
                                continue;
                            }
                            let sa = wrap_param(a.s[0] + u * (a.s[1] - a.s[0]));
                            let sb = wrap_param(b.s[0] + v * (b.s[1] - b.s[0]));
                            let theta = wrap_angle(a.theta[0] + u * (a.theta[1] - a.theta[0]));
                            let (s1, s2) = if za > zb { (sa, sb) } else { (sb, sa) };
                            found.push(NumericChord {
                                s1,
                                s2,
                                theta,
                                action: (za - zb).abs(),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(found)
}

/// Merges detections of one double normal: the two co-orientations, and
/// hits at shared segment endpoints.
fn dedup_chords(mut raw: Vec<NumericChord>, period: f64, spacing: f64) -> Vec<NumericChord> {
    let close = |a: f64, b: f64| {
        let d = (a - b).rem_euclid(period);
        d.min(period - d) <= 3.0 * spacing
    };
    raw.sort_by(|a, b| a.action.total_cmp(&b.action));
    let mut out: Vec<NumericChord> = Vec::new();
    for c in raw {
        let dup = out.iter().any(|o| {
            (o.action - c.action).abs() <= 1e-6 * (1.0 + c.action)
                && ((close(o.s1, c.s1) && close(o.s2, c.s2)) || (close(o.s1, c.s2) && close(o.s2, c.s1)))
        });
        if !dup {
            out.push(c);
        }
    }
    // canonical co-orientation: θ in [0, π)
    for c in &mut out {
        if c.theta >= PI {
            c.theta -= PI;
            std::mem::swap(&mut c.s1, &mut c.s2);
        }
    }
    out.sort_by(|a, b| a.s1.total_cmp(&b.s1).then(a.s2.total_cmp(&b.s2)));
    out
}

fn subsample(f: &ConormalFront, step: usize) -> ConormalFront {
    let n = f.params.len();
    let keep: Vec<usize> = (0..n).step_by(step).collect();
    let mut points = Vec::with_capacity(2 * keep.len());
    for sheet in 0..2u8 {
        let pts = f.sheet(sheet);
        points.extend(keep.iter().map(|&i| pts[i]));
    }
    ConormalFront {
        params: keep.iter().map(|&i| f.params[i]).collect(),
        points,
    }
}

/// Reeb chords of the lift, one per double normal, sorted by `s1`.
///
/// A one-parameter family of chords (the front's sheets overlapping, or the
/// count growing as the sampling is refined) is an error, not a list.
pub fn reeb_chords_numeric(f: &ConormalFront, tol: f64) -> Result<Vec<NumericChord>, ConormalError> {
    let n = f.params.len();
    if n < 4 {
        return Err(ConormalError::TooFewSamples(n));
    }
    let period = (f.params[n - 1] - f.params[0]) * n as f64 / (n - 1) as f64;
    let spacing = period / n as f64;
    let fine = dedup_chords(raw_chords(f, tol)?, period, spacing);

    if n >= 64 {
        let coarse_front = subsample(f, 4);
        let coarse = dedup_chords(raw_chords(&coarse_front, tol)?, period, 4.0 * spacing);
        if fine.len() > coarse.len() + 2 || fine.len() > n / 4 {
            return Err(ConormalError::NotChordGeneric(format!(
                "chord count grows under refinement ({} → {})",
                coarse.len(),
                fine.len()
            )));
        }
    }
    Ok(fine)
}

/// Double normals by a dense sweep over sample pairs, for cross-checks:
/// grid cells `[i, i+1] × [j, j+1]` on which both `⟨γ_j − γ_i, γ′_i⟩` and
/// `⟨γ_j − γ_i, γ′_j⟩` change sign, merged when adjacent. `O(n²)`.
pub fn double_normals_bruteforce(c: &PlaneCurve) -> Vec<(usize, usize, f64)> {
    let n = c.len();
    let defect = |i: usize, j: usize| {
        let (i, j) = (i % n, j % n);
        let d = [c.points[j][0] - c.points[i][0], c.points[j][1] - c.points[i][1]];
        let ti = c.tangents[i];
        let tj = c.tangents[j];
        (d[0] * ti[0] + d[1] * ti[1], d[0] * tj[0] + d[1] * tj[1])
    };
    let straddles = |v: [f64; 4]| {
        let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        lo <= 0.0 && hi >= 0.0
    };
    let mut hits: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let corners = [defect(i, j), defect(i + 1, j), defect(i, j + 1), defect(i + 1, j + 1)];
            if straddles(corners.map(|x| x.0)) && straddles(corners.map(|x| x.1)) {
                hits.push((i, j));
            }
        }
    }
    let mut out: Vec<(usize, usize, f64)> = Vec::new();
    for (i, j) in hits {
        let near = |a: usize, b: usize| a.abs_diff(b).min(n - a.abs_diff(b)) <= 2;
        if out.iter().any(|&(a, b, _)| near(a, i) && near(b, j)) {
            continue;
        }
        let d = [c.points[j][0] - c.points[i][0], c.points[j][1] - c.points[i][1]];
        out.push((i, j, d[0].hypot(d[1])));
    }
    out
}
