//! Computable invariants of a DGA up to stable tame isomorphism: graded
//! augmentations into 𝔽_p, and the linearized homology of each.
//!
//! Gradings are integers when `rot = 0` and residues mod `2·|rot|`
//! otherwise; `t` is sent to a unit of 𝔽_p, which is only graded in the
//! second reading.

use std::collections::BTreeMap;
use std::fmt;
use std::thread;

use thiserror::Error;

use crate::ncalg::coeff::mod_inverse;
use crate::ncalg::{is_prime, Dga};

/// Default cap on the number of assignments tried.
pub const AUG_BUDGET: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("t = {t} is not a unit mod {p}")]
    NotAUnit { p: u32, t: u64 },
    #[error("DGA over characteristic {dga} cannot be read over F_{p}")]
    Characteristic { dga: u32, p: u32 },
    #[error("augmentation search needs {needed} assignments, budget is {budget}")]
    Budget { needed: u128, budget: u64 },
    #[error("not an augmentation: ε∂{0} ≠ 0")]
    NotAugmentation(String),
    #[error("linearized differential does not square to zero")]
    LinearizedDSquared,
}

/// A graded augmentation `ε: A → 𝔽_p` with `ε(t) = t_value`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Augmentation {
    pub p: u32,
    pub t_value: u64,
    /// `ε(c)` per generator, in generator order.
    pub values: Vec<u64>,
}

/// Dimensions of linearized homology, by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PoincarePolynomial {
    pub coefficients: BTreeMap<i64, u64>,
}

impl PoincarePolynomial {
    pub fn coefficient(&self, degree: i64) -> u64 {
        self.coefficients.get(&degree).copied().unwrap_or(0)
    }

    /// Total dimension (value at λ = 1).
    pub fn total(&self) -> u64 {
        self.coefficients.values().sum()
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(d, c)| format!("{c}·λ^{d}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `1` over 𝔽₂, `−1` otherwise.
pub fn default_t_value(p: u32) -> u64 {
    if p == 2 {
        1
    } else {
        p as u64 - 1
    }
}

/// Grading of generator `g`, reduced mod `2·|rot|` when `rot ≠ 0`.
pub fn degree(dga: &Dga, g: usize) -> i64 {
    reduce_degree(dga, dga.generators()[g].grading)
}

fn reduce_degree(dga: &Dga, k: i64) -> i64 {
    match dga.rot() {
        0 => k,
        r => k.rem_euclid(2 * r.abs()),
    }
}

fn check_field(dga: &Dga, p: u32, t_value: u64) -> Result<(), InvariantError> {
    if !is_prime(p) {
        return Err(InvariantError::NotPrime(p));
    }
    if dga.char() != 0 && dga.char() != p {
        return Err(InvariantError::Characteristic { dga: dga.char(), p });
    }
    if mod_inverse(t_value % p as u64, p as u64).is_none() {
        return Err(InvariantError::NotAUnit { p, t: t_value });
    }
    Ok(())
}

/// One term of `ε(∂c)` as a function of the degree-0 values: a coefficient
/// in 𝔽_p times a product of free variables.
struct Term {
    coeff: u64,
    vars: Vec<usize>,
}

/// The equations `ε(∂c) = 0`, in the free (degree-0) variables.
fn constraints(dga: &Dga, p: u32, t_value: u64, var_of: &[Option<usize>]) -> Vec<Vec<Term>> {
    let mut out = Vec::new();
    for g in 0..dga.len() {
        let mut terms = Vec::new();
        for (w, c) in dga.diff(g).terms() {
            let vars: Option<Vec<usize>> = w.letters().iter().map(|&l| var_of[l as usize]).collect();
            let Some(vars) = vars else { continue };
            let coeff = c.eval_mod(p, t_value);
            if coeff != 0 {
                terms.push(Term { coeff, vars });
            }
        }
        if !terms.is_empty() {
            out.push(terms);
        }
    }
    out
}

fn satisfies(eqs: &[Vec<Term>], values: &[u64], p: u64) -> bool {
    eqs.iter().all(|terms| {
        terms
            .iter()
            .fold(0, |acc, t| (acc + t.vars.iter().fold(t.coeff, |x, &v| x * values[v] % p)) % p)
            == 0
    })
}

/// Every graded augmentation, by exhaustive search with the default budget.
pub fn enumerate_augmentations(dga: &Dga, p: u32, t_value: u64) -> Result<Vec<Augmentation>, InvariantError> {
    enumerate_augmentations_with_budget(dga, p, t_value, AUG_BUDGET)
}

/// Every graded augmentation, sorted by values. The search runs over all
/// `p^k` assignments to the `k` degree-0 generators and refuses to start
/// when that exceeds `budget`.
pub fn enumerate_augmentations_with_budget(
    dga: &Dga,
    p: u32,
    t_value: u64,
    budget: u64,
) -> Result<Vec<Augmentation>, InvariantError> {
    check_field(dga, p, t_value)?;
    let t_value = t_value % p as u64;
    let free: Vec<usize> = (0..dga.len()).filter(|&g| degree(dga, g) == 0).collect();
    let needed = (p as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(InvariantError::Budget { needed, budget });
    }
    let mut var_of = vec![None; dga.len()];
    for (i, &g) in free.iter().enumerate() {
        var_of[g] = Some(i);
    }
    let eqs = constraints(dga, p, t_value, &var_of);
    let p64 = p as u64;
    let k = free.len();

    // split on the first variable's value; each chunk counts the rest
    // lexicographically, so concatenating chunks keeps the order
    let search = |first: Option<u64>| {
        let mut found = Vec::new();
        let mut vals = vec![0u64; k];
        let start = usize::from(first.is_some());
        if let Some(v) = first {
            vals[0] = v;
        }
        loop {
            if satisfies(&eqs, &vals, p64) {
                found.push(vals.clone());
            }
            // odometer over vals[start..], last variable fastest
            let mut i = k;
            loop {
                if i == start {
                    return found;
                }
                i -= 1;
                vals[i] += 1;
                if vals[i] < p64 {
                    break;
                }
                vals[i] = 0;
            }
        }
    };
    let solutions: Vec<Vec<u64>> = if k > 0 && needed >= 1 << 16 {
        thread::scope(|s| {
            let handles: Vec<_> = (0..p64).map(|v| s.spawn(move || search(Some(v)))).collect();
            handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
        })
    } else {
        search(None)
    };

    Ok(solutions
        .into_iter()
        .map(|sol| {
            let mut values = vec![0; dga.len()];
            for (i, &g) in free.iter().enumerate() {
                values[g] = sol[i];
            }
            Augmentation { p, t_value, values }
        })
        .collect())
}

/// Checks `ε(∂c) = 0` for every generator, and gradedness.
pub fn check_augmentation(dga: &Dga, aug: &Augmentation) -> Result<(), InvariantError> {
    check_field(dga, aug.p, aug.t_value)?;
    let p = aug.p as u64;
    for g in 0..dga.len() {
        if aug.values[g] % p != 0 && degree(dga, g) != 0 {
            return Err(InvariantError::NotAugmentation(dga.generators()[g].name.clone()));
        }
        let mut acc = 0;
        for (w, c) in dga.diff(g).terms() {
            let x = w
                .letters()
                .iter()
                .fold(c.eval_mod(aug.p, aug.t_value), |x, &l| x * (aug.values[l as usize] % p) % p);
            acc = (acc + x) % p;
        }
        if acc != 0 {
            return Err(InvariantError::NotAugmentation(dga.generators()[g].name.clone()));
        }
    }
    Ok(())
}

/// The linearized differential `∂₁^ε` as a matrix: `m[r][c]` is the
/// coefficient of generator `r` in `∂₁^ε(c)`.
pub fn linearized_differential(dga: &Dga, aug: &Augmentation) -> Vec<Vec<u64>> {
    let p = aug.p as u64;
    let n = dga.len();
    let eps = |l: u32| aug.values[l as usize] % p;
    let mut m = vec![vec![0u64; n]; n];
    for c in 0..n {
        for (w, coeff) in dga.diff(c).terms() {
            let k = coeff.eval_mod(aug.p, aug.t_value);
            if k == 0 {
                continue;
            }
            let letters = w.letters();
            for (i, &r) in letters.iter().enumerate() {
                let rest = letters
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(k, |x, (_, &l)| x * eps(l) % p);
                m[r as usize][c] = (m[r as usize][c] + rest) % p;
            }
        }
    }
    m
}

fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p).unwrap();
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for j in 0..cols {
                    let sub = f * rows[rank][j] % p;
                    rows[r][j] = (rows[r][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Poincaré polynomial of the linearized homology `H(A, ∂₁^ε)`.
pub fn linearized_homology(dga: &Dga, aug: &Augmentation) -> Result<PoincarePolynomial, InvariantError> {
    check_augmentation(dga, aug)?;
    let p = aug.p as u64;
    let n = dga.len();
    let m = linearized_differential(dga, aug);

    for i in 0..n {
        for j in 0..n {
            let x = (0..n).fold(0, |acc, k| (acc + m[i][k] * m[k][j]) % p);
            if x != 0 {
                return Err(InvariantError::LinearizedDSquared);
            }
        }
    }

    let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for g in 0..n {
        by_degree.entry(degree(dga, g)).or_default().push(g);
    }
    // rank of ∂₁ on each degree
    let ranks: BTreeMap<i64, usize> = by_degree
        .iter()
        .map(|(&k, cols)| {
            let rows: Vec<Vec<u64>> = (0..n).map(|r| cols.iter().map(|&c| m[r][c]).collect()).collect();
            (k, rank(rows, p))
        })
        .collect();
    let mut coefficients = BTreeMap::new();
    for (&k, cols) in &by_degree {
        let up = reduce_degree(dga, k + 1);
        let dim = cols.len() - ranks[&k] - ranks.get(&up).copied().unwrap_or(0);
        if dim > 0 {
            coefficients.insert(k, dim as u64);
        }
    }
    Ok(PoincarePolynomial { coefficients })
}

/// Linearized Poincaré polynomials over all augmentations, sorted.
pub fn polynomial_multiset(dga: &Dga, augs: &[Augmentation]) -> Result<Vec<PoincarePolynomial>, InvariantError> {
    let mut out = augs
        .iter()
        .map(|a| linearized_homology(dga, a))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Augmentation counts that differ after normalization by `p^{χ*/2}`
    /// (`χ*` is `None` when `rot ≠ 0`; then only zero vs. nonzero counts).
    AugmentationCount {
        left: usize,
        right: usize,
        left_chi: Option<i64>,
        right_chi: Option<i64>,
    },
    /// Distinct linearized Poincaré polynomials, each side sorted.
    Polynomials {
        left: Vec<PoincarePolynomial>,
        right: Vec<PoincarePolynomial>,
    },
}

/// Never "equivalent": the invariants here are incomplete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Distinguished(Witness),
    Inconclusive,
}

impl Verdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(self, Verdict::Distinguished(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Inconclusive => write!(f, "INCONCLUSIVE"),
            Verdict::Distinguished(Witness::AugmentationCount {
                left,
                right,
                left_chi,
                right_chi,
            }) => {
                let show = |n: &usize, chi: &Option<i64>| match chi {
                    Some(c) => format!("{n} (chi* {c})"),
                    None => n.to_string(),
                };
                write!(
                    f,
                    "DISTINGUISHED augmentation count {} vs {}",
                    show(left, left_chi),
                    show(right, right_chi)
                )
            }
            Verdict::Distinguished(Witness::Polynomials { left, right }) => {
                let show = |v: &[PoincarePolynomial]| {
                    v.iter().map(|x| format!("[{x}]")).collect::<Vec<_>>().join(" ")
                };
                write!(f, "DISTINGUISHED linearized homology {} vs {}", show(left), show(right))
            }
        }
    }
}

/// `χ* = Σ_{k≥0} (−1)^k r_k + Σ_{k<0} (−1)^{k+1} r_k`, with `r_k` the number
/// of generators of degree `k`; `None` when `rot ≠ 0`. Stabilization in
/// degrees `(0, −1)` raises it by 2 and multiplies the augmentation count
/// by `p`; other stabilizations leave both alone.
pub fn chi_star(dga: &Dga) -> Option<i64> {
    if dga.rot() != 0 {
        return None;
    }
    Some(
        dga.generators()
            .iter()
            .map(|g| {
                let k = g.grading;
                let s = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                if k >= 0 {
                    s
                } else {
                    -s
                }
            })
            .sum(),
    )
}

/// Whether `n_a · p^{−χ_a/2} ≠ n_b · p^{−χ_b/2}`, decided exactly; `None`
/// when the powers overflow.
fn normalized_counts_differ(na: usize, chi_a: i64, nb: usize, chi_b: i64, p: u32) -> Option<bool> {
    // n_a² · p^{χ_b} vs n_b² · p^{χ_a}, shifted to nonnegative exponents
    let m = chi_a.min(chi_b);
    let side = |n: usize, e: i64| -> Option<u128> {
        let pow = (p as u128).checked_pow(u32::try_from(e - m).ok()?)?;
        (n as u128).checked_mul(n as u128)?.checked_mul(pow)
    };
    Some(side(na, chi_b)? != side(nb, chi_a)?)
}

/// Compares the sets of linearized Poincaré polynomials, then normalized
/// augmentation counts, over 𝔽_p with `t ↦ t_value`. Both are unchanged by
/// stable tame isomorphism; raw counts and polynomial multiplicities are
/// not (a degree-0 stabilization multiplies them by `p`).
pub fn compare_with(a: &Dga, b: &Dga, p: u32, t_value: u64, budget: u64) -> Result<Verdict, InvariantError> {
    let aa = enumerate_augmentations_with_budget(a, p, t_value, budget)?;
    let ab = enumerate_augmentations_with_budget(b, p, t_value, budget)?;
    let mut pa = polynomial_multiset(a, &aa)?;
    let mut pb = polynomial_multiset(b, &ab)?;
    pa.dedup();
    pb.dedup();
    if pa != pb {
        return Ok(Verdict::Distinguished(Witness::Polynomials { left: pa, right: pb }));
    }
    let (ca, cb) = (chi_star(a), chi_star(b));
    let differ = match (ca, cb) {
        (Some(x), Some(y)) => normalized_counts_differ(aa.len(), x, ab.len(), y, p).unwrap_or(false),
        _ => (aa.len() == 0) != (ab.len() == 0),
    };
    if differ {
        return Ok(Verdict::Distinguished(Witness::AugmentationCount {
            left: aa.len(),
            right: ab.len(),
            left_chi: ca,
            right_chi: cb,
        }));
    }
    Ok(Verdict::Inconclusive)
}

pub fn compare(a: &Dga, b: &Dga, p: u32) -> Result<Verdict, InvariantError> {
    compare_with(a, b, p, default_t_value(p), AUG_BUDGET)
}

/// Report lines: `augs p=… t=… count=…`, then one `linpoly` line per
/// augmentation.
pub fn report(dga: &Dga, p: u32, t_value: u64, budget: u64) -> Result<String, InvariantError> {
    let augs = enumerate_augmentations_with_budget(dga, p, t_value, budget)?;
    let mut s = format!("augs p={p} t={} count={}\n", t_value % p as u64, augs.len());
    for (i, a) in augs.iter().enumerate() {
        s.push_str(&format!("linpoly p={p} aug={i} = {}\n", linearized_homology(dga, a)?));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{stabilize, ChordGenerator, Element, Word};
    use num_rational::Ratio;

    fn unknot() -> Dga {
        let mut d = Element::one(0);
        d.add_monomial(Word::empty(), 1, 1);
        Dga::new(vec![ChordGenerator::new("a", 1, Ratio::from_integer(3))], 0, 0, vec![d]).unwrap()
    }

    #[test]
    fn unknot_has_the_zero_augmentation() {
        let augs = enumerate_augmentations(&unknot(), 2, 1).unwrap();
        assert_eq!(augs.len(), 1);
        assert_eq!(augs[0].values, vec![0]);
        // 1 + t ≠ 0 at t = −1 in 𝔽₃? 1 + 2 = 0, so one again
        assert_eq!(enumerate_augmentations(&unknot(), 3, 2).unwrap().len(), 1);
        assert_eq!(enumerate_augmentations(&unknot(), 3, 1).unwrap().len(), 0);
        let h = linearized_homology(&unknot(), &augs[0]).unwrap();
        assert_eq!(h.to_string(), "1·λ^1");
    }

    #[test]
    fn zero_differential_counts_generators() {
        let gens = vec![
            ChordGenerator::new("x", 0, Ratio::from_integer(1)),
            ChordGenerator::new("y", 0, Ratio::from_integer(2)),
            ChordGenerator::new("z", 2, Ratio::from_integer(3)),
        ];
        let dga = Dga::new(gens, 0, 0, vec![Element::zero(0); 3]).unwrap();
        let augs = enumerate_augmentations(&dga, 3, 2).unwrap();
        assert_eq!(augs.len(), 9);
        for a in &augs {
            assert_eq!(linearized_homology(&dga, a).unwrap().to_string(), "2·λ^0 + 1·λ^2");
        }
    }

    #[test]
    fn stabilization_scales_counts() {
        let base = unknot();
        let n = enumerate_augmentations(&base, 2, 1).unwrap().len();
        assert_eq!(enumerate_augmentations(&stabilize(&base, 3), 2, 1).unwrap().len(), n);
        assert_eq!(enumerate_augmentations(&stabilize(&base, 1), 2, 1).unwrap().len(), n);
        assert_eq!(enumerate_augmentations(&stabilize(&base, 0), 3, 2).unwrap().len(), 3 * n);
    }

    #[test]
    fn budget_and_field_errors() {
        let gens: Vec<_> = (0..25)
            .map(|i| ChordGenerator::new(format!("x{i}"), 0, Ratio::from_integer(i + 1)))
            .collect();
        let dga = Dga::new(gens, 0, 0, vec![Element::zero(0); 25]).unwrap();
        assert!(matches!(
            enumerate_augmentations(&dga, 2, 1),
            Err(InvariantError::Budget { .. })
        ));
        assert!(matches!(enumerate_augmentations(&unknot(), 4, 1), Err(InvariantError::NotPrime(4))));
        assert!(matches!(
            enumerate_augmentations(&unknot(), 5, 0),
            Err(InvariantError::NotAUnit { .. })
        ));
    }

    #[test]
    fn parallel_search_matches_serial() {
        let gens: Vec<_> = (0..17)
            .map(|i| ChordGenerator::new(format!("x{i}"), 0, Ratio::from_integer(i + 1)))
            .collect();
        let dga = Dga::new(gens, 0, 0, vec![Element::zero(0); 17]).unwrap();
        let augs = enumerate_augmentations(&dga, 2, 1).unwrap();
        assert_eq!(augs.len(), 1 << 17);
        assert!(augs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn comparing_a_dga_with_itself_is_inconclusive() {
        assert_eq!(compare(&unknot(), &unknot(), 2).unwrap(), Verdict::Inconclusive);
        // raw counts 1 vs 2, equal after normalization
        let v = compare(&unknot(), &stabilize(&unknot(), 0), 2).unwrap();
        assert_eq!(v, Verdict::Inconclusive);
    }
}
