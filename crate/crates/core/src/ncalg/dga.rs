use std::collections::HashSet;

use num_rational::Ratio;

use super::coeff::is_prime;
use super::element::{Element, Word};
use super::AlgebraError;

pub type Action = Ratio<i64>;

/// A Reeb chord viewed as an algebra generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordGenerator {
    pub name: String,
    pub grading: i64,
    pub action: Action,
}

impl ChordGenerator {
    pub fn new(name: impl Into<String>, grading: i64, action: Action) -> Self {
        ChordGenerator {
            name: name.into(),
            grading,
            action,
        }
    }
}

/// A semi-free differential graded algebra on finitely many chord generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dga {
    generators: Vec<ChordGenerator>,
    rot: i64,
    char: u32,
    diff: Vec<Element>,
}

/// Outcome of [`Dga::check_d_squared`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSquaredReport {
    /// `(generator index, ∂∂g)` for every generator with nonzero residue.
    pub failures: Vec<(usize, Element)>,
}

impl DSquaredReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Grading data of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(i64),
    Mixed,
}

impl Dga {
    /// Builds a DGA, checking the structural invariants that every
    /// construction route must satisfy: unique names, positive actions,
    /// characteristic 0 or prime, and letters that name generators.
    ///
    /// Degree and action filtration are checked separately
    /// ([`Dga::degree_violations`], [`Dga::action_violations`]) because
    /// algebraic moves preserve the former but not the latter.
    pub fn new(
        generators: Vec<ChordGenerator>,
        rot: i64,
        char: u32,
        diff: Vec<Element>,
    ) -> Result<Self, AlgebraError> {
        if char != 0 && !is_prime(char) {
            return Err(AlgebraError::BadCharacteristic(char));
        }
        if diff.len() != generators.len() {
            return Err(AlgebraError::Malformed(format!(
                "{} generators but {} differentials",
                generators.len(),
                diff.len()
            )));
        }
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.name.as_str()) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
            if g.action <= Action::from_integer(0) {
                return Err(AlgebraError::NonPositiveAction(g.name.clone()));
            }
        }
        let n = generators.len() as u32;
        for d in &diff {
            if d.char() != char {
                return Err(AlgebraError::SignatureMismatch {
                    left: char,
                    right: d.char(),
                });
            }
            if let Some(m) = d.max_letter() {
                if m >= n {
                    return Err(AlgebraError::UnknownGenerator(format!("#{m}")));
                }
            }
        }
        Ok(Dga {
            generators,
            rot,
            char,
            diff,
        })
    }

    /// The DGA with no generators.
    pub fn empty(char: u32) -> Self {
        Dga::new(Vec::new(), 0, char, Vec::new()).expect("valid")
    }

    pub fn generators(&self) -> &[ChordGenerator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn rot(&self) -> i64 {
        self.rot
    }

    pub fn char(&self) -> u32 {
        self.char
    }

    pub fn diff(&self, g: usize) -> &Element {
        &self.diff[g]
    }

    pub fn differentials(&self) -> &[Element] {
        &self.diff
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn name(&self, g: u32) -> &str {
        &self.generators[g as usize].name
    }

    /// Grading of `t`: minus twice the rotation number.
    pub fn t_grading(&self) -> i64 {
        -2 * self.rot
    }

    pub fn word_grading(&self, w: &Word) -> i64 {
        w.letters()
            .iter()
            .map(|&g| self.generators[g as usize].grading)
            .sum()
    }

    pub fn word_action(&self, w: &Word) -> Action {
        w.letters()
            .iter()
            .map(|&g| self.generators[g as usize].action)
            .fold(Action::from_integer(0), |a, b| a + b)
    }

    pub fn monomial_grading(&self, w: &Word, t_exp: i32) -> i64 {
        self.word_grading(w) + t_exp as i64 * self.t_grading()
    }

    pub fn homogeneity(&self, x: &Element) -> Homogeneity {
        let mut found = None;
        for (w, k, _) in x.monomials() {
            let d = self.monomial_grading(w, k);
            match found {
                None => found = Some(d),
                Some(e) if e != d => return Homogeneity::Mixed,
                _ => {}
            }
        }
        match found {
            None => Homogeneity::Zero,
            Some(d) => Homogeneity::Homogeneous(d),
        }
    }

    /// Extends the generator differentials to the whole algebra by linearity
    /// and the graded Leibniz rule `∂(vw) = ∂(v)w + (-1)^{|v|} v∂(w)`.
    ///
    /// `t` has even grading, so coefficients never affect the sign.
    pub fn differentiate(&self, x: &Element) -> Element {
        let mut out = Element::zero(self.char);
        for (w, c) in x.terms() {
            let letters = w.letters();
            let mut prefix_grading = 0i64;
            for (i, &g) in letters.iter().enumerate() {
                let dg = &self.diff[g as usize];
                if !dg.is_zero() {
                    let sign = if prefix_grading.rem_euclid(2) == 0 { 1 } else { -1 };
                    let left = Word(letters[..i].to_vec());
                    let right = Word(letters[i + 1..].to_vec());
                    for (dw, dc) in dg.terms() {
                        let word = left.concat(dw).concat(&right);
                        out.add_coeff(word, &dc.mul(c).scale(sign));
                    }
                }
                prefix_grading += self.generators[g as usize].grading;
            }
        }
        out
    }

    /// Same as [`Dga::differentiate`] but rejects letters outside the DGA.
    pub fn try_differentiate(&self, x: &Element) -> Result<Element, AlgebraError> {
        if x.char() != self.char {
            return Err(AlgebraError::SignatureMismatch {
                left: self.char,
                right: x.char(),
            });
        }
        if let Some(m) = x.max_letter() {
            if m as usize >= self.len() {
                return Err(AlgebraError::UnknownGenerator(format!("#{m}")));
            }
        }
        Ok(self.differentiate(x))
    }

    pub fn check_d_squared(&self) -> DSquaredReport {
        let failures = (0..self.len())
            .filter_map(|g| {
                let dd = self.differentiate(&self.diff[g]);
                (!dd.is_zero()).then_some((g, dd))
            })
            .collect();
        DSquaredReport { failures }
    }

    /// Terms of `∂g` whose total grading differs from `|g| - 1`, as
    /// `(generator, word, t-exponent)`.
    pub fn degree_violations(&self) -> Vec<(usize, Word, i32)> {
        let mut out = Vec::new();
        for (g, d) in self.diff.iter().enumerate() {
            let want = self.generators[g].grading - 1;
            for (w, k, _) in d.monomials() {
                if self.monomial_grading(w, k) != want {
                    out.push((g, w.clone(), k));
                }
            }
        }
        out
    }

    /// Terms of `∂g` whose word does not have strictly smaller action than `g`.
    pub fn action_violations(&self) -> Vec<(usize, Word)> {
        let mut out = Vec::new();
        for (g, d) in self.diff.iter().enumerate() {
            let a = self.generators[g].action;
            for (w, _) in d.terms() {
                if self.word_action(w) >= a {
                    out.push((g, w.clone()));
                }
            }
        }
        out
    }

    /// Same generators and differential with coefficients reduced mod `p`.
    pub fn reduce_mod(&self, p: u32) -> Result<Dga, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::BadCharacteristic(p));
        }
        if self.char != 0 && self.char != p {
            return Err(AlgebraError::SignatureMismatch {
                left: self.char,
                right: p,
            });
        }
        let diff = self.diff.iter().map(|d| d.reduce_mod(p)).collect();
        Dga::new(self.generators.clone(), self.rot, p, diff)
    }

    /// Applies `t ↦ -t` to every differential.
    pub fn negate_odd_t(&self) -> Dga {
        let diff = self
            .diff
            .iter()
            .map(|d| d.map_coeffs(self.char, |c| c.negate_odd()))
            .collect();
        Dga {
            generators: self.generators.clone(),
            rot: self.rot,
            char: self.char,
            diff,
        }
    }

    pub(crate) fn into_parts(self) -> (Vec<ChordGenerator>, i64, u32, Vec<Element>) {
        (self.generators, self.rot, self.char, self.diff)
    }

    pub(crate) fn with_diff(&self, diff: Vec<Element>) -> Dga {
        Dga {
            generators: self.generators.clone(),
            rot: self.rot,
            char: self.char,
            diff,
        }
    }
}
