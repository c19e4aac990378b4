//! Words in chord generators and elements of the free algebra over ℤ[t, t⁻¹].

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::coeff::LaurentCoeff;
use super::AlgebraError;

/// An ordered product of generators, referenced by index into the owning DGA.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u32) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn contains(&self, g: u32) -> bool {
        self.0.contains(&g)
    }
}

// Length-lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of words with Laurent-polynomial coefficients.
///
/// Coefficients are central. The map never holds a zero coefficient, so
/// structural equality is equality in the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    char: u32,
    terms: BTreeMap<Word, LaurentCoeff>,
}

impl Element {
    pub fn zero(char: u32) -> Self {
        Element {
            char,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(char: u32) -> Self {
        Self::term(LaurentCoeff::one(char), Word::empty())
    }

    pub fn generator(char: u32, g: u32) -> Self {
        Self::term(LaurentCoeff::one(char), Word::letter(g))
    }

    /// `c · t^k · w`.
    pub fn monomial(char: u32, c: i64, k: i32, w: Word) -> Self {
        Self::term(LaurentCoeff::monomial(char, c, k), w)
    }

    pub fn term(coeff: LaurentCoeff, w: Word) -> Self {
        let char = coeff.char();
        let mut out = Self::zero(char);
        out.add_coeff(w, &coeff);
        out
    }

    pub fn char(&self) -> u32 {
        self.char
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (length-lexicographic) word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentCoeff)> {
        self.terms.iter()
    }

    /// Flattened monomials `(word, t-exponent, scalar)`.
    pub fn monomials(&self) -> impl Iterator<Item = (&Word, i32, i64)> {
        self.terms
            .iter()
            .flat_map(|(w, c)| c.terms().map(move |(k, s)| (w, k, s)))
    }

    pub fn coefficient(&self, w: &Word) -> LaurentCoeff {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| LaurentCoeff::zero(self.char))
    }

    pub fn add_coeff(&mut self, w: Word, c: &LaurentCoeff) {
        debug_assert_eq!(c.char(), self.char);
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&w) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn add_monomial(&mut self, w: Word, c: i64, k: i32) {
        let coeff = LaurentCoeff::monomial(self.char, c, k);
        self.add_coeff(w, &coeff);
    }

    fn check(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.char != other.char {
            return Err(AlgebraError::SignatureMismatch {
                left: self.char,
                right: other.char,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_coeff(w.clone(), c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let mut out = Element::zero(self.char);
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                out.add_coeff(w1.concat(w2), &c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Element {
        Element {
            char: self.char,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentCoeff) -> Element {
        let mut out = Element::zero(self.char);
        for (w, d) in self.terms() {
            out.add_coeff(w.clone(), &d.mul(c));
        }
        out
    }

    /// Rebuilds the canonical form from scratch. Elements built through the
    /// public API are already canonical, so this is the identity on them.
    pub fn canonicalize(&self) -> Element {
        let mut rebuilt = Element::zero(self.char);
        for (w, k, c) in self.monomials() {
            rebuilt.add_monomial(w.clone(), c, k);
        }
        rebuilt
    }

    /// Applies `f` to every Laurent coefficient (used for `t ↦ -t` and
    /// reductions).
    pub fn map_coeffs(&self, char: u32, f: impl Fn(&LaurentCoeff) -> LaurentCoeff) -> Element {
        let mut out = Element::zero(char);
        for (w, c) in self.terms() {
            out.add_coeff(w.clone(), &f(c));
        }
        out
    }

    pub fn reduce_mod(&self, p: u32) -> Element {
        self.map_coeffs(p, |c| c.reduce_mod(p))
    }

    /// Substitutes each generator `g` by `image(g)`; coefficients are kept.
    pub fn substitute(&self, image: &dyn Fn(u32) -> Element) -> Element {
        let mut out = Element::zero(self.char);
        for (w, c) in self.terms() {
            let mut prod = Element::one(self.char);
            for &g in w.letters() {
                prod = prod.try_mul(&image(g)).expect("same signature");
            }
            for (pw, pc) in prod.terms() {
                out.add_coeff(pw.clone(), &pc.mul(c));
            }
        }
        out
    }

    pub fn mentions(&self, g: u32) -> bool {
        self.terms.keys().any(|w| w.contains(g))
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .max()
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("elements over different rings")
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_add(&rhs.neg()).expect("elements over different rings")
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("elements over different rings")
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}
