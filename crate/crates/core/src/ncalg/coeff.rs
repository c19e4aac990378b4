//! Laurent polynomials in `t` over ℤ or 𝔽_p.

use std::collections::BTreeMap;

/// A finitely supported Laurent polynomial `Σ c_k t^k`.
///
/// `char == 0` means integer coefficients; a prime `p` means coefficients are
/// kept reduced into `0..p`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentCoeff {
    char: u32,
    terms: BTreeMap<i32, i64>,
}

pub(crate) fn reduce(char: u32, c: i64) -> i64 {
    if char == 0 {
        c
    } else {
        c.rem_euclid(char as i64)
    }
}

impl LaurentCoeff {
    pub fn zero(char: u32) -> Self {
        LaurentCoeff {
            char,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(char: u32) -> Self {
        Self::monomial(char, 1, 0)
    }

    /// `c · t^k`, reduced for the characteristic.
    pub fn monomial(char: u32, c: i64, k: i32) -> Self {
        let mut out = Self::zero(char);
        out.add_term(c, k);
        out
    }

    pub fn char(&self) -> u32 {
        self.char
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coefficient(&self, k: i32) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, c: i64, k: i32) {
        let entry = self.terms.entry(k).or_insert(0);
        *entry = reduce(
            self.char,
            entry.checked_add(c).expect("coefficient overflow"),
        );
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.char, other.char);
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(c, k);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.char);
        for (k, c) in self.terms() {
            out.add_term(-c, k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.char, other.char);
        let mut out = Self::zero(self.char);
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                out.add_term(c1.checked_mul(c2).expect("coefficient overflow"), k1 + k2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(self.char);
        for (k, d) in self.terms() {
            out.add_term(d.checked_mul(c).expect("coefficient overflow"), k);
        }
        out
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        LaurentCoeff {
            char: self.char,
            terms: self.terms.iter().map(|(&k, &c)| (k + shift, c)).collect(),
        }
    }

    /// Substitutes `t ↦ -t`, i.e. negates odd-exponent terms.
    pub fn negate_odd(&self) -> Self {
        let mut out = Self::zero(self.char);
        for (k, c) in self.terms() {
            out.add_term(if k.rem_euclid(2) == 1 { -c } else { c }, k);
        }
        out
    }

    /// Reduces to characteristic `p` (which must be prime, or equal to the
    /// current characteristic).
    pub fn reduce_mod(&self, p: u32) -> Self {
        let mut out = Self::zero(p);
        for (k, c) in self.terms() {
            out.add_term(c, k);
        }
        out
    }

    /// Evaluates at `t = t_value` in 𝔽_p. `t_value` must be a unit mod `p`.
    pub fn eval_mod(&self, p: u32, t_value: u64) -> u64 {
        let p64 = p as u64;
        let tv = t_value % p64;
        let inv = mod_inverse(tv, p64).expect("t must be a unit");
        let mut acc = 0u64;
        for (k, c) in self.terms() {
            let base = if k >= 0 { tv } else { inv };
            let pw = mod_pow(base, k.unsigned_abs() as u64, p64);
            let cm = (c.rem_euclid(p as i64)) as u64;
            acc = (acc + cm * pw) % p64;
        }
        acc
    }

    /// True when the polynomial is a constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    // p is prime
    Some(mod_pow(a, p - 2, p))
}

/// Primality test for small field orders.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_two_cancels() {
        let a = LaurentCoeff::monomial(2, 1, 1);
        assert!(a.add(&a).is_zero());
        assert_eq!(LaurentCoeff::monomial(2, 3, 0), LaurentCoeff::one(2));
    }

    #[test]
    fn product_of_inverse_monomials_is_one() {
        let t = LaurentCoeff::monomial(0, 1, 1);
        let tinv = LaurentCoeff::monomial(0, 1, -1);
        assert_eq!(t.mul(&tinv), LaurentCoeff::one(0));
    }

    #[test]
    fn evaluation_mod_p() {
        // 1 + t at t = 1 over F_2 vanishes
        let mut c = LaurentCoeff::one(0);
        c.add_term(1, 1);
        assert_eq!(c.eval_mod(2, 1), 0);
        // 2 t^-1 at t = 2 over F_5: 2 * 3 = 6 = 1
        assert_eq!(LaurentCoeff::monomial(0, 2, -1).eval_mod(5, 2), 1);
    }

    #[test]
    fn negate_odd_only_touches_odd_powers() {
        let mut c = LaurentCoeff::zero(0);
        c.add_term(1, 0);
        c.add_term(1, 1);
        c.add_term(3, -1);
        let n = c.negate_odd();
        assert_eq!(n.coefficient(0), 1);
        assert_eq!(n.coefficient(1), -1);
        assert_eq!(n.coefficient(-1), -3);
    }

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
