//! Laurent polynomials in `A` and two-variable Poincaré polynomials in `t, A`.

use std::collections::BTreeMap;
use std::fmt;

fn push_term(out: &mut Vec<String>, c: i64, t: i64, a: i64) {
    let mut factors = Vec::new();
    if c != 1 || (t == 0 && a == 0) {
        factors.push(c.to_string());
    }
    if t != 0 {
        factors.push(format!("t^{t}"));
    }
    if a != 0 {
        factors.push(format!("A^{a}"));
    }
    out.push(factors.join("*"));
}

/// `Σ c_k A^k` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: i64, k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn add_term(&mut self, k: i64, c: i64) {
        let e = self.terms.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn coefficient(&self, k: i64) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            for (l, d) in other.terms() {
                out.add_term(k + l, c * d);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (k, d) in self.terms() {
            out.add_term(k, c * d);
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::monomial(1, 0), |acc, _| acc.mul(self))
    }

    /// Substitutes `A ↦ A^m`.
    pub fn stretch(&self, m: i64) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k * m, *c)).collect() }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.terms() {
            push_term(&mut parts, c, 0, k);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ c_{r,k} t^r A^k`, the Poincaré polynomial of a bigraded rank table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial2 {
    /// Keyed by `(r, k)`.
    terms: BTreeMap<(i64, i64), i64>,
}

impl Polynomial2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, r: i64, k: i64, c: i64) {
        let e = self.terms.entry((r, k)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(r, k));
        }
    }

    pub fn coefficient(&self, r: i64, k: i64) -> i64 {
        self.terms.get(&(r, k)).copied().unwrap_or(0)
    }

    /// Terms as `(r, k, c)`, ascending in `t` then `A`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.terms.iter().map(|((r, k), c)| (*r, *k, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Specialisation at `t = -1`.
    pub fn at_t_minus_one(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (r, k, c) in self.terms() {
            out.add_term(k, if r.rem_euclid(2) == 0 { c } else { -c });
        }
        out
    }
}

impl fmt::Display for Polynomial2 {
    /// Terms sorted by `t` then `A`, written `c*t^r*A^k` with unit
    /// coefficients and zero exponents omitted, joined by `" + "`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (r, k, c) in self.terms() {
            push_term(&mut parts, c, r, k);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        let mut p = Polynomial2::zero();
        p.add_term(1, 6, 1);
        p.add_term(0, 2, 1);
        p.add_term(1, 8, 2);
        p.add_term(0, 0, 3);
        assert_eq!(p.to_string(), "3 + A^2 + t^1*A^6 + 2*t^1*A^8");
        assert_eq!(Polynomial2::zero().to_string(), "0");
        let l = Laurent::monomial(1, 2).add(&Laurent::monomial(1, -2));
        assert_eq!(l.to_string(), "A^-2 + A^2");
        assert_eq!(Laurent::monomial(-1, 0).to_string(), "-1");
    }

    #[test]
    fn laurent_arithmetic() {
        let q = Laurent::monomial(1, 1).add(&Laurent::monomial(1, -1));
        let sq = q.pow(2);
        assert_eq!(sq.coefficient(0), 2);
        assert_eq!(sq.coefficient(2), 1);
        assert_eq!(q.stretch(2).coefficient(-2), 1);
        assert!(q.add(&q.scale(-1)).is_zero());
    }
}
