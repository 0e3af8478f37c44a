//! Sparse bivariate polynomials with exact rational coefficients.

use super::Scalar;
use crate::orders::deglex_cmp;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in two variables, stored as a map from exponent pairs
/// `(m, n)` to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Scalar::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, Scalar::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, Scalar::one())
    }

    pub fn monomial(m: u32, n: u32, coeff: Scalar) -> Self {
        let mut p = Self::default();
        p.set_coeff(m, n, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: u32, n: u32) -> Scalar {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set_coeff(&mut self, m: u32, n: u32, coeff: Scalar) {
        if coeff.is_zero() {
            self.terms.remove(&(m, n));
        } else {
            self.terms.insert((m, n), coeff);
        }
    }

    pub fn add_assign_term(&mut self, m: u32, n: u32, coeff: &Scalar) {
        let c = self.coeff(m, n) + coeff;
        self.set_coeff(m, n, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(m, n), c) in other.terms() {
            out.add_assign_term(m, n, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&mn, c)| (mn, c * k))
                .collect(),
        }
    }

    /// Multiply by the monomial `x^dm y^dn`.
    pub fn shift(&self, dm: u32, dn: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(m, n), c)| ((m + dm, n + dn), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(m1, n1), c1) in self.terms() {
            for (&(m2, n2), c2) in other.terms() {
                out.add_assign_term(m1 + m2, n1 + n2, &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The deg-lex-maximal exponent pair, or `None` for the zero polynomial.
    pub fn deglex_degree(&self) -> Option<(u32, u32)> {
        self.terms
            .keys()
            .copied()
            .max_by(|a, b| deglex_cmp(*a, *b))
    }

    pub fn eval(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let mut total = Scalar::zero();
        for (&(m, n), c) in self.terms() {
            total += x.pow(m as i32) * y.pow(n as i32) * c;
        }
        total
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&(m, n), c) in &self.terms {
            let mono = match (m, n) {
                (0, 0) => String::new(),
                (1, 0) => "x".into(),
                (m, 0) => format!("x^{m}"),
                (0, 1) => "y".into(),
                (0, n) => format!("y^{n}"),
                (1, 1) => "x y".into(),
                (m, n) => format!("x^{m} y^{n}"),
            };
            if mono.is_empty() {
                parts.push(c.to_string());
            } else {
                parts.push(format!("{c} {mono}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn arithmetic_and_degree() {
        let p = BivarPoly::monomial(1, 1, ratio(1, 3)).sub(&BivarPoly::y());
        assert_eq!(p.coeff(1, 1), ratio(1, 3));
        assert_eq!(p.coeff(0, 1), int(-1));
        assert_eq!(p.deglex_degree(), Some((1, 1)));
        assert_eq!(p.eval(&int(6), &int(2)), int(2)); // 6*2/3 - 2
    }

    #[test]
    fn zero_coefficients_absent() {
        let p = BivarPoly::x().sub(&BivarPoly::x());
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p.deglex_degree(), None);
    }

    #[test]
    fn deglex_degree_prefers_y() {
        // equal total degree: (0,2) beats (2,0) under deg-lex
        let p = BivarPoly::monomial(2, 0, int(1)).add(&BivarPoly::monomial(0, 2, int(1)));
        assert_eq!(p.deglex_degree(), Some((0, 2)));
    }

    #[test]
    fn product_expands() {
        let p = BivarPoly::x().add(&BivarPoly::y());
        let sq = p.pow(2);
        assert_eq!(sq.coeff(2, 0), int(1));
        assert_eq!(sq.coeff(1, 1), int(2));
        assert_eq!(sq.coeff(0, 2), int(1));
    }
}
