//! Monomial orders and index domains.
//!
//! Two orders drive everything downstream: the deg-lex total order on
//! exponent pairs, and the two-parameter partial order
//! `(m,n) <= (i,j)  iff  m + alpha*n <= i + alpha*j  and  beta*m + n <= beta*i + j`
//! with `0 <= alpha <= 1`, `0 <= beta < 1`. The parameter bounds make the
//! partial order a refinement of deg-lex, which the inductive constructions
//! rely on. Both comparisons are exact rational arithmetic; borderline
//! equalities decide compatibility, so floats would be wrong here.

use crate::error::{Result, SchemeError};
use crate::exact::{BivarPoly, Scalar};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// An index pair `(i, j)`; used both as a monomial exponent pair and as a
/// class label.
pub type Point = (u32, u32);

/// deg-lex comparison: first by total degree, then by the `y`-exponent.
pub fn deglex_cmp(a: Point, b: Point) -> Ordering {
    (a.0 + a.1, a.1).cmp(&(b.0 + b.1, b.1))
}

/// `a <= b` in deg-lex: `m+n < i+j`, or `m+n = i+j` and `n <= j`.
pub fn deglex_leq(a: Point, b: Point) -> bool {
    deglex_cmp(a, b) != Ordering::Greater
}

/// The pair `(alpha, beta)` with `0 <= alpha <= 1` and `0 <= beta < 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct TypeParams {
    alpha: Scalar,
    beta: Scalar,
}

impl TypeParams {
    pub fn new(alpha: Scalar, beta: Scalar) -> Result<Self> {
        if alpha < Scalar::zero() || alpha > Scalar::one() {
            return Err(SchemeError::InvalidParameter(format!(
                "alpha = {alpha} outside [0, 1]"
            )));
        }
        if beta < Scalar::zero() || beta >= Scalar::one() {
            return Err(SchemeError::InvalidParameter(format!(
                "beta = {beta} outside [0, 1)"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn from_ints(alpha_num: i64, alpha_den: i64, beta_num: i64, beta_den: i64) -> Self {
        Self::new(
            crate::exact::ratio(alpha_num, alpha_den),
            crate::exact::ratio(beta_num, beta_den),
        )
        .expect("valid type parameters")
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }
}

impl fmt::Debug for TypeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

fn scaled(coef: u32, s: &Scalar) -> Scalar {
    Scalar::from_integer(coef.into()) * s
}

/// `(m,n) <= (i,j)` in the `(alpha, beta)` partial order.
pub fn ab_leq(t: &TypeParams, a: Point, b: Point) -> bool {
    let (m, n) = a;
    let (i, j) = b;
    let first = Scalar::from_integer(m.into()) + scaled(n, &t.alpha)
        <= Scalar::from_integer(i.into()) + scaled(j, &t.alpha);
    let second = scaled(m, &t.beta) + Scalar::from_integer(n.into())
        <= scaled(i, &t.beta) + Scalar::from_integer(j.into());
    first && second
}

/// A finite subset of N^2 containing `(0,0)`, kept in deg-lex order.
#[derive(Clone, PartialEq, Eq)]
pub struct Domain {
    points: Vec<Point>,
    index: HashMap<Point, usize>,
}

impl Domain {
    pub fn new(points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut points: Vec<Point> = points.into_iter().collect();
        points.sort_by(|&a, &b| deglex_cmp(a, b));
        points.dedup();
        if points.first() != Some(&(0, 0)) {
            return Err(SchemeError::InvalidParameter(
                "domain must contain (0,0)".into(),
            ));
        }
        let index = points.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        Ok(Self { points, index })
    }

    /// `{(i,j) : i + j <= n}`.
    pub fn triangle(n: u32) -> Self {
        Self::new((0..=n).flat_map(|i| (0..=n - i).map(move |j| (i, j)))).unwrap()
    }

    /// `{0..=a} x {0..=b}`.
    pub fn rectangle(a: u32, b: u32) -> Self {
        Self::new((0..=a).flat_map(|i| (0..=b).map(move |j| (i, j)))).unwrap()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.index.contains_key(&p)
    }

    pub fn position(&self, p: Point) -> Option<usize> {
        self.index.get(&p).copied()
    }

    /// Points in deg-lex order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point_at(&self, k: usize) -> Point {
        self.points[k]
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Domain{:?}", self.points)
    }
}

/// Result of the downward-closure check on a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainCompat {
    pub compatible: bool,
    /// On failure, a pair `((i,j), (m,n))` with `(i,j)` in the domain,
    /// `(m,n) <= (i,j)` in the `(alpha,beta)` order, and `(m,n)` missing.
    pub witness: Option<(Point, Point)>,
}

/// Is the domain downward closed under the `(alpha, beta)` order?
///
/// Points are scanned from the deg-lex-largest down, and dominated pairs in
/// deg-lex order, so the reported witness anchors at the largest offending
/// point.
pub fn domain_is_compatible(d: &Domain, t: &TypeParams) -> DomainCompat {
    for &(i, j) in d.points().iter().rev() {
        let reach = i + j;
        let mut candidates: Vec<Point> = (0..=reach)
            .flat_map(|m| (0..=reach).map(move |n| (m, n)))
            .collect();
        candidates.sort_by(|&a, &b| deglex_cmp(a, b));
        for (m, n) in candidates {
            if ab_leq(t, (m, n), (i, j)) && !d.contains((m, n)) {
                return DomainCompat {
                    compatible: false,
                    witness: Some(((i, j), (m, n))),
                };
            }
        }
    }
    DomainCompat {
        compatible: true,
        witness: None,
    }
}

/// The deg-lex degree `(i,j)` of `p` when every monomial of `p` is below
/// `(i,j)` in the `(alpha, beta)` order, `None` when some monomial is not
/// comparable. Errors on the zero polynomial.
pub fn poly_is_compatible(p: &BivarPoly, t: &TypeParams) -> Result<Option<Point>> {
    let deg = p.deglex_degree().ok_or(SchemeError::ZeroPolynomial)?;
    for (&mn, _) in p.terms() {
        if !ab_leq(t, mn, deg) {
            return Ok(None);
        }
    }
    Ok(Some(deg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn deglex_examples() {
        assert!(!deglex_leq((1, 2), (2, 1)));
        assert!(deglex_leq((2, 1), (1, 2)));
        assert!(deglex_leq((0, 0), (0, 0)));
    }

    #[test]
    fn ab_order_examples() {
        let t10 = TypeParams::from_ints(1, 1, 0, 1);
        assert!(ab_leq(&t10, (3, 1), (2, 4)));
        let t00 = TypeParams::from_ints(0, 1, 0, 1);
        assert!(!ab_leq(&t00, (3, 1), (2, 4)));
        assert!(ab_leq(&t00, (2, 3), (2, 3)));
    }

    #[test]
    fn type_params_validation() {
        assert!(TypeParams::new(int(1), int(1)).is_err());
        assert!(TypeParams::new(ratio(3, 2), int(0)).is_err());
        assert!(TypeParams::new(int(0), ratio(-1, 2)).is_err());
        assert!(TypeParams::new(int(1), ratio(1, 2)).is_ok());
    }

    #[test]
    fn poly_compatibility_examples() {
        let t = TypeParams::from_ints(1, 2, 0, 1);
        assert_eq!(
            poly_is_compatible(&BivarPoly::one(), &t).unwrap(),
            Some((0, 0))
        );
        // x y / 3 - y at (1/2, 0): degree (1,1), (0,1) below it
        let p = BivarPoly::monomial(1, 1, ratio(1, 3)).sub(&BivarPoly::y());
        assert_eq!(poly_is_compatible(&p, &t).unwrap(), Some((1, 1)));
        // x^2 + y^2 at (0,0): (2,0) not below (0,2)
        let q = BivarPoly::monomial(2, 0, int(1)).add(&BivarPoly::monomial(0, 2, int(1)));
        let t00 = TypeParams::from_ints(0, 1, 0, 1);
        assert_eq!(poly_is_compatible(&q, &t00).unwrap(), None);
        assert!(poly_is_compatible(&BivarPoly::zero(), &t).is_err());
    }

    #[test]
    fn domain_compatibility_examples() {
        let t10 = TypeParams::from_ints(1, 1, 0, 1);
        let tri = Domain::triangle(2);
        assert!(domain_is_compatible(&tri, &t10).compatible);

        // truncated triangle {i+j <= 2, j <= 1}
        let trunc = Domain::new([(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]).unwrap();
        assert!(domain_is_compatible(&trunc, &t10).compatible);

        // the incompatible five-point domain, with its pinned witness
        let bad = Domain::new([(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)]).unwrap();
        let res = domain_is_compatible(&bad, &t10);
        assert!(!res.compatible);
        assert_eq!(res.witness, Some(((0, 2), (2, 0))));
    }

    #[test]
    fn domain_requires_origin() {
        assert!(Domain::new([(1, 0)]).is_err());
    }
}
