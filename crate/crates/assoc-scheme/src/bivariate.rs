//! Decision procedures for bivariate P-polynomial structure.
//!
//! The central fact: an association scheme indexed by an
//! `(alpha,beta)`-compatible domain is bivariate P-polynomial of type
//! `(alpha,beta)` exactly when its intersection numbers satisfy
//!
//! - nonvanishing: `p_{10,ij}^{i+1,j} != 0` and `p_{10,i+1 j}^{ij} != 0`
//!   whenever `(i,j)` and `(i+1,j)` are both in the domain, and the
//!   analogous pair for `p_{01,..}` with `(i,j+1)`;
//! - support: `p_{10,ij}^{mn} != 0` forces `(m,n) <= (i+1,j)` and
//!   `(i,j) <= (m+1,n)` in the `(alpha,beta)` order, and the analogous
//!   bounds for `p_{01,ij}^{mn}` with `(i,j+1)` / `(m,n+1)`.
//!
//! Those conditions are what [`metric_test`] checks. Because each support
//! bound is linear in `alpha` alone or `beta` alone, the set of feasible
//! types is a product of intervals, which [`minimal_type`] intersects
//! exactly; the canonical type is the smallest corner. When the test
//! passes, [`construct_vij`] runs the inductive proof as an algorithm and
//! produces the polynomials `v_ij` with `A_ij = v_ij(A_10, A_01)`.

use crate::error::{Result, SchemeError};
use crate::exact::{BivarPoly, Matrix, Scalar};
use crate::orders::{
    ab_leq, deglex_cmp, domain_is_compatible, poly_is_compatible, Domain, Point, TypeParams,
};
use crate::scheme::{IntersectionTensor, VertexScheme};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub const X_GEN: Point = (1, 0);
pub const Y_GEN: Point = (0, 1);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricCondition {
    /// `p_{10,ij}^{i+1,j}` or `p_{10,i+1 j}^{ij}` vanished.
    Cm1,
    /// `p_{01,ij}^{i,j+1}` or `p_{01,i j+1}^{ij}` vanished.
    Cm2,
    /// A nonzero `p_{10,ij}^{mn}` outside the allowed support.
    Cm3,
    /// A nonzero `p_{01,ij}^{mn}` outside the allowed support.
    Cm4,
    /// The index domain is not downward closed.
    Domain,
}

impl MetricCondition {
    pub fn id(&self) -> &'static str {
        match self {
            MetricCondition::Cm1 => "cm1",
            MetricCondition::Cm2 => "cm2",
            MetricCondition::Cm3 => "cm3",
            MetricCondition::Cm4 => "cm4",
            MetricCondition::Domain => "domain",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricViolation {
    pub condition: MetricCondition,
    /// The row `(i,j)` at which the condition was checked (for the domain
    /// condition: the point whose down-set is not contained).
    pub at: Point,
    /// The offending target `(m,n)` (for cm1/cm2: the vanishing target; for
    /// the domain condition: the missing point).
    pub target: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricVerdict {
    pub passed: bool,
    pub violations: Vec<MetricViolation>,
}

impl MetricVerdict {
    fn from_violations(violations: Vec<MetricViolation>) -> Self {
        Self {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, condition: MetricCondition) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }
}

/// Is the tensor `(alpha,beta)`-metric on `d`? Aggregates every violation
/// rather than stopping at the first.
///
/// Requires the `(1,0)` and `(0,1)` rows of the tensor; `d` must contain
/// `(0,0)`, `(1,0)` and `(0,1)`.
pub fn metric_test(
    t: &IntersectionTensor,
    d: &Domain,
    tp: &TypeParams,
) -> Result<MetricVerdict> {
    check_generator_preconditions(t, d)?;
    let mut violations = Vec::new();

    let compat = domain_is_compatible(d, tp);
    if let Some((at, missing)) = compat.witness {
        violations.push(MetricViolation {
            condition: MetricCondition::Domain,
            at,
            target: missing,
        });
    }

    for &(i, j) in d.points() {
        // x-direction: applicable where (i,j) and (i+1,j) both lie in d
        if d.contains((i + 1, j)) {
            if t.entry(X_GEN, (i, j), (i + 1, j))?.is_zero() {
                violations.push(MetricViolation {
                    condition: MetricCondition::Cm1,
                    at: (i, j),
                    target: (i + 1, j),
                });
            }
            if t.entry(X_GEN, (i + 1, j), (i, j))?.is_zero() {
                violations.push(MetricViolation {
                    condition: MetricCondition::Cm1,
                    at: (i + 1, j),
                    target: (i, j),
                });
            }
            for (m, n) in t.support(X_GEN, (i, j))? {
                let ok = ab_leq(tp, (m, n), (i + 1, j)) && ab_leq(tp, (i, j), (m + 1, n));
                if !ok {
                    violations.push(MetricViolation {
                        condition: MetricCondition::Cm3,
                        at: (i, j),
                        target: (m, n),
                    });
                }
            }
        }
        // y-direction
        if d.contains((i, j + 1)) {
            if t.entry(Y_GEN, (i, j), (i, j + 1))?.is_zero() {
                violations.push(MetricViolation {
                    condition: MetricCondition::Cm2,
                    at: (i, j),
                    target: (i, j + 1),
                });
            }
            if t.entry(Y_GEN, (i, j + 1), (i, j))?.is_zero() {
                violations.push(MetricViolation {
                    condition: MetricCondition::Cm2,
                    at: (i, j + 1),
                    target: (i, j),
                });
            }
            for (m, n) in t.support(Y_GEN, (i, j))? {
                let ok = ab_leq(tp, (m, n), (i, j + 1)) && ab_leq(tp, (i, j), (m, n + 1));
                if !ok {
                    violations.push(MetricViolation {
                        condition: MetricCondition::Cm4,
                        at: (i, j),
                        target: (m, n),
                    });
                }
            }
        }
    }
    Ok(MetricVerdict::from_violations(violations))
}

fn check_generator_preconditions(t: &IntersectionTensor, d: &Domain) -> Result<()> {
    for gen in [X_GEN, Y_GEN] {
        if !d.contains(gen) {
            return Err(SchemeError::InvalidParameter(format!(
                "domain lacks generator {gen:?}"
            )));
        }
        t.lmatrix(gen)?;
    }
    Ok(())
}

/// Feasible `(alpha, beta)` rectangle, already clipped to the legal boxes
/// `[0,1]` and `[0,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeRegion {
    pub alpha_lo: Scalar,
    pub alpha_hi: Scalar,
    pub beta_lo: Scalar,
    pub beta_hi: Scalar,
    pub feasible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalTypeReport {
    pub region: TypeRegion,
    /// Smallest feasible `(alpha, beta)`, when the region is nonempty.
    pub canonical: Option<TypeParams>,
    /// Downward-closure recheck of the domain at the canonical point.
    pub domain_compatible: Option<bool>,
    pub domain_witness: Option<(Point, Point)>,
}

#[derive(Clone)]
struct IntervalAcc {
    lo: Scalar,
    hi: Scalar,
    feasible: bool,
}

impl IntervalAcc {
    fn unit() -> Self {
        Self {
            lo: Scalar::zero(),
            hi: Scalar::one(),
            feasible: true,
        }
    }

    /// Impose `coef * t <= rhs` on the parameter interval.
    fn constrain(&mut self, coef: i64, rhs: i64) {
        use std::cmp::Ordering;
        let bound = || crate::exact::ratio(rhs, coef);
        match coef.cmp(&0) {
            Ordering::Greater => {
                let b = bound();
                if b < self.hi {
                    self.hi = b;
                }
            }
            Ordering::Less => {
                let b = bound();
                if b > self.lo {
                    self.lo = b;
                }
            }
            Ordering::Equal => {
                if rhs < 0 {
                    self.feasible = false;
                }
            }
        }
    }
}

/// Accumulates the requirement `(m,n) <= (i,j)` over all admissible types.
/// The first coordinate of the order is linear in `alpha`, the second in
/// `beta`, so the constraint splits.
fn require_prec(alpha: &mut IntervalAcc, beta: &mut IntervalAcc, a: Point, b: Point) {
    let (m, n) = (a.0 as i64, a.1 as i64);
    let (i, j) = (b.0 as i64, b.1 as i64);
    // m + alpha n <= i + alpha j  <=>  alpha (n - j) <= i - m
    alpha.constrain(n - j, i - m);
    // beta m + n <= beta i + j   <=>  beta (m - i) <= j - n
    beta.constrain(m - i, j - n);
}

/// The exact feasible region of types for which the tensor is metric on
/// `d`, and the canonical (smallest `alpha`, then smallest `beta`) choice.
pub fn minimal_type(t: &IntersectionTensor, d: &Domain) -> Result<MinimalTypeReport> {
    check_generator_preconditions(t, d)?;
    let mut alpha = IntervalAcc::unit();
    let mut beta = IntervalAcc::unit();
    let mut nonvanishing_ok = true;

    for &(i, j) in d.points() {
        if d.contains((i + 1, j)) {
            if t.entry(X_GEN, (i, j), (i + 1, j))?.is_zero()
                || t.entry(X_GEN, (i + 1, j), (i, j))?.is_zero()
            {
                nonvanishing_ok = false;
            }
            for (m, n) in t.support(X_GEN, (i, j))? {
                require_prec(&mut alpha, &mut beta, (m, n), (i + 1, j));
                require_prec(&mut alpha, &mut beta, (i, j), (m + 1, n));
            }
        }
        if d.contains((i, j + 1)) {
            if t.entry(Y_GEN, (i, j), (i, j + 1))?.is_zero()
                || t.entry(Y_GEN, (i, j + 1), (i, j))?.is_zero()
            {
                nonvanishing_ok = false;
            }
            for (m, n) in t.support(Y_GEN, (i, j))? {
                require_prec(&mut alpha, &mut beta, (m, n), (i, j + 1));
                require_prec(&mut alpha, &mut beta, (i, j), (m, n + 1));
            }
        }
    }

    // clip to the legal boxes: alpha in [0,1], beta in [0,1)
    let one = Scalar::one();
    if alpha.hi > one {
        alpha.hi = one.clone();
    }
    if beta.hi > one {
        beta.hi = one.clone();
    }
    let feasible = nonvanishing_ok
        && alpha.feasible
        && beta.feasible
        && alpha.lo <= alpha.hi
        && beta.lo <= beta.hi
        && beta.lo < one;

    let region = TypeRegion {
        alpha_lo: alpha.lo.clone(),
        alpha_hi: alpha.hi,
        beta_lo: beta.lo.clone(),
        beta_hi: beta.hi,
        feasible,
    };
    if !feasible {
        return Ok(MinimalTypeReport {
            region,
            canonical: None,
            domain_compatible: None,
            domain_witness: None,
        });
    }
    let canonical = TypeParams::new(alpha.lo, beta.lo)?;
    let compat = domain_is_compatible(d, &canonical);
    Ok(MinimalTypeReport {
        region,
        canonical: Some(canonical),
        domain_compatible: Some(compat.compatible),
        domain_witness: compat.witness,
    })
}

/// The set of `(m,n)` with `p_{left,at}^{mn}` nonzero.
pub fn recurrence_support(
    t: &IntersectionTensor,
    left: Point,
    at: Point,
) -> Result<Vec<Point>> {
    t.support(left, at)
}

/// Builds the polynomials `v_ij` with `v_00 = 1`, `v_10 = x`, `v_01 = y`
/// by induction along deg-lex: for `i >= 1`,
/// `x v_{i-1,j} = p_{10,i-1 j}^{ij} v_ij + sum of earlier terms`, and the
/// `y` recurrence for `i = 0, j >= 1`.
pub fn construct_vij(
    t: &IntersectionTensor,
    d: &Domain,
    tp: &TypeParams,
) -> Result<BTreeMap<Point, BivarPoly>> {
    check_generator_preconditions(t, d)?;
    let mut polys: BTreeMap<Point, BivarPoly> = BTreeMap::new();
    let mut order: Vec<Point> = d.points().to_vec();
    order.sort_by(|&a, &b| deglex_cmp(a, b));
    for &(i, j) in &order {
        let poly = match (i, j) {
            (0, 0) => BivarPoly::one(),
            (1, 0) => BivarPoly::x(),
            (0, 1) => BivarPoly::y(),
            (i, j) if i >= 1 => {
                let prev = (i - 1, j);
                let prev_poly = polys.get(&prev).ok_or_else(|| {
                    SchemeError::InvalidParameter(format!(
                        "domain not downward closed at ({i},{j})"
                    ))
                })?;
                let mut acc = prev_poly.shift(1, 0); // x * v_{i-1,j}
                let pivot = t.entry(X_GEN, prev, (i, j))?;
                if pivot.is_zero() {
                    return Err(SchemeError::VanishingPivot(i, j));
                }
                for (m, n) in t.support(X_GEN, prev)? {
                    if (m, n) == (i, j) {
                        continue;
                    }
                    let coeff = t.entry(X_GEN, prev, (m, n))?;
                    let vmn = polys.get(&(m, n)).ok_or_else(|| {
                        SchemeError::VerificationFailed(format!(
                            "support of x-row at {prev:?} hits ({m},{n}) before it is built"
                        ))
                    })?;
                    acc = acc.sub(&vmn.scale(&coeff));
                }
                acc.scale(&(Scalar::one() / pivot))
            }
            (0, j) => {
                let prev = (0, j - 1);
                let prev_poly = polys.get(&prev).unwrap();
                let mut acc = prev_poly.shift(0, 1); // y * v_{0,j-1}
                let pivot = t.entry(Y_GEN, prev, (0, j))?;
                if pivot.is_zero() {
                    return Err(SchemeError::VanishingPivot(0, j));
                }
                for (m, n) in t.support(Y_GEN, prev)? {
                    if (m, n) == (0, j) {
                        continue;
                    }
                    let coeff = t.entry(Y_GEN, prev, (m, n))?;
                    let vmn = polys.get(&(m, n)).ok_or_else(|| {
                        SchemeError::VerificationFailed(format!(
                            "support of y-row at {prev:?} hits ({m},{n}) before it is built"
                        ))
                    })?;
                    acc = acc.sub(&vmn.scale(&coeff));
                }
                acc.scale(&(Scalar::one() / pivot))
            }
            _ => unreachable!(),
        };
        match poly_is_compatible(&poly, tp)? {
            Some(deg) if deg == (i, j) => {}
            other => {
                return Err(SchemeError::VerificationFailed(format!(
                    "v_({i},{j}) has compatibility degree {other:?}"
                )));
            }
        }
        polys.insert((i, j), poly);
    }
    Ok(polys)
}

/// Evaluates every `v_ij` at the adjacency matrices of a vertex scheme and
/// checks `v_ij(A_10, A_01) = A_ij` exactly.
pub fn verify_vij_on_scheme(
    s: &VertexScheme,
    polys: &BTreeMap<Point, BivarPoly>,
) -> Result<()> {
    let a10 = s
        .adjacency_matrix(X_GEN)
        .ok_or(SchemeError::MissingRows(1, 0))?;
    let a01 = s
        .adjacency_matrix(Y_GEN)
        .ok_or(SchemeError::MissingRows(0, 1))?;
    if &a10 * &a01 != &a01 * &a10 {
        return Err(SchemeError::VerificationFailed(
            "generators do not commute".into(),
        ));
    }
    for (&p, poly) in polys {
        let expect = s.adjacency_matrix(p).ok_or_else(|| {
            SchemeError::InvalidParameter(format!("class {p:?} missing from scheme"))
        })?;
        let got = Matrix::poly_eval(poly, &a10, &a01, false)?;
        if got != expect {
            return Err(SchemeError::VerificationFailed(format!(
                "v_{p:?}(A_10, A_01) != A_{p:?}"
            )));
        }
    }
    Ok(())
}

/// Same check against the regular representation: `v_ij(L_10, L_01)` must
/// send the basis vector of `(0,0)` to the basis vector of `(i,j)`. Works
/// for algebra-level schemes where only the generator rows are known.
pub fn verify_vij_on_rows(
    t: &IntersectionTensor,
    d: &Domain,
    polys: &BTreeMap<Point, BivarPoly>,
) -> Result<()> {
    let l10 = t.lmatrix(X_GEN)?;
    let l01 = t.lmatrix(Y_GEN)?;
    let pos00 = d.position((0, 0)).unwrap();
    for (&p, poly) in polys {
        let me = Matrix::poly_eval(poly, l10, l01, false)?;
        let target = d
            .position(p)
            .ok_or_else(|| SchemeError::InvalidParameter(format!("{p:?} not in domain")))?;
        for r in 0..d.len() {
            let expect = if r == target {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            if me[(r, pos00)] != expect {
                return Err(SchemeError::VerificationFailed(format!(
                    "v_{p:?} evaluated on the generator rows does not reproduce A_{p:?}"
                )));
            }
        }
    }
    Ok(())
}

/// A relabeling of abstract classes by domain points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub domain: Domain,
    /// `assignment[class_index] = point`.
    pub assignment: Vec<Point>,
}

/// Class-multiplication data with anonymous class indices; input to
/// [`labeling_search`].
#[derive(Clone, Debug)]
pub struct ClassProducts {
    n: usize,
    identity: usize,
    /// `p[a][(c, b)]` = coefficient of class `c` in (class `a`)(class `b`).
    p: Vec<Matrix>,
}

impl ClassProducts {
    pub fn new(identity: usize, p: Vec<Matrix>) -> Result<Self> {
        let n = p.len();
        if identity >= n || p.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(SchemeError::InvalidParameter(
                "malformed class product table".into(),
            ));
        }
        Ok(Self { n, identity, p })
    }

    pub fn from_vertex_scheme(s: &VertexScheme) -> Result<Self> {
        let t = s.intersection_numbers()?;
        Self::from_tensor(&t)
    }

    /// Forgets the labels of a full tensor.
    pub fn from_tensor(t: &IntersectionTensor) -> Result<Self> {
        if !t.is_full() {
            return Err(SchemeError::MissingRows(0, 0));
        }
        let d = t.domain();
        let identity = d.position((0, 0)).unwrap();
        let p = d
            .points()
            .iter()
            .map(|&pt| t.lmatrix(pt).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n: d.len(),
            identity,
            p,
        })
    }

    fn coeff(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.p[a][(c, b)]
    }

    fn support(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&c| !self.coeff(a, b, c).is_zero())
            .collect()
    }

    /// Relabels the two generator rows by `assignment`, producing a partial
    /// tensor ready for [`metric_test`].
    pub fn relabeled_rows(&self, labeling: &Labeling, x: usize, y: usize) -> Result<IntersectionTensor> {
        let d = &labeling.domain;
        let n = self.n;
        let mut t = IntersectionTensor::empty(d.clone());
        for (gen_class, gen_point) in [(x, X_GEN), (y, Y_GEN)] {
            let mut l = Matrix::zero(n, n);
            for b in 0..n {
                for c in 0..n {
                    let coeff = self.coeff(gen_class, b, c);
                    if !coeff.is_zero() {
                        let bp = d.position(labeling.assignment[b]).unwrap();
                        let cp = d.position(labeling.assignment[c]).unwrap();
                        l[(cp, bp)] = coeff.clone();
                    }
                }
            }
            t.insert_row(gen_point, l)?;
        }
        Ok(t)
    }

    /// Relabels the full product table.
    pub fn relabeled_tensor(&self, labeling: &Labeling) -> Result<IntersectionTensor> {
        let d = &labeling.domain;
        let n = self.n;
        let mut t = IntersectionTensor::empty(d.clone());
        for a in 0..n {
            let mut l = Matrix::zero(n, n);
            for b in 0..n {
                for c in 0..n {
                    let coeff = self.coeff(a, b, c);
                    if !coeff.is_zero() {
                        let bp = d.position(labeling.assignment[b]).unwrap();
                        let cp = d.position(labeling.assignment[c]).unwrap();
                        l[(cp, bp)] = coeff.clone();
                    }
                }
            }
            t.insert_row(labeling.assignment[a], l)?;
        }
        Ok(t)
    }
}

/// Maximum class count accepted by [`labeling_search`].
pub const LABELING_SEARCH_GUARD: usize = 12;

/// Searches for a relabeling of the classes by an `(alpha,beta)`-compatible
/// domain that passes [`metric_test`] at the given type.
///
/// Candidate domains are the `(alpha,beta)`-downward-closed subsets of the
/// triangle `{i + j <= N}` of the right cardinality that contain `(0,0)`,
/// `(1,0)` and `(0,1)`. For each domain and each ordered choice of
/// generator classes, the rest of the assignment is forced: walking the
/// domain in deg-lex order, the expansion of `A_x A_{i-1,j}` (or
/// `A_y A_{0,j-1}`) must introduce exactly one unassigned class, which
/// becomes `(i,j)`. The first assignment that passes the metric test wins;
/// domains are tried in lexicographic order of their deg-lex point lists
/// and generator pairs in index order.
pub fn labeling_search(cp: &ClassProducts, tp: &TypeParams) -> Result<Option<Labeling>> {
    let n_classes = cp.n.saturating_sub(1);
    if n_classes > LABELING_SEARCH_GUARD {
        return Err(SchemeError::SearchGuard(n_classes, LABELING_SEARCH_GUARD));
    }
    if cp.n < 3 {
        return Ok(None);
    }
    let n_classes = n_classes as u32;
    for domain in candidate_domains(n_classes, tp) {
        if !(domain.contains(X_GEN) && domain.contains(Y_GEN)) {
            continue;
        }
        for x in 0..cp.n {
            if x == cp.identity {
                continue;
            }
            for y in 0..cp.n {
                if y == cp.identity || y == x {
                    continue;
                }
                let Some(labeling) = propagate_assignment(cp, &domain, x, y) else {
                    continue;
                };
                let rows = cp.relabeled_rows(&labeling, x, y)?;
                if metric_test(&rows, &domain, tp)?.passed {
                    return Ok(Some(labeling));
                }
            }
        }
    }
    Ok(None)
}

/// Deterministic propagation of a generator choice over a candidate domain.
fn propagate_assignment(
    cp: &ClassProducts,
    domain: &Domain,
    x: usize,
    y: usize,
) -> Option<Labeling> {
    let mut label_of_class: Vec<Option<Point>> = vec![None; cp.n];
    let mut class_of_label: BTreeMap<Point, usize> = BTreeMap::new();
    let mut assign = |class: usize,
                      point: Point,
                      label_of_class: &mut Vec<Option<Point>>,
                      class_of_label: &mut BTreeMap<Point, usize>| {
        label_of_class[class] = Some(point);
        class_of_label.insert(point, class);
    };
    assign(cp.identity, (0, 0), &mut label_of_class, &mut class_of_label);
    assign(x, X_GEN, &mut label_of_class, &mut class_of_label);
    assign(y, Y_GEN, &mut label_of_class, &mut class_of_label);

    for &(i, j) in domain.points() {
        if class_of_label.contains_key(&(i, j)) {
            continue;
        }
        let (gen, prev) = if i >= 1 {
            (x, (i - 1, j))
        } else {
            (y, (0, j - 1))
        };
        let prev_class = *class_of_label.get(&prev)?;
        let fresh: Vec<usize> = cp
            .support(gen, prev_class)
            .into_iter()
            .filter(|&c| label_of_class[c].is_none())
            .collect();
        if fresh.len() != 1 {
            return None;
        }
        assign(fresh[0], (i, j), &mut label_of_class, &mut class_of_label);
    }
    if label_of_class.iter().any(Option::is_none) {
        return None;
    }
    Some(Labeling {
        domain: domain.clone(),
        assignment: label_of_class.into_iter().map(Option::unwrap).collect(),
    })
}

/// All `(alpha,beta)`-downward-closed subsets of the triangle
/// `{i + j <= n}` with `n + 1` elements, in lexicographic order of their
/// deg-lex point lists.
fn candidate_domains(n: u32, tp: &TypeParams) -> Vec<Domain> {
    let mut triangle: Vec<Point> = Vec::new();
    for i in 0..=n {
        for j in 0..=(n - i) {
            triangle.push((i, j));
        }
    }
    triangle.sort_by(|&a, &b| deglex_cmp(a, b));
    let size = (n + 1) as usize;
    let mut out: Vec<Vec<Point>> = Vec::new();
    let mut current: Vec<Point> = vec![(0, 0)];
    // grow ideals point by point; each added point must have its whole
    // down-set (within the triangle) already in the set, and indices only
    // increase, so each ideal is produced once
    fn down_closed_after_add(candidate: Point, chosen: &[Point], all: &[Point], tp: &TypeParams) -> bool {
        all.iter()
            .all(|&q| !ab_leq(tp, q, candidate) || q == candidate || chosen.contains(&q))
    }
    fn grow(
        start: usize,
        triangle: &[Point],
        current: &mut Vec<Point>,
        size: usize,
        tp: &TypeParams,
        out: &mut Vec<Vec<Point>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for k in start..triangle.len() {
            let cand = triangle[k];
            if current.contains(&cand) {
                continue;
            }
            if down_closed_after_add(cand, current, triangle, tp) {
                current.push(cand);
                grow(k + 1, triangle, current, size, tp, out);
                current.pop();
            }
        }
    }
    grow(1, &triangle, &mut current, size, tp, &mut out);
    for ideal in &mut out {
        ideal.sort_by(|&a, &b| deglex_cmp(a, b));
    }
    out.sort();
    out.dedup();
    out.into_iter()
        .filter_map(|pts| Domain::new(pts).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn candidate_domains_shapes() {
        // at (0,0): downward closed = staircase shapes
        let t00 = TypeParams::from_ints(0, 1, 0, 1);
        let ds = candidate_domains(2, &t00);
        assert!(ds
            .iter()
            .any(|d| d.points() == [(0, 0), (1, 0), (0, 1)]));
        // the chain {(0,0),(1,0),(2,0)} is downward closed at beta = 0
        assert!(ds.iter().any(|d| d.points() == [(0, 0), (1, 0), (2, 0)]));
        for d in &ds {
            assert_eq!(d.len(), 3);
            assert!(crate::orders::domain_is_compatible(d, &t00).compatible);
        }
    }

    #[test]
    fn interval_constraints() {
        let mut acc = IntervalAcc::unit();
        acc.constrain(2, 1); // t <= 1/2
        assert_eq!(acc.hi, ratio(1, 2));
        acc.constrain(-2, -1); // t >= 1/2
        assert_eq!(acc.lo, ratio(1, 2));
        assert!(acc.feasible);
        acc.constrain(0, -1); // 0 <= -1: impossible
        assert!(!acc.feasible);
        let _ = int(0);
    }
}
