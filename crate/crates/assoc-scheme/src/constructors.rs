//! Builders for the example families: direct products, symmetrizations
//! (ordered Hamming schemes), non-binary Johnson schemes and their
//! projection from the binary ordered Hamming scheme, the generalized
//! 24-cell, symplectic isotropic 2-spaces, and attenuated spaces.
//!
//! Vertex-level families are built by classifying vertex pairs directly;
//! the 24-cell, symplectic and attenuated families carry no usable vertex
//! set here and are built at algebra level from their published
//! L-matrices / recurrence coefficients. For those, `q` is only required
//! to be an integer `>= 2`: every identity we verify is a polynomial
//! identity in `q`, prime powers matter only for vertex-level existence.

use crate::error::{Result, SchemeError};
use crate::exact::{int, pow_i, Matrix, Scalar};
use crate::orders::{Domain, Point};
use crate::polyfam::{q_number, srg_eigenvalues};
use crate::scheme::{scheme_from_relations, AlgebraScheme, IntersectionTensor, VertexScheme};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Resource guard for the vertex-level builders.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vertices: 100_000,
        }
    }
}

impl Limits {
    fn check(&self, v: usize, what: &str) -> Result<()> {
        if v > self.max_vertices {
            return Err(SchemeError::ResourceLimit(format!(
                "{what} needs {v} vertices, limit is {}",
                self.max_vertices
            )));
        }
        Ok(())
    }
}

/// Strongly-regular-graph parameters `(k, b, c)` in intersection-array
/// form: `L_1 = [[0,k,0],[1,k-1-b,b],[0,c,k-c]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub k: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl SrgParams {
    pub fn new(k: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        if c.is_zero() {
            return Err(SchemeError::InvalidParameter("c = 0".into()));
        }
        let p = Self { k, b, c };
        let v = p.vertex_count();
        if !crate::exact::is_integer(&v) || v <= Scalar::zero() {
            return Err(SchemeError::InvalidParameter(format!(
                "v = (k(b+c)+c)/c = {v} is not a positive integer"
            )));
        }
        for m in [p.l1(), p.l2()] {
            if m.entries().any(|(_, _, s)| s.is_negative()) {
                return Err(SchemeError::InvalidParameter(
                    "negative L-matrix entry".into(),
                ));
            }
        }
        Ok(p)
    }

    pub fn from_eigenvalues(k: Scalar, theta: &Scalar, tau: &Scalar) -> Result<Self> {
        let one = Scalar::one();
        let b = -(theta + &one) * (tau + &one);
        let c = &k + theta * tau;
        Self::new(k, b, c)
    }

    pub fn vertex_count(&self) -> Scalar {
        (&self.k * (&self.b + &self.c) + &self.c) / &self.c
    }

    pub fn eigenvalues(&self) -> Result<(Scalar, Scalar)> {
        srg_eigenvalues(&self.k, &self.b, &self.c)
    }

    pub fn l1(&self) -> Matrix {
        let (k, b, c) = (&self.k, &self.b, &self.c);
        Matrix::from_rows(vec![
            vec![Scalar::zero(), k.clone(), Scalar::zero()],
            vec![Scalar::one(), k - Scalar::one() - b, b.clone()],
            vec![Scalar::zero(), c.clone(), k - c],
        ])
        .unwrap()
    }

    pub fn l2(&self) -> Matrix {
        let (k, b, c) = (&self.k, &self.b, &self.c);
        let bk_c = b * k / c;
        Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::zero(), bk_c.clone()],
            vec![Scalar::zero(), b.clone(), &bk_c - b],
            vec![Scalar::one(), k - c, &bk_c - Scalar::one() - k + c],
        ])
        .unwrap()
    }
}

/// The expansion of `A_10 A_ij` (x row) or `A_01 A_ij` (y row) for the
/// symmetrization of a two-class scheme with parameters `(k, b, c)`, as a
/// target-to-coefficient map restricted to the triangle `{i+j <= n}`.
/// Only nonzero coefficients are kept.
pub fn symmetrize_recurrence(
    k: &Scalar,
    b: &Scalar,
    c: &Scalar,
    big_n: u32,
    at: Point,
    y_row: bool,
) -> BTreeMap<Point, Scalar> {
    let (i, j) = (at.0 as i64, at.1 as i64);
    let n = big_n as i64;
    let mut terms: Vec<((i64, i64), Scalar)> = Vec::new();
    let bk_c = b * k / c;
    if y_row {
        terms.push(((i, j - 1), &bk_c * int(n - i - j + 1)));
        terms.push((
            (i, j),
            b * int(i) + int(j) * (&bk_c - Scalar::one() - k + c),
        ));
        terms.push(((i, j + 1), int(j + 1)));
        terms.push(((i - 1, j + 1), int(j + 1) * (k - c)));
        terms.push(((i + 1, j - 1), int(i + 1) * (&bk_c - b)));
    } else {
        terms.push(((i - 1, j), k * int(n - i - j + 1)));
        terms.push((
            (i, j),
            int(i) * (k - Scalar::one() - b) + int(j) * (k - c),
        ));
        terms.push(((i + 1, j), int(i + 1)));
        terms.push(((i - 1, j + 1), c * int(j + 1)));
        terms.push(((i + 1, j - 1), b * int(i + 1)));
    }
    let mut out = BTreeMap::new();
    for ((m, nn), coeff) in terms {
        if m < 0 || nn < 0 || m + nn > n || coeff.is_zero() {
            continue;
        }
        out.insert((m as u32, nn as u32), coeff);
    }
    out
}

/// The two-class scheme of a cycle of length `len` (classes: equal,
/// adjacent, antipodal-or-far), labeled `(0,0), (1,0), (0,1)`.
/// `len = 4` or `5` gives a strongly regular 2-class scheme.
pub fn cycle_scheme(len: usize) -> Result<VertexScheme> {
    if len < 4 {
        return Err(SchemeError::InvalidParameter("cycle length < 4".into()));
    }
    let verts: Vec<usize> = (0..len).collect();
    scheme_from_relations(&verts, |&x, &y| {
        let d = ((x as i64 - y as i64).rem_euclid(len as i64))
            .min((y as i64 - x as i64).rem_euclid(len as i64));
        match d {
            0 => (0, 0),
            1 => (1, 0),
            _ => (0, 1),
        }
    })
}

/// The Hamming scheme `H(2, q)`: words of length 2 over a `q`-letter
/// alphabet, classified by Hamming distance; labels `(0,0), (1,0), (0,1)`.
pub fn hamming2(q: u32) -> Result<VertexScheme> {
    if q < 2 {
        return Err(SchemeError::InvalidParameter("alphabet size < 2".into()));
    }
    let verts: Vec<(u32, u32)> = (0..q).flat_map(|a| (0..q).map(move |b| (a, b))).collect();
    scheme_from_relations(&verts, |&x, &y| {
        let d = u32::from(x.0 != y.0) + u32::from(x.1 != y.1);
        match d {
            0 => (0, 0),
            1 => (1, 0),
            _ => (0, 1),
        }
    })
}

/// The Petersen graph's two-class scheme (2-subsets of a 5-set, adjacent
/// when disjoint).
pub fn petersen_scheme() -> Result<VertexScheme> {
    let mut verts = Vec::new();
    for a in 0..5u8 {
        for b in (a + 1)..5 {
            verts.push((a, b));
        }
    }
    scheme_from_relations(&verts, |&x, &y| {
        if x == y {
            (0, 0)
        } else if x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1 {
            (1, 0)
        } else {
            (0, 1)
        }
    })
}

/// Direct product: `A_(i,j) = A_i (x) A~_j`, classes indexed by the
/// ordinal class positions of the two factors, domain the full rectangle.
pub fn direct_product(
    s1: &VertexScheme,
    s2: &VertexScheme,
    limits: &Limits,
) -> Result<VertexScheme> {
    let (v1, v2) = (s1.vertex_count(), s2.vertex_count());
    let v = v1 * v2;
    limits.check(v, "direct product")?;
    let (n1, n2) = (s1.class_count(), s2.class_count());
    let domain = Domain::rectangle(n1 as u32 - 1, n2 as u32 - 1);
    let mut by_point = BTreeMap::new();
    for (ci, &p1) in s1.domain().points().iter().enumerate() {
        let r1 = s1.relation_bytes(p1).unwrap();
        for (cj, &p2) in s2.domain().points().iter().enumerate() {
            let r2 = s2.relation_bytes(p2).unwrap();
            let mut rel = vec![0u8; v * v];
            for x1 in 0..v1 {
                for y1 in 0..v1 {
                    if r1[x1 * v1 + y1] == 0 {
                        continue;
                    }
                    for x2 in 0..v2 {
                        let x = x1 * v2 + x2;
                        let row2 = &r2[x2 * v2..(x2 + 1) * v2];
                        for (y2, &bit) in row2.iter().enumerate() {
                            if bit == 1 {
                                rel[x * v + y1 * v2 + y2] = 1;
                            }
                        }
                    }
                }
            }
            by_point.insert((ci as u32, cj as u32), rel);
        }
    }
    VertexScheme::from_matrices(domain, v, by_point)
}

/// Symmetrization of a two-class scheme: vertices are `n`-tuples of base
/// vertices, and a pair lands in class `(i,j)` when `i` coordinates lie in
/// base class 1 and `j` in base class 2. Tuples are encoded big-endian in
/// base `v`, with vertex 0 the all-zeros tuple.
pub fn symmetrize(base: &VertexScheme, n: u32, limits: &Limits) -> Result<VertexScheme> {
    if base.class_count() != 3 {
        return Err(SchemeError::InvalidParameter(format!(
            "symmetrization needs a two-class base, got {} classes",
            base.class_count() - 1
        )));
    }
    if n == 0 {
        return Err(SchemeError::InvalidParameter("n = 0".into()));
    }
    let bv = base.vertex_count();
    let v = bv
        .checked_pow(n)
        .ok_or_else(|| SchemeError::ResourceLimit("tuple count overflows".into()))?;
    limits.check(v, "symmetrization")?;
    let table = base.class_table()?;
    let digits: Vec<Vec<u16>> = (0..v)
        .map(|mut x| {
            let mut d = vec![0u16; n as usize];
            for slot in (0..n as usize).rev() {
                d[slot] = (x % bv) as u16;
                x /= bv;
            }
            d
        })
        .collect();
    let verts: Vec<usize> = (0..v).collect();
    scheme_from_relations(&verts, |&x, &y| {
        let (dx, dy) = (&digits[x], &digits[y]);
        let mut i = 0u32;
        let mut j = 0u32;
        for t in 0..n as usize {
            match table[dx[t] as usize * bv + dy[t] as usize] {
                1 => i += 1,
                2 => j += 1,
                _ => {}
            }
        }
        (i, j)
    })
}

/// The ordered Hamming scheme: symmetrization of `H(2, q)`.
pub fn ordered_hamming(q: u32, n: u32, limits: &Limits) -> Result<VertexScheme> {
    symmetrize(&hamming2(q)?, n, limits)
}

/// The non-binary Johnson scheme `J_r(n, k)` on weight-`k` words over an
/// `r`-letter alphabet: a pair with `e` equal nonzero positions and `c`
/// common nonzero positions lands in class `(c - e, k - c)`.
pub fn nonbinary_johnson(r: u32, n: u32, k: u32, limits: &Limits) -> Result<VertexScheme> {
    if r < 3 {
        return Err(SchemeError::InvalidParameter(
            "alphabet size must be at least 3".into(),
        ));
    }
    if k > n {
        return Err(SchemeError::InvalidParameter(format!("k = {k} > n = {n}")));
    }
    let count = crate::polyfam::binom(n as i64, k)
        * pow_i(&int(r as i64 - 1), k as i64);
    let v = crate::exact::to_i64(&count)
        .ok_or_else(|| SchemeError::ResourceLimit("vertex count overflows".into()))?
        as usize;
    limits.check(v, "non-binary Johnson scheme")?;
    let verts = weight_k_words(r, n, k);
    debug_assert_eq!(verts.len(), v);
    let kk = k;
    scheme_from_relations(&verts, move |x, y| {
        let mut e = 0u32;
        let mut c = 0u32;
        for (a, b) in x.iter().zip(y.iter()) {
            if *a != 0 && *b != 0 {
                c += 1;
                if a == b {
                    e += 1;
                }
            }
        }
        (c - e, kk - c)
    })
}

fn weight_k_words(r: u32, n: u32, k: u32) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut support = Vec::new();
    fn supports(start: u32, n: u32, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for s in start..=(n - left) {
            current.push(s);
            supports(s + 1, n, left - 1, current, out);
            current.pop();
        }
    }
    let mut supps = Vec::new();
    supports(0, n, k, &mut support, &mut supps);
    for supp in supps {
        let mut values = vec![1u8; k as usize];
        loop {
            let mut word = vec![0u8; n as usize];
            for (slot, &pos) in supp.iter().enumerate() {
                word[pos as usize] = values[slot];
            }
            out.push(word);
            // increment mixed-radix counter over {1..r-1}
            let mut carry = true;
            for v in values.iter_mut().rev() {
                if !carry {
                    break;
                }
                if u32::from(*v) == r - 1 {
                    *v = 1;
                } else {
                    *v += 1;
                    carry = false;
                }
            }
            if carry {
                break;
            }
        }
    }
    out
}

/// Report of [`nbj_projection`]: the class relabeling and the witness that
/// the restriction is exactly `J_3(N, N-k)` under the canonical vertex
/// encoding (block `00 -> 0`, `01 -> 1`, `10 -> 2`).
#[derive(Clone, Debug)]
pub struct ProjectionReport {
    pub n: u32,
    pub k: u32,
    pub subset_size: usize,
    /// ordered-Hamming class -> non-binary-Johnson class
    pub class_map: BTreeMap<Point, Point>,
    pub isomorphic: bool,
}

/// Restricts the ordered Hamming scheme over the binary alphabet to the
/// neighborhood `W_k` of vertex 0 in relation `(N-k, 0)` and matches the
/// restriction against `J_3(N, N-k)`.
pub fn nbj_projection(
    oh: &VertexScheme,
    k: u32,
    limits: &Limits,
) -> Result<(VertexScheme, ProjectionReport)> {
    let v = oh.vertex_count();
    let mut n = 0u32;
    while 4usize.pow(n + 1) <= v {
        n += 1;
    }
    if 4usize.pow(n) != v || oh.domain() != &Domain::triangle(n) {
        return Err(SchemeError::InvalidParameter(
            "input is not an ordered Hamming scheme over the binary alphabet".into(),
        ));
    }
    if 2 * k > n {
        return Err(SchemeError::InvalidParameter(format!(
            "k = {k} exceeds N/2 with N = {n}"
        )));
    }
    let marker = oh
        .relation_bytes((n - k, 0))
        .ok_or_else(|| SchemeError::InvalidParameter(format!("no class ({},0)", n - k)))?;
    let subset: Vec<usize> = (0..v).filter(|&w| marker[w] == 1).collect();
    // canonical encoding: base-4 digits of each subset vertex are blocks
    // 00/01/10, read as letters 0/1/2
    let mut words = Vec::with_capacity(subset.len());
    for &w in &subset {
        let mut x = w;
        let mut word = vec![0u8; n as usize];
        for slot in (0..n as usize).rev() {
            let digit = (x % 4) as u8;
            x /= 4;
            if digit == 3 {
                return Err(SchemeError::VerificationFailed(
                    "subset vertex contains a block at distance 2 from the base".into(),
                ));
            }
            word[slot] = digit;
        }
        words.push(word);
    }
    let target = nonbinary_johnson(3, n, n - k, limits)?;
    let target_words = weight_k_words(3, n, n - k);
    let index_of: std::collections::HashMap<Vec<u8>, usize> = target_words
        .into_iter()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let mapped: Vec<usize> = words
        .iter()
        .map(|w| {
            index_of.get(w).copied().ok_or_else(|| {
                SchemeError::VerificationFailed(format!(
                    "encoded vertex {w:?} is not a weight-{} word",
                    n - k
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let oh_table = oh.class_table()?;
    let nbj_table = target.class_table()?;
    let tv = target.vertex_count();
    if mapped.len() != tv {
        return Err(SchemeError::VerificationFailed(format!(
            "subset has {} vertices but J_3({n},{}) has {tv}",
            mapped.len(),
            n - k
        )));
    }
    let mut class_map: BTreeMap<Point, Point> = BTreeMap::new();
    for (a, (&wa, &ma)) in subset.iter().zip(&mapped).enumerate() {
        for (&wb, &mb) in subset.iter().zip(&mapped).skip(a) {
            let oc = oh.domain().point_at(oh_table[wa * v + wb] as usize);
            let nc = target.domain().point_at(nbj_table[ma * tv + mb] as usize);
            match class_map.get(&oc) {
                None => {
                    class_map.insert(oc, nc);
                }
                Some(&prev) if prev == nc => {}
                Some(&prev) => {
                    return Err(SchemeError::VerificationFailed(format!(
                        "restricted class {oc:?} maps to both {prev:?} and {nc:?}"
                    )));
                }
            }
        }
    }
    // the surviving classes must be exactly the even-first-index ones and
    // must map onto the whole target domain
    let mut images: Vec<Point> = class_map.values().copied().collect();
    images.sort_unstable();
    images.dedup();
    let isomorphic = images.len() == target.domain().len()
        && class_map.keys().all(|&(a, _)| a % 2 == 0);
    if !isomorphic {
        return Err(SchemeError::VerificationFailed(
            "restriction does not match the non-binary Johnson scheme".into(),
        ));
    }
    // rebuild the restriction with target labels and the target vertex order
    let mut reorder = vec![0usize; tv];
    for (slot, &m) in mapped.iter().enumerate() {
        reorder[m] = subset[slot];
    }
    let mut by_point: BTreeMap<Point, Vec<u8>> = BTreeMap::new();
    for (&oc, &nc) in &class_map {
        let bytes = oh.relation_bytes(oc).unwrap();
        let mut rel = vec![0u8; tv * tv];
        for x in 0..tv {
            for y in 0..tv {
                rel[x * tv + y] = bytes[reorder[x] * v + reorder[y]];
            }
        }
        by_point.insert(nc, rel);
    }
    let restricted = VertexScheme::from_matrices(target.domain().clone(), tv, by_point)?;
    if restricted != target {
        return Err(SchemeError::VerificationFailed(
            "restriction differs from the non-binary Johnson scheme".into(),
        ));
    }
    let report = ProjectionReport {
        n,
        k,
        subset_size: subset.len(),
        class_map,
        isomorphic,
    };
    Ok((restricted, report))
}

/// Class labels of the generalized 24-cell in presentation order
/// `A_0..A_4`: the published relabeling is `A_00 = A_0`, `A_10 = A_2`,
/// `A_01 = A_3`, `A_11 = A_1`, `A_20 = A_4`.
pub const CELL24_LABELS: [Point; 5] = [(0, 0), (1, 1), (1, 0), (0, 1), (2, 0)];

/// The generalized 24-cell family with parameters `(s, l)`. All L-matrix
/// entries must evaluate to nonnegative integers; `(s, l) = (1/2, 2)` is
/// the 24-cell itself.
pub fn cell24(s: &Scalar, l: &Scalar) -> Result<AlgebraScheme> {
    let one = Scalar::one();
    let zero = Scalar::zero();
    let four_s = int(4) * s;
    let c = (&four_s - &one) * (&four_s + &one); // (4s-1)(4s+1)
    let a = int(16) * l * s * s; // 16 l s^2
    let h = int(8) * l * s * s; // 8 l s^2
    let d_plus = int(2) * (l - &one) * s * (&four_s + &one); // 2(l-1)s(4s+1)
    let d_minus = int(2) * (l - &one) * s * (&four_s - &one); // 2(l-1)s(4s-1)
    let mid = int(32) * s * s - int(4); // 32 s^2 - 4

    let l0 = Matrix::identity(5);
    let l1 = Matrix::from_rows(vec![
        vec![zero.clone(), a.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![one.clone(), d_plus.clone(), c.clone(), d_minus.clone(), zero.clone()],
        vec![zero.clone(), h.clone(), zero.clone(), h.clone(), zero.clone()],
        vec![zero.clone(), d_minus.clone(), c.clone(), d_plus.clone(), one.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), a.clone(), zero.clone()],
    ])?;
    let two_c = int(2) * &c;
    let l2 = Matrix::from_rows(vec![
        vec![zero.clone(), zero.clone(), two_c.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), c.clone(), zero.clone(), c.clone(), zero.clone()],
        vec![one.clone(), zero.clone(), mid.clone(), zero.clone(), one.clone()],
        vec![zero.clone(), c.clone(), zero.clone(), c.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), two_c.clone(), zero.clone(), zero.clone()],
    ])?;
    let l3 = Matrix::from_rows(vec![
        vec![zero.clone(), zero.clone(), zero.clone(), a.clone(), zero.clone()],
        vec![zero.clone(), d_minus.clone(), c.clone(), d_plus.clone(), one.clone()],
        vec![zero.clone(), h.clone(), zero.clone(), h.clone(), zero.clone()],
        vec![one.clone(), d_plus.clone(), c.clone(), d_minus.clone(), zero.clone()],
        vec![zero.clone(), a.clone(), zero.clone(), zero.clone(), zero.clone()],
    ])?;
    let l4 = Matrix::from_fn(5, 5, |r, c| if r + c == 4 { one.clone() } else { zero.clone() });

    let tables = [l0, l1, l2, l3, l4];
    for t in &tables {
        for (_, _, e) in t.entries() {
            if !crate::exact::is_integer(e) || e.is_negative() {
                return Err(SchemeError::InvalidParameter(format!(
                    "L-matrix entry {e} is not a nonnegative integer at (s, l) = ({s}, {l})"
                )));
            }
        }
    }

    let domain = Domain::new(CELL24_LABELS)?;
    let mut tensor = IntersectionTensor::empty(domain.clone());
    for (a_idx, table) in tables.iter().enumerate() {
        let mut lm = Matrix::zero(5, 5);
        for k_idx in 0..5 {
            for j_idx in 0..5 {
                let val = &table[(k_idx, j_idx)];
                if !val.is_zero() {
                    let row = domain.position(CELL24_LABELS[k_idx]).unwrap();
                    let col = domain.position(CELL24_LABELS[j_idx]).unwrap();
                    lm[(row, col)] = val.clone();
                }
            }
        }
        tensor.insert_row(CELL24_LABELS[a_idx], lm)?;
    }
    tensor.check_commutativity()?;
    tensor.check_homomorphism()?;
    Ok(AlgebraScheme::new(tensor))
}

/// Table order of the symplectic L-matrices.
const SYMPL_ORDER: [Point; 6] = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2)];

/// Isotropic 2-spaces of a symplectic form: the published 6x6 tables for
/// `L_10` and `L_01`, with `nu` standing in for the exponent parameter
/// (entries involve `q^{2 nu - 3} .. q^{2 nu - 6}`). Partial tensor with
/// rows `(1,0)` and `(0,1)` over the triangle `{i + j <= 2}`.
pub fn symplectic_d2(q: u32, nu: u32) -> Result<AlgebraScheme> {
    if q < 2 {
        return Err(SchemeError::InvalidParameter("q < 2".into()));
    }
    if nu < 3 {
        return Err(SchemeError::InvalidParameter("nu < 3".into()));
    }
    let qq = int(q as i64);
    let e = |k: i64| pow_i(&qq, 2 * nu as i64 + k); // q^{2 nu + k}
    let one = Scalar::one();
    let qp1 = &qq + &one;
    let qm1 = &qq - &one;

    // rows and columns in SYMPL_ORDER; (L)_{kl,ij} = p_{gen,ij}^{kl}
    let l10_rows = vec![
        vec![int(0), &qp1 * e(-3), int(0), int(0), int(0), int(0)],
        vec![
            int(1),
            &qm1 * e(-4),
            e(-4) - &one,
            int(0),
            e(-2),
            int(0),
        ],
        vec![int(0), &qm1 * e(-4), e(-4), e(-2), int(0), int(0)],
        vec![
            int(0),
            int(0),
            qq.clone(),
            (int(2) * &qq * &qq - &one) * e(-5),
            &qm1 * e(-3),
            &qq * (e(-6) - &one),
        ],
        vec![
            int(0),
            qp1.clone(),
            int(0),
            &qp1 * (e(-4) - &one),
            (&qq * &qq - &one) * e(-4),
            int(0),
        ],
        vec![
            int(0),
            int(0),
            int(0),
            (&qq * &qq - &one) * &qp1 * e(-5),
            int(0),
            &qp1 * e(-5),
        ],
    ];
    let l01_rows = vec![
        vec![
            int(0),
            int(0),
            &qp1 * (e(-3) - &qq) / &qm1,
            int(0),
            int(0),
            int(0),
        ],
        vec![
            int(0),
            e(-4) - &one,
            (e(-4) - &one) / &qm1,
            &qq * &qq * (e(-4) - &one) / &qm1,
            int(0),
            int(0),
        ],
        vec![
            int(1),
            e(-4),
            (e(-4) - &one) / &qm1 + &qq * &qq - int(2),
            e(-3),
            int(0),
            &qq * &qq * &qq * (e(-6) - &one) / &qm1,
        ],
        vec![
            int(0),
            qq.clone(),
            int(1),
            (int(2) * &qq * &qq - &one) * (e(-5) - &one) / &qm1,
            e(-3),
            &qq * (e(-6) - &one) / &qm1,
        ],
        vec![
            int(0),
            int(0),
            int(0),
            &qp1 * (e(-4) - &one) / &qm1,
            &qp1 * (e(-4) - &one),
            int(0),
        ],
        vec![
            int(0),
            int(0),
            &qp1 * &qp1,
            &qp1 * &qp1 * e(-5),
            int(0),
            &qp1 * (e(-5) - &qq * &qq - &qq + &one) / &qm1,
        ],
    ];

    let domain = Domain::triangle(2);
    let mut tensor = IntersectionTensor::empty(domain.clone());
    for (gen, rows) in [((1, 0), l10_rows), ((0, 1), l01_rows)] {
        let mut lm = Matrix::zero(6, 6);
        for (r, row) in rows.into_iter().enumerate() {
            for (c, val) in row.into_iter().enumerate() {
                if !val.is_zero() {
                    let rp = domain.position(SYMPL_ORDER[r]).unwrap();
                    let cp = domain.position(SYMPL_ORDER[c]).unwrap();
                    lm[(rp, cp)] = val;
                }
            }
        }
        tensor.insert_row(gen, lm)?;
    }
    Ok(AlgebraScheme::new(tensor))
}

/// Parameters of an attenuated-space scheme: `d`-subspaces of a
/// `(D+L)`-space meeting a fixed `L`-subspace trivially. `q` is validated
/// as an integer `>= 2` only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttenuatedParams {
    pub q: u32,
    pub d: u32,
    pub big_d: u32,
    pub l: u32,
}

impl AttenuatedParams {
    pub fn new(q: u32, d: u32, big_d: u32, l: u32) -> Result<Self> {
        if q < 2 {
            return Err(SchemeError::InvalidParameter("q < 2".into()));
        }
        if d == 0 || d > big_d {
            return Err(SchemeError::InvalidParameter(format!(
                "need 1 <= d <= D, got d = {d}, D = {big_d}"
            )));
        }
        Ok(Self { q, d, big_d, l })
    }

    /// `{j <= min(d, D-d), i+j <= d}` when `L >= d`; for `L < d` the
    /// horizontal reach shrinks to `i <= min(d-j, L)` and the domain stops
    /// being `(1,0)`-compatible.
    pub fn domain(&self) -> Domain {
        let jmax = self.d.min(self.big_d - self.d);
        let mut pts = Vec::new();
        for j in 0..=jmax {
            let imax = if self.l >= self.d {
                self.d - j
            } else {
                (self.d - j).min(self.l)
            };
            for i in 0..=imax {
                pts.push((i, j));
            }
        }
        Domain::new(pts).unwrap()
    }
}

/// The `(1,0)` and `(0,1)` rows of the attenuated-space scheme, from the
/// published q-number coefficient formulas. Targets outside the domain are
/// dropped.
///
/// In the `L < d` regime the formulas are kept as printed, but the
/// truncated recurrences no longer correspond exactly to the spectrum at
/// the `i = L` boundary; only the domain shape (and its incompatibility)
/// is meaningful there.
pub fn attenuated_rows(p: &AttenuatedParams) -> Result<AlgebraScheme> {
    let domain = p.domain();
    let q = int(p.q as i64);
    let (d, big_d, l) = (p.d as i64, p.big_d as i64, p.l as i64);
    let qn = |n: i64| q_number(n, &q);
    let qp = |e: i64| pow_i(&q, e);
    let one = Scalar::one();

    let n_pts = domain.len();
    let mut l10 = Matrix::zero(n_pts, n_pts);
    let mut l01 = Matrix::zero(n_pts, n_pts);
    for &(iu, ju) in domain.points() {
        let (i, j) = (iu as i64, ju as i64);
        let col = domain.position((iu, ju)).unwrap();
        let x_terms: Vec<((i64, i64), Scalar)> = vec![
            (
                (i - 1, j),
                (qp(l) - qp(i - 1)) * qn(d - i - j + 1) * qp(i + j - 1),
            ),
            ((i + 1, j), qn(i + 1) * qp(i + j)),
            (
                (i, j),
                (qp(l) - &one) * qn(i + j) - qn(i) * qp(i + j - 1)
                    + (&q - &one) * qp(i + j) * qn(d - i - j) * qn(i),
            ),
        ];
        let y_terms: Vec<((i64, i64), Scalar)> = vec![
            (
                (i, j - 1),
                qp(2 * j + i + l - 1) * qn(d - i - j + 1) * qn(big_d - d - j + 1),
            ),
            ((i, j + 1), qn(j + 1) * qn(j + 1) * qp(i)),
            (
                (i - 1, j),
                qn(d - i - j + 1) * qn(j) * (qp(l) - qp(i - 1)) * qp(i + j),
            ),
            ((i + 1, j), qn(i + 1) * qn(j) * qp(i + j + 1)),
            ((i - 1, j + 1), qn(j + 1) * qn(j + 1) * (qp(l) - qp(i - 1))),
            (
                (i + 1, j - 1),
                qn(i + 1) * qn(big_d - d - j + 1) * qp(2 * j + l - 1),
            ),
            (
                (i, j),
                qn(j)
                    * (qn(big_d - d - j) * qp(l + 1 + j)
                        + qn(d - i - j) * qp(j + 2 * i + 1)
                        + qn(i) * (qp(l) - qp(i - 1)) * qp(j + 1)
                        + qn(j) * (&q - &one) * qp(l)),
            ),
        ];
        for (target, matrix) in [(x_terms, &mut l10), (y_terms, &mut l01)] {
            for ((m, n), coeff) in target {
                if m < 0 || n < 0 || coeff.is_zero() {
                    continue;
                }
                if let Some(row) = domain.position((m as u32, n as u32)) {
                    matrix[(row, col)] = coeff;
                }
            }
        }
    }
    let mut tensor = IntersectionTensor::empty(domain.clone());
    tensor.insert_row((1, 0), l10)?;
    tensor.insert_row((0, 1), l01)?;
    Ok(AlgebraScheme::new(tensor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivariate::{metric_test, minimal_type};
    use crate::orders::TypeParams;

    #[test]
    fn cycle_and_hamming_bases() {
        let c4 = cycle_scheme(4).unwrap();
        assert!(c4.verify_axioms().all_passed());
        let h23 = hamming2(3).unwrap();
        assert!(h23.verify_axioms().all_passed());
        let t = h23.intersection_numbers().unwrap();
        // H(2,q): k = 2(q-1), b = q-1, c = 2
        assert_eq!(t.valence((1, 0)).unwrap(), int(4));
        assert_eq!(t.entry((1, 0), (0, 1), (1, 0)).unwrap(), int(2)); // b = p_{1,2}^1
        assert_eq!(t.entry((1, 0), (1, 0), (0, 1)).unwrap(), int(2)); // c = p_{1,1}^2
    }

    #[test]
    fn direct_product_of_trivial_is_relabeling() {
        let point = scheme_from_relations(&[0usize], |_, _| (0, 0)).unwrap();
        let c4 = cycle_scheme(4).unwrap();
        let prod = direct_product(&point, &c4, &Limits::default()).unwrap();
        assert_eq!(prod.vertex_count(), 4);
        assert_eq!(prod.class_count(), 3);
        for (ci, &p) in c4.domain().points().iter().enumerate() {
            assert_eq!(
                prod.relation_bytes((0, ci as u32)).unwrap(),
                c4.relation_bytes(p).unwrap()
            );
        }
    }

    #[test]
    fn product_kron_structure() {
        let c4 = cycle_scheme(4).unwrap();
        let prod = direct_product(&c4, &c4, &Limits::default()).unwrap();
        assert!(prod.verify_axioms().all_passed());
        let a = c4.adjacency_matrix((1, 0)).unwrap();
        let b = c4.adjacency_matrix((0, 1)).unwrap();
        assert_eq!(prod.adjacency_matrix((1, 2)).unwrap(), a.kron(&b));
    }

    #[test]
    fn symmetrize_n1_is_base_relabeled() {
        let c4 = cycle_scheme(4).unwrap();
        let s = symmetrize(&c4, 1, &Limits::default()).unwrap();
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(
            s.domain().points(),
            &[(0, 0), (1, 0), (0, 1)]
        );
        assert_eq!(
            s.relation_bytes((1, 0)).unwrap(),
            c4.relation_bytes((1, 0)).unwrap()
        );
    }

    #[test]
    fn symmetrized_c4_passes_metric_at_half_half() {
        let c4 = cycle_scheme(4).unwrap();
        let s = symmetrize(&c4, 2, &Limits::default()).unwrap();
        assert_eq!(s.vertex_count(), 16);
        assert!(s.verify_axioms().all_passed());
        let t = s.intersection_numbers().unwrap();
        let verdict = metric_test(&t, s.domain(), &TypeParams::from_ints(1, 2, 1, 2)).unwrap();
        assert!(verdict.passed, "{:?}", verdict.violations);
    }

    #[test]
    fn symmetrize_matches_recurrence_formulas() {
        // base H(2,3): (k, b, c) = (4, 2, 2), N = 2
        let s = ordered_hamming(3, 2, &Limits::default()).unwrap();
        let t = s.intersection_numbers().unwrap();
        let (k, b, c) = (int(4), int(2), int(2));
        for &at in s.domain().points() {
            for (y_row, gen) in [(false, (1, 0)), (true, (0, 1))] {
                let expect = symmetrize_recurrence(&k, &b, &c, 2, at, y_row);
                for &target in s.domain().points() {
                    let got = t.entry(gen, at, target).unwrap();
                    let want = expect.get(&target).cloned().unwrap_or_else(Scalar::zero);
                    assert_eq!(got, want, "gen {gen:?} at {at:?} target {target:?}");
                }
            }
        }
    }

    #[test]
    fn ordered_hamming_q2_has_three_term_y_recurrence() {
        let s = ordered_hamming(2, 2, &Limits::default()).unwrap();
        let t = s.intersection_numbers().unwrap();
        for &(i, j) in s.domain().points() {
            let support = t.support((0, 1), (i, j)).unwrap();
            for (m, n) in support {
                assert_eq!(m, i, "support of y-row at ({i},{j}) strays to ({m},{n})");
                assert!(n + 1 >= j && n <= j + 1);
            }
        }
        let report = minimal_type(&t, s.domain()).unwrap();
        assert_eq!(
            report.canonical,
            Some(TypeParams::from_ints(0, 1, 1, 2))
        );
    }

    #[test]
    fn nbj_small_parameters() {
        let s = nonbinary_johnson(3, 4, 2, &Limits::default()).unwrap();
        assert_eq!(s.vertex_count(), 24);
        assert!(s.verify_axioms().all_passed());
        let t = s.intersection_numbers().unwrap();
        assert_eq!(t.valence((1, 0)).unwrap(), int(2));
        assert_eq!(t.valence((0, 1)).unwrap(), int(8));
        // x-lowering coefficient: (k-i-j+1)(r-2) at (i,j) = (1,0)
        assert_eq!(t.entry((1, 0), (1, 0), (0, 0)).unwrap(), int(2));
    }

    #[test]
    fn nbj_rejects_binary_alphabet() {
        assert!(nonbinary_johnson(2, 4, 2, &Limits::default()).is_err());
    }

    #[test]
    fn projection_n2_k1() {
        let oh = ordered_hamming(2, 2, &Limits::default()).unwrap();
        let (restricted, report) = nbj_projection(&oh, 1, &Limits::default()).unwrap();
        assert!(report.isomorphic);
        assert_eq!(report.subset_size, 4);
        assert_eq!(restricted.vertex_count(), 4);
        assert!(restricted.verify_axioms().all_passed());
        // J_3(2,1): classes (0,0),(1,0),(0,1)
        assert_eq!(restricted.domain().points(), &[(0, 0), (1, 0), (0, 1)]);
    }

    #[test]
    fn projection_k0_full_weight() {
        let oh = ordered_hamming(2, 2, &Limits::default()).unwrap();
        let (restricted, report) = nbj_projection(&oh, 0, &Limits::default()).unwrap();
        assert!(report.isomorphic);
        assert_eq!(restricted.vertex_count(), 4); // J_3(2,2): 2^2 words
    }

    #[test]
    fn cell24_structure() {
        let s = cell24(&crate::exact::ratio(1, 2), &int(2)).unwrap();
        let t = &s.tensor;
        assert_eq!(t.valence((1, 0)).unwrap(), int(6));
        assert_eq!(t.valence((0, 1)).unwrap(), int(8));
        assert_eq!(t.valence((1, 1)).unwrap(), int(8));
        assert_eq!(t.valence((2, 0)).unwrap(), int(1));
        assert_eq!(t.vertex_count().unwrap(), int(24));
        // top row of the x generator's L-matrix carries the valence 6
        let l10 = t.lmatrix((1, 0)).unwrap();
        let pos00 = s.domain.position((0, 0)).unwrap();
        let pos10 = s.domain.position((1, 0)).unwrap();
        assert_eq!(l10[(pos00, pos10)], int(6));
    }

    #[test]
    fn cell24_rejects_bad_parameters() {
        assert!(cell24(&crate::exact::ratio(1, 3), &int(2)).is_err());
    }

    #[test]
    fn symplectic_entry_example() {
        let s = symplectic_d2(2, 3).unwrap();
        // (L_10) at row (0,0), column (1,0) is (q+1) q^{2 nu - 3} = 24
        assert_eq!(s.tensor.entry((1, 0), (1, 0), (0, 0)).unwrap(), int(24));
    }

    #[test]
    fn attenuated_domain_shapes() {
        let p = AttenuatedParams::new(2, 2, 5, 2).unwrap();
        assert_eq!(
            p.domain().points(),
            &[(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        );
        let p = AttenuatedParams::new(2, 2, 4, 1).unwrap();
        assert_eq!(
            p.domain().points(),
            &[(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)]
        );
    }

    #[test]
    fn attenuated_raising_coefficient() {
        let p = AttenuatedParams::new(2, 2, 5, 2).unwrap();
        let s = attenuated_rows(&p).unwrap();
        // coefficient of A_{i+1,j} in A_10 A_ij is [i+1]_q q^{i+j}
        let got = s.tensor.entry((1, 0), (1, 0), (2, 0)).unwrap();
        assert_eq!(got, int(3) * int(2)); // [2]_2 * 2^1
    }

    #[test]
    fn resource_guard_applies() {
        let limits = Limits { max_vertices: 10 };
        assert!(ordered_hamming(2, 2, &limits).is_err());
    }
}
