//! Exact rational linear algebra: elimination, kernels, inverses, and
//! rational eigenvalue extraction for the square matrices this crate meets
//! (regular representations of Bose-Mesner algebras, so at most a few dozen
//! rows).

use super::{Matrix, Scalar};
use crate::error::{Result, SchemeError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form. Returns the reduced matrix and the pivot
/// column of each nonzero row.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        if pivot_row != rank {
            for c in 0..cols {
                let tmp = a[(pivot_row, c)].clone();
                a[(pivot_row, c)] = a[(rank, c)].clone();
                a[(rank, c)] = tmp;
            }
        }
        let inv = Scalar::one() / a[(rank, col)].clone();
        for c in col..cols {
            let v = &a[(rank, c)] * &inv;
            a[(rank, c)] = v;
        }
        for r in 0..rows {
            if r != rank && !a[(r, col)].is_zero() {
                let factor = a[(r, col)].clone();
                for c in col..cols {
                    let v = &a[(r, c)] - &(&a[(rank, c)] * &factor);
                    a[(r, c)] = v;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (a, pivots)
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[(row, f)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    if !m.is_square() {
        return None;
    }
    let mut aug = Matrix::zero(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, n + r)] = Scalar::one();
    }
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
}

/// Solve `basis * x = target` for each column of `target`, where `basis`
/// has full column rank. Returns the coefficient matrix, or `None` when a
/// column of `target` lies outside the span.
pub fn solve_in_span(basis: &Matrix, target: &Matrix) -> Option<Matrix> {
    let (n, k) = (basis.rows(), basis.cols());
    debug_assert_eq!(target.rows(), n);
    let t = target.cols();
    let mut aug = Matrix::zero(n, k + t);
    for r in 0..n {
        for c in 0..k {
            aug[(r, c)] = basis[(r, c)].clone();
        }
        for c in 0..t {
            aug[(r, k + c)] = target[(r, c)].clone();
        }
    }
    let (red, pivots) = rref(&aug);
    if pivots.len() < k || pivots.iter().take(k).enumerate().any(|(i, &p)| p != i) {
        return None; // basis not of full column rank
    }
    // rows beyond rank k must be zero on the target side
    for r in k..n {
        for c in 0..t {
            if !red[(r, k + c)].is_zero() {
                return None;
            }
        }
    }
    Some(Matrix::from_fn(k, t, |r, c| red[(r, k + c)].clone()))
}

/// Coefficients `c_0..=c_n` of the characteristic polynomial
/// `det(xI - M) = sum c_k x^k` (monic), by the Faddeev-LeVerrier recursion.
pub fn char_poly(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut acc = Matrix::identity(n);
    for k in 1..=n {
        acc = m * &acc;
        let c = -(acc.trace() / super::int(k as i64));
        coeffs[n - k] = c.clone();
        for i in 0..n {
            acc[(i, i)] += &c;
        }
    }
    coeffs
}

/// All eigenvalues of `m` with multiplicity, provided every root of the
/// characteristic polynomial is rational; otherwise a
/// [`SchemeError::NonRationalSpectrum`] error.
///
/// The matrix is scaled to integer entries first, so its rational
/// eigenvalues are integers over the scaling factor; those are found by an
/// exact scan over the Gershgorin bound.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Vec<(Scalar, usize)>> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    // common denominator
    let mut den = BigInt::one();
    for (_, _, v) in m.entries() {
        den = den.lcm(v.denom());
    }
    let scale = Scalar::from_integer(den.clone());
    let scaled = m.scale(&scale);
    // Gershgorin bound on |eigenvalue| of the scaled matrix
    let mut bound = BigInt::zero();
    for r in 0..n {
        let s: BigInt = scaled.row(r).iter().map(|v| v.numer().abs()).sum();
        if s > bound {
            bound = s.clone();
        }
    }
    let coeffs: Vec<BigInt> = char_poly(&scaled)
        .into_iter()
        .map(|c| {
            debug_assert!(c.denom().is_one());
            c.numer().clone()
        })
        .collect();

    let mut poly = coeffs;
    let mut found: Vec<(Scalar, usize)> = Vec::new();
    // strip zero roots
    let mut zero_mult = 0;
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        found.push((Scalar::zero(), zero_mult));
    }
    let mut candidate = -bound.clone();
    while candidate <= bound && poly.len() > 1 {
        if candidate.is_zero() {
            candidate += 1;
            continue;
        }
        let mut mult = 0;
        loop {
            let (quot, rem) = synthetic_div(&poly, &candidate);
            if rem.is_zero() {
                poly = quot;
                mult += 1;
                if poly.len() == 1 {
                    break;
                }
            } else {
                break;
            }
        }
        if mult > 0 {
            found.push((
                Scalar::new(candidate.clone(), den.clone()),
                mult,
            ));
        }
        candidate += 1;
    }
    let total: usize = found.iter().map(|(_, m)| m).sum();
    if total != n {
        return Err(SchemeError::NonRationalSpectrum(format!(
            "only {total} of {n} eigenvalues are rational"
        )));
    }
    Ok(found)
}

/// Divide the polynomial (coefficients low-to-high) by `(x - r)`.
/// Returns quotient coefficients and the remainder.
fn synthetic_div(coeffs: &[BigInt], r: &BigInt) -> (Vec<BigInt>, BigInt) {
    let n = coeffs.len();
    let mut quot = vec![BigInt::zero(); n - 1];
    let mut carry = BigInt::zero();
    for k in (0..n).rev() {
        let value = &coeffs[k] + &carry;
        if k == 0 {
            return (quot, value);
        }
        quot[k - 1] = value.clone();
        carry = value * r;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn char_poly_2x2() {
        let m = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(2)]]).unwrap();
        // det(xI - M) = x^2 - 4x + 3
        assert_eq!(char_poly(&m), vec![int(3), int(-4), int(1)]);
    }

    #[test]
    fn eigenvalues_integer_and_scaled() {
        let m = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(2)]]).unwrap();
        let evs = rational_eigenvalues(&m).unwrap();
        assert_eq!(evs, vec![(int(1), 1), (int(3), 1)]);
        let half = m.scale(&ratio(1, 2));
        let evs = rational_eigenvalues(&half).unwrap();
        assert_eq!(evs, vec![(ratio(1, 2), 1), (ratio(3, 2), 1)]);
    }

    #[test]
    fn eigenvalues_with_multiplicity_and_zero() {
        let m = Matrix::from_rows(vec![
            vec![int(0), int(0), int(0)],
            vec![int(0), int(5), int(0)],
            vec![int(0), int(0), int(5)],
        ])
        .unwrap();
        let evs = rational_eigenvalues(&m).unwrap();
        assert_eq!(evs, vec![(int(0), 1), (int(5), 2)]);
    }

    #[test]
    fn irrational_detected() {
        // x^2 - 2
        let m = Matrix::from_rows(vec![vec![int(0), int(2)], vec![int(1), int(0)]]).unwrap();
        assert!(matches!(
            rational_eigenvalues(&m),
            Err(SchemeError::NonRationalSpectrum(_))
        ));
    }

    #[test]
    fn kernel_and_inverse() {
        let m = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![int(-2), int(1)]);
        assert!(inverse(&m).is_none());

        let a = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(1)]]).unwrap();
        let ainv = inverse(&a).unwrap();
        assert_eq!(&a * &ainv, Matrix::identity(2));
    }

    #[test]
    fn solve_in_span_works() {
        let basis = Matrix::from_rows(vec![vec![int(1), int(0)], vec![int(1), int(1)], vec![int(0), int(2)]]).unwrap();
        // target = basis * [[3],[1/2]]
        let coef = Matrix::from_rows(vec![vec![int(3)], vec![ratio(1, 2)]]).unwrap();
        let target = &basis * &coef;
        let got = solve_in_span(&basis, &target).unwrap();
        assert_eq!(got, coef);
        let outside = Matrix::from_rows(vec![vec![int(1)], vec![int(0)], vec![int(0)]]).unwrap();
        assert!(solve_in_span(&basis, &outside).is_none());
    }
}
