//! Dense matrices over exact rationals.
//!
//! Sizes here stay at desk scale (a few hundred rows at most for the dense
//! paths), so a flat row-major `Vec<Scalar>` is all we need.

use super::{BivarPoly, Scalar};
use crate::error::{Result, SchemeError};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(SchemeError::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// The all-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::one(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(SchemeError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .map(|(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn trace(&self) -> Scalar {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| &self[(i, i)]).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Kronecker product; dimensions multiply.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for (r1, c1, a) in self.entries() {
            if a.is_zero() {
                continue;
            }
            for (r2, c2, b) in other.entries() {
                if b.is_zero() {
                    continue;
                }
                out[(r1 * other.rows + r2, c1 * other.cols + c2)] = a * b;
            }
        }
        out
    }

    /// Entrywise (Hadamard) product; requires equal dimensions.
    pub fn hadamard(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(SchemeError::DimensionMismatch(format!(
                "hadamard of {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Matrix) -> Scalar {
        debug_assert_eq!(self.cols, other.rows);
        debug_assert_eq!(other.cols, self.rows);
        let mut total = Scalar::zero();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self[(r, c)].is_zero() && !other[(c, r)].is_zero() {
                    total += &self[(r, c)] * &other[(c, r)];
                }
            }
        }
        total
    }

    /// Evaluates `p(X, Y) = sum coeff(m,n) X^m Y^n` with `X^0 Y^0` the
    /// identity. Powers are computed once per exponent. `X` and `Y` must be
    /// square of the same size; with `check_commute` their commutativity is
    /// asserted once up front.
    pub fn poly_eval(p: &BivarPoly, x: &Matrix, y: &Matrix, check_commute: bool) -> Result<Matrix> {
        if !x.is_square() || !y.is_square() || x.rows != y.rows {
            return Err(SchemeError::DimensionMismatch(format!(
                "poly_eval on {}x{} and {}x{}",
                x.rows, x.cols, y.rows, y.cols
            )));
        }
        if check_commute && x * y != y * x {
            return Err(SchemeError::InvalidParameter(
                "poly_eval arguments do not commute".into(),
            ));
        }
        let n = x.rows;
        let max_m = p.terms().map(|((m, _), _)| m).max().unwrap_or(0) as usize;
        let max_n = p.terms().map(|((_, n), _)| n).max().unwrap_or(0) as usize;
        let xp = power_table(x, max_m, n);
        let yp = power_table(y, max_n, n);
        let mut out = Matrix::zero(n, n);
        for ((m, k), coeff) in p.terms() {
            let term = &xp[m as usize] * &yp[k as usize];
            out = &out + &term.scale(coeff);
        }
        Ok(out)
    }

    /// Hadamard-product analogue of [`Matrix::poly_eval`]: powers are
    /// entrywise and the empty product is the all-ones matrix.
    pub fn poly_eval_hadamard(p: &BivarPoly, x: &Matrix, y: &Matrix) -> Result<Matrix> {
        if x.rows != y.rows || x.cols != y.cols {
            return Err(SchemeError::DimensionMismatch(
                "poly_eval_hadamard arguments".into(),
            ));
        }
        let mut out = Matrix::zero(x.rows, x.cols);
        for ((m, k), coeff) in p.terms() {
            let term = Matrix::from_fn(x.rows, x.cols, |r, c| {
                x[(r, c)].pow(m as i32) * y[(r, c)].pow(k as i32) * coeff
            });
            out = &out + &term;
        }
        Ok(out)
    }
}

fn power_table(m: &Matrix, up_to: usize, n: usize) -> Vec<Matrix> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(Matrix::identity(n));
    for k in 1..=up_to {
        let next = &table[k - 1] * m;
        table.push(next);
    }
    table
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product of {}x{} with {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix {
        Matrix::from_rows(vec![vec![int(a), int(b)], vec![int(c), int(d)]]).unwrap()
    }

    #[test]
    fn kron_identity_and_ones() {
        let i2 = Matrix::identity(2);
        assert_eq!(i2.kron(&i2), Matrix::identity(4));
        let j2 = Matrix::ones(2, 2);
        assert_eq!(j2.kron(&j2), Matrix::ones(4, 4));
    }

    #[test]
    fn kron_swap_permutation() {
        // [[0,1],[1,0]] (x) [[0,1],[1,0]] swaps (0,0)<->(1,1) and (0,1)<->(1,0)
        // block coordinates: a 4x4 permutation matrix with ones on the
        // antidiagonal of each 2x2 block arrangement.
        let s = m2(0, 1, 1, 0);
        let got = s.kron(&s);
        let expect = Matrix::from_rows(vec![
            vec![int(0), int(0), int(0), int(1)],
            vec![int(0), int(0), int(1), int(0)],
            vec![int(0), int(1), int(0), int(0)],
            vec![int(1), int(0), int(0), int(0)],
        ])
        .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn kron_mixed_product() {
        let a = m2(1, 2, 3, 4);
        let b = m2(0, 1, 1, 1);
        let c = m2(2, 0, 1, 1);
        let d = m2(1, 1, 0, 2);
        let lhs = &a.kron(&b) * &c.kron(&d);
        let rhs = (&a * &c).kron(&(&b * &d));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hadamard_rules() {
        let a = m2(1, 2, 3, 4);
        let j = Matrix::ones(2, 2);
        assert_eq!(a.hadamard(&j).unwrap(), a);
        let d = m2(2, 0, 0, 2);
        let expect = m2(2, 0, 0, 8);
        assert_eq!(a.hadamard(&d).unwrap(), expect);
        assert!(a.hadamard(&Matrix::ones(3, 3)).is_err());
    }

    #[test]
    fn poly_eval_basics() {
        let x = m2(0, 1, 1, 0);
        let y = m2(2, 0, 0, 2);
        let one = BivarPoly::one();
        assert_eq!(
            Matrix::poly_eval(&one, &x, &y, true).unwrap(),
            Matrix::identity(2)
        );
        let px = BivarPoly::x();
        assert_eq!(Matrix::poly_eval(&px, &x, &y, true).unwrap(), x);
        // additivity
        let p = BivarPoly::monomial(2, 1, ratio(1, 3));
        let q = BivarPoly::monomial(0, 2, int(-2));
        let sum = p.add(&q);
        let ep = Matrix::poly_eval(&p, &x, &y, false).unwrap();
        let eq = Matrix::poly_eval(&q, &x, &y, false).unwrap();
        let es = Matrix::poly_eval(&sum, &x, &y, false).unwrap();
        assert_eq!(es, &ep + &eq);
    }

    #[test]
    fn poly_eval_rejects_noncommuting() {
        let x = m2(0, 1, 0, 0);
        let y = m2(1, 0, 0, 0);
        let p = BivarPoly::monomial(1, 1, int(1));
        assert!(Matrix::poly_eval(&p, &x, &y, true).is_err());
    }
}
