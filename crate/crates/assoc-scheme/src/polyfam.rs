//! Closed-form polynomial families, evaluated exactly at integer points.
//!
//! These give the eigenvalues of the example schemes in closed form:
//! Krawtchouk and Eberlein sums for the non-binary Johnson scheme,
//! q-Krawtchouk and q-Hahn sums for attenuated spaces, generating-function
//! coefficients for the bivariate Krawtchouk values of symmetrized
//! two-class schemes, and the dual parameter map for strongly regular
//! graphs. Everything is evaluated, never manipulated symbolically: each
//! identity we need is a finite family of exact scalar equations.

use crate::error::{Result, SchemeError};
use crate::exact::{int, pow_i, sqrt_exact, BivarPoly, Scalar};
use num_traits::{One, Zero};

/// Binomial coefficient by falling factorial: `x (x-1) ... (x-k+1) / k!`.
/// Zero when `0 <= x < k`; signed values for negative `x`.
pub fn binom(x: i64, k: u32) -> Scalar {
    let mut num = Scalar::one();
    for t in 0..k as i64 {
        num *= int(x - t);
    }
    let mut den = Scalar::one();
    for t in 1..=k as i64 {
        den *= int(t);
    }
    num / den
}

/// Krawtchouk polynomial
/// `K_i(x, N, p) = sum_l (-1)^l (p-1)^{i-l} C(x,l) C(N-x, i-l)`.
pub fn krawtchouk(i: u32, x: i64, n: i64, p: i64) -> Scalar {
    let mut total = Scalar::zero();
    for l in 0..=i {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let term = int(sign)
            * pow_i(&int(p - 1), (i - l) as i64)
            * binom(x, l)
            * binom(n - x, i - l);
        total += term;
    }
    total
}

/// Eberlein polynomial
/// `E_i(x, N, p) = sum_l (-1)^l C(x,l) C(p-x, i-l) C(N-p-x, i-l)`.
pub fn eberlein(i: u32, x: i64, n: i64, p: i64) -> Scalar {
    let mut total = Scalar::zero();
    for l in 0..=i {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let term = int(sign) * binom(x, l) * binom(p - x, i - l) * binom(n - p - x, i - l);
        total += term;
    }
    total
}

/// Eigenvalue of the non-binary Johnson scheme `J_r(n,k)`:
/// `p_ij(x,y) = (r-1)^j K_i(x, k-j, r-1) E_j(y-x, n-x, k-x)`.
pub fn nbj_eigenvalue(i: u32, j: u32, x: i64, y: i64, r: i64, n: i64, k: i64) -> Scalar {
    pow_i(&int(r - 1), j as i64)
        * krawtchouk(i, x, k - j as i64, r - 1)
        * eberlein(j, y - x, n - x, k - x)
}

/// Index grid of the common eigenspaces of `J_r(n,k)`:
/// `{(x,y) : 0 <= x <= y <= k}`.
pub fn nbj_dual_grid(k: u32) -> Vec<(i64, i64)> {
    let mut grid = Vec::new();
    for x in 0..=k as i64 {
        for y in x..=k as i64 {
            grid.push((x, y));
        }
    }
    grid
}

/// q-number `[n]_q = (q^n - 1)/(q - 1)`, with value `n` at `q = 1`.
pub fn q_number(n: i64, q: &Scalar) -> Scalar {
    if q.is_one() {
        int(n)
    } else {
        (pow_i(q, n) - Scalar::one()) / (q - Scalar::one())
    }
}

/// A q-number `[n]_q` carried with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QNumber {
    pub q: Scalar,
    pub n: i64,
}

impl QNumber {
    pub fn value(&self) -> Scalar {
        q_number(self.n, &self.q)
    }
}

/// Gaussian binomial coefficient.
///
/// Zero when `b < 0`, or when `0 <= a < b`. For negative `a` the product
/// form `prod_{t=1..b} (q^{a-b+t} - 1)/(q^t - 1)` is used, the q-analogue
/// of the signed falling-factorial convention. At `q = 1` this degrades to
/// the ordinary binomial.
pub fn qbinom(a: i64, b: i64, q: &Scalar) -> Scalar {
    if b < 0 || (a >= 0 && b > a) {
        return Scalar::zero();
    }
    if q.is_one() {
        return binom(a, b as u32);
    }
    let mut total = Scalar::one();
    for t in 1..=b {
        total *= (pow_i(q, a - b + t) - Scalar::one()) / (pow_i(q, t) - Scalar::one());
    }
    total
}

/// q-Krawtchouk polynomial
/// `K_i(j, L; q; n) = sum_k (-1)^{i-k} q^{kL + C(i-k,2)} [j-k, j-i]_q [j-n, k]_q`.
pub fn q_krawtchouk(i: u32, j: i64, l: i64, q: &Scalar, n: i64) -> Scalar {
    let mut total = Scalar::zero();
    for k in 0..=i as i64 {
        let sign = if (i as i64 - k) % 2 == 0 { 1 } else { -1 };
        let choose2 = (i as i64 - k) * (i as i64 - k - 1) / 2;
        let term = int(sign)
            * pow_i(q, k * l + choose2)
            * qbinom(j - k, j - i as i64, q)
            * qbinom(j - n, k, q);
        total += term;
    }
    total
}

/// q-Hahn polynomial
/// `Q_i(k, j; q; m) = sum_l (-1)^{i-l} q^{lm + C(i-l,2)} [j-l, j-i]_q [j-m, l]_q [k-j+l-m, l]_q`.
pub fn q_hahn(i: u32, k: i64, j: i64, q: &Scalar, m: i64) -> Scalar {
    let mut total = Scalar::zero();
    for l in 0..=i as i64 {
        let sign = if (i as i64 - l) % 2 == 0 { 1 } else { -1 };
        let choose2 = (i as i64 - l) * (i as i64 - l - 1) / 2;
        let term = int(sign)
            * pow_i(q, l * m + choose2)
            * qbinom(j - l, j - i as i64, q)
            * qbinom(j - m, l, q)
            * qbinom(k - j + l - m, l, q);
        total += term;
    }
    total
}

/// Eigenvalue of the attenuated-space scheme:
/// `p_ij(m,n) = q^{jL} K_i(d-j, L; q; n) Q_j(D-n, d-n; q; m)`.
#[allow(clippy::too_many_arguments)]
pub fn attenuated_eigenvalue(
    i: u32,
    j: u32,
    m: i64,
    n: i64,
    q: &Scalar,
    d: i64,
    big_d: i64,
    l: i64,
) -> Scalar {
    pow_i(q, j as i64 * l)
        * q_krawtchouk(i, d - j as i64, l, q, n)
        * q_hahn(j, big_d - n, d - n, q, m)
}

/// `theta_mn = -[d]_q + q^L [d-n]_q`, the eigenvalue of `A_10`.
pub fn attenuated_theta(n: i64, q: &Scalar, d: i64, l: i64) -> Scalar {
    -q_number(d, q) + pow_i(q, l) * q_number(d - n, q)
}

/// `mu_mn = q^L (q^m [d-m-n]_q [D-d+1-m]_q - [d-n]_q)`, the eigenvalue of
/// `A_01`.
pub fn attenuated_mu(m: i64, n: i64, q: &Scalar, d: i64, big_d: i64, l: i64) -> Scalar {
    pow_i(q, l)
        * (pow_i(q, m) * q_number(d - m - n, q) * q_number(big_d - d + 1 - m, q)
            - q_number(d - n, q))
}

/// Bivariate Krawtchouk value `v_mn(theta_ij, mu_ij)` for the
/// symmetrization of a two-class scheme with parameters
/// `b = -(theta+1)(tau+1)`, `c = k + theta tau`: the coefficient of
/// `x1^m x2^n` in
/// `(1 + k x1 + (kb/c) x2)^{N-i-j} (1 + theta x1 - (theta+1) x2)^i (1 + tau x1 - (tau+1) x2)^j`.
#[allow(clippy::too_many_arguments)]
pub fn biv_krawtchouk_value(
    m: u32,
    n: u32,
    i: u32,
    j: u32,
    k: &Scalar,
    theta: &Scalar,
    tau: &Scalar,
    big_n: u32,
) -> Result<Scalar> {
    if i + j > big_n {
        return Err(SchemeError::InvalidParameter(format!(
            "(i,j) = ({i},{j}) outside the triangle of size {big_n}"
        )));
    }
    let b = -(theta + Scalar::one()) * (tau + Scalar::one());
    let c = k + theta * tau;
    if c.is_zero() {
        return Err(SchemeError::DegenerateDenominator("c = k + theta tau = 0".into()));
    }
    let kb_c = k * &b / &c;
    let lin = |cx: Scalar, cy: Scalar| {
        let mut p = BivarPoly::one();
        p.add_assign_term(1, 0, &cx);
        p.add_assign_term(0, 1, &cy);
        p
    };
    let f0 = lin(k.clone(), kb_c);
    let f1 = lin(theta.clone(), -(theta + Scalar::one()));
    let f2 = lin(tau.clone(), -(tau + Scalar::one()));
    let product = f0.pow(big_n - i - j).mul(&f1.pow(i)).mul(&f2.pow(j));
    Ok(product.coeff(m, n))
}

/// Eigenvalues `theta_ij = (N-i-j) k + i theta + j tau` and
/// `mu_ij = (N-i-j) kb/c - i (theta+1) - j (tau+1)` of the symmetrized
/// two-class scheme.
pub fn sym_eigenvalues(
    i: u32,
    j: u32,
    k: &Scalar,
    theta: &Scalar,
    tau: &Scalar,
    big_n: u32,
) -> Result<(Scalar, Scalar)> {
    let b = -(theta + Scalar::one()) * (tau + Scalar::one());
    let c = k + theta * tau;
    if c.is_zero() {
        return Err(SchemeError::DegenerateDenominator("c = k + theta tau = 0".into()));
    }
    let kb_c = k * &b / &c;
    let rest = int((big_n - i - j) as i64);
    let theta_ij = &rest * k + int(i as i64) * theta + int(j as i64) * tau;
    let mu_ij = &rest * &kb_c - int(i as i64) * (theta + Scalar::one())
        - int(j as i64) * (tau + Scalar::one());
    Ok((theta_ij, mu_ij))
}

/// Dual parameters of a strongly regular graph with valence `k` and
/// eigenvalues `theta > tau`:
///
/// `k* = k(tau+1)(k-tau) / ((tau theta + k)(tau - theta))`,
/// `b* = -tau(theta+1)(k-theta)^2 / ((tau-theta)^2 (tau theta + k))`,
/// `c* = tau(tau+1)(k-tau)(k-theta) / ((tau-theta)^2 (tau theta + k))`.
pub fn dual_srg_params(
    k: &Scalar,
    theta: &Scalar,
    tau: &Scalar,
) -> Result<(Scalar, Scalar, Scalar)> {
    let one = Scalar::one();
    let denom1 = (tau * theta + k) * (tau - theta);
    let denom2 = (tau - theta) * (tau - theta) * (tau * theta + k);
    if denom1.is_zero() || denom2.is_zero() {
        return Err(SchemeError::DegenerateDenominator(
            "(tau theta + k)(tau - theta) = 0".into(),
        ));
    }
    let k_star = k * (tau + &one) * (k - tau) / &denom1;
    let b_star = -(tau * (theta + &one) * (k - theta) * (k - theta)) / &denom2;
    let c_star = tau * (tau + &one) * (k - tau) * (k - theta) / &denom2;
    Ok((k_star, b_star, c_star))
}

/// Eigenvalues `theta > tau` of a strongly regular graph given
/// `(k, b, c)`: the roots of `x^2 - (k - b - c - 1) x - (k - c)`...
/// i.e. `x^2 - (theta+tau) x + theta tau` with `theta + tau = k - b - c - 1`
/// lowered from `b = -(theta+1)(tau+1)`, `c = k + theta tau`. Errors when
/// the roots are irrational.
pub fn srg_eigenvalues(k: &Scalar, b: &Scalar, c: &Scalar) -> Result<(Scalar, Scalar)> {
    let one = Scalar::one();
    let sum = k - b - c - &one;
    let product = c - k;
    let disc = &sum * &sum - int(4) * &product;
    let root = sqrt_exact(&disc).ok_or_else(|| {
        SchemeError::NonRationalSpectrum(format!("discriminant {disc} is not a square"))
    })?;
    let two = int(2);
    let theta = (&sum + &root) / &two;
    let tau = (&sum - &root) / &two;
    Ok((theta, tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), int(6));
        assert_eq!(binom(1, 3), int(0));
        assert_eq!(binom(-1, 2), int(1));
        assert_eq!(binom(5, 0), int(1));
        assert_eq!(binom(-3, 3), int(-10));
    }

    #[test]
    fn krawtchouk_values() {
        // K_0 = 1 always
        for x in 0..4 {
            assert_eq!(krawtchouk(0, x, 5, 3), int(1));
        }
        // K_1(x, N, p) = (p-1)(N-x) - x
        assert_eq!(krawtchouk(1, 1, 2, 3), int(1));
        // K_2(0, 2, 3) = (p-1)^2 C(N,2) = 4
        assert_eq!(krawtchouk(2, 0, 2, 3), int(4));
    }

    #[test]
    fn eberlein_values() {
        for x in 0..3 {
            assert_eq!(eberlein(0, x, 4, 2), int(1));
        }
        assert_eq!(eberlein(1, 0, 4, 2), int(4));
        assert_eq!(eberlein(1, 1, 4, 2), int(0));
    }

    #[test]
    fn nbj_valences() {
        // J_3(4,2): p_10(0,0) = 2 and p_01(0,0) = 8
        assert_eq!(nbj_eigenvalue(0, 0, 0, 0, 3, 4, 2), int(1));
        assert_eq!(nbj_eigenvalue(1, 0, 0, 0, 3, 4, 2), int(2));
        assert_eq!(nbj_eigenvalue(0, 1, 0, 0, 3, 4, 2), int(8));
    }

    #[test]
    fn gaussian_binomials() {
        let q2 = int(2);
        assert_eq!(qbinom(4, 0, &q2), int(1));
        assert_eq!(qbinom(4, 2, &q2), int(35));
        assert_eq!(qbinom(2, 3, &q2), int(0));
        assert_eq!(qbinom(3, -1, &q2), int(0));
        // q -> 1 branch
        for a in 0..=8i64 {
            for b in 0..=a {
                assert_eq!(qbinom(a, b, &int(1)), binom(a, b as u32));
            }
        }
    }

    #[test]
    fn q_numbers() {
        assert_eq!(q_number(3, &int(2)), int(7));
        assert_eq!(q_number(3, &int(1)), int(3));
        assert_eq!(q_number(0, &int(5)), int(0));
        assert_eq!(
            QNumber { q: int(3), n: 2 }.value(),
            int(4)
        );
    }

    #[test]
    fn q_krawtchouk_frozen_values() {
        // direct evaluation of the two-term sum K_1(2, 2; 2; 0):
        //   k=0: -q^0 [2,1][2,0] = -3;  k=1: q^2 [1,1][2,1] = 4*3 = 12
        assert_eq!(q_krawtchouk(1, 2, 2, &int(2), 0), int(9));
        assert_eq!(q_krawtchouk(0, 2, 2, &int(2), 1), int(1));
    }

    #[test]
    fn q_hahn_frozen_values() {
        // Q_1(k, j; q; 0) two-term sum written out by hand:
        //   l=0: -[j,j-1][j,0][k-j,0] = -[j]_q;  l=1: [j-1,j-1][j-1,1][k-j+1,1]
        // at (k,j,q) = (3,2,2): -3 + [1]*[2]_2... = -3 + 3*3 = 6
        assert_eq!(q_hahn(1, 3, 2, &int(2), 0), int(6));
        assert_eq!(q_hahn(0, 3, 2, &int(2), 5), int(1));
    }

    #[test]
    fn attenuated_theta_matches_p10() {
        // theta_mn = -[d]_q + q^L [d-n]_q must equal p_10(m,n)
        for &(q, d, big_d, l) in &[(2i64, 2i64, 5i64, 2i64), (3, 2, 5, 2)] {
            let qs = int(q);
            for n in 0..=d.min(big_d - d) {
                for m in 0..=(d - n) {
                    assert_eq!(
                        attenuated_eigenvalue(1, 0, m, n, &qs, d, big_d, l),
                        attenuated_theta(n, &qs, d, l),
                        "(q,d,D,L)=({q},{d},{big_d},{l}), (m,n)=({m},{n})"
                    );
                    assert_eq!(
                        attenuated_eigenvalue(0, 1, m, n, &qs, d, big_d, l),
                        attenuated_mu(m, n, &qs, d, big_d, l),
                    );
                }
            }
        }
    }

    #[test]
    fn biv_krawtchouk_low_orders() {
        // C4 parameters: k=2, theta=0, tau=-2
        let (k, th, ta) = (int(2), int(0), int(-2));
        for i in 0..=2u32 {
            for j in 0..=(2 - i) {
                assert_eq!(
                    biv_krawtchouk_value(0, 0, i, j, &k, &th, &ta, 2).unwrap(),
                    int(1)
                );
                let (theta_ij, mu_ij) = sym_eigenvalues(i, j, &k, &th, &ta, 2).unwrap();
                assert_eq!(
                    biv_krawtchouk_value(1, 0, i, j, &k, &th, &ta, 2).unwrap(),
                    theta_ij
                );
                assert_eq!(
                    biv_krawtchouk_value(0, 1, i, j, &k, &th, &ta, 2).unwrap(),
                    mu_ij
                );
            }
        }
    }

    #[test]
    fn srg_duality() {
        // C4: (k, theta, tau) = (2, 0, -2) is self-dual with (2, 1, 2)
        let (ks, bs, cs) = dual_srg_params(&int(2), &int(0), &int(-2)).unwrap();
        assert_eq!((ks, bs, cs), (int(2), int(1), int(2)));
        // Petersen: (3, 1, -2) -> (5, 16/9, 20/9)
        let (ks, bs, cs) = dual_srg_params(&int(3), &int(1), &int(-2)).unwrap();
        assert_eq!(ks, int(5));
        assert_eq!(bs, ratio(16, 9));
        assert_eq!(cs, ratio(20, 9));
        // involution: dual of the dual returns the primal parameters
        for (k, th, ta) in [(int(2), int(0), int(-2)), (int(3), int(1), int(-2))] {
            let (b, c) = (
                -(&th + Scalar::one()) * (&ta + Scalar::one()),
                &k + &th * &ta,
            );
            let (ks, bs, cs) = dual_srg_params(&k, &th, &ta).unwrap();
            let (ths, tas) = srg_eigenvalues(&ks, &bs, &cs).unwrap();
            let (kss, bss, css) = dual_srg_params(&ks, &ths, &tas).unwrap();
            assert_eq!((kss, bss, css), (k, b, c));
        }
    }

    #[test]
    fn srg_eigenvalue_solver() {
        let (theta, tau) = srg_eigenvalues(&int(2), &int(1), &int(2)).unwrap();
        assert_eq!((theta, tau), (int(0), int(-2)));
        let (theta, tau) = srg_eigenvalues(&int(3), &int(2), &int(1)).unwrap();
        assert_eq!((theta, tau), (int(1), int(-2)));
        // conference-graph-like parameters have irrational eigenvalues
        assert!(srg_eigenvalues(&int(2), &int(1), &int(1)).is_err());
    }

    #[test]
    fn recurrence_transfer_for_nbj() {
        // the adjacency recurrences hold verbatim for the eigenvalue grid
        let (r, n, k) = (3i64, 4i64, 2i64);
        let p = |i: u32, j: u32, x: i64, y: i64| nbj_eigenvalue(i, j, x, y, r, n, k);
        let in_dom =
            |i: i64, j: i64| j >= 0 && i >= 0 && j <= k.min(n - k) && i + j <= k;
        for (x, y) in nbj_dual_grid(k as u32) {
            for i in 0..=k as u32 {
                for j in 0..=(k as u32 - i) {
                    if !in_dom(i as i64, j as i64) {
                        continue;
                    }
                    let (id, jd) = (i as i64, j as i64);
                    // x-recurrence
                    let mut rhs = Scalar::zero();
                    if in_dom(id - 1, jd) {
                        rhs += int((k - id - jd + 1) * (r - 2)) * p(i - 1, j, x, y);
                    }
                    rhs += int(id * (r - 3) + jd * (r - 2)) * p(i, j, x, y);
                    if in_dom(id + 1, jd) {
                        rhs += int(id + 1) * p(i + 1, j, x, y);
                    }
                    assert_eq!(p(1, 0, x, y) * p(i, j, x, y), rhs, "x-rec at ({i},{j}) ({x},{y})");
                }
            }
        }
    }
}
