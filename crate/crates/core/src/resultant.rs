//! Polynomials in `s` with coefficients in Q[t], Sylvester resultants and
//! first subresultants with respect to `s`.
//!
//! Determinants with entries in Q[t] are computed by evaluating `t` at
//! integer nodes, taking exact fraction-free (Bareiss) determinants over Q,
//! and interpolating. The node count comes from a row-degree bound.

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::rational::{q, Q};

/// `sum_i coeffs[i](t) * s^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Polynomial>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Polynomial>) -> BiPoly {
        while coeffs.last().is_some_and(Polynomial::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    /// `(f(s) - f(t)) / (s - t)`, computed termwise from `s^k - t^k`.
    pub fn divided_difference(f: &Polynomial) -> BiPoly {
        let d = f.degree().unwrap_or(0);
        let coeffs = (0..d).map(|i| Polynomial::new((0..d - i).map(|j| f.coeff(i + 1 + j)).collect())).collect();
        BiPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_s(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Polynomial {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Specializes `t`, leaving a polynomial in `s`.
    pub fn at_t(&self, t: &Q) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c.eval(t)).collect())
    }

    pub fn eval(&self, s: &Q, t: &Q) -> Q {
        self.at_t(t).eval(s)
    }
}

/// Fraction-free Gaussian elimination; the matrix is consumed.
pub fn bareiss_det(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    if n == 0 {
        return Q::one();
    }
    let mut sign = Q::one();
    let mut prev = Q::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Q::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Lagrange data through `(x_i, y_i)` in Newton form, expanded to coefficients.
pub fn interpolate(xs: &[Q], ys: &[Q]) -> Polynomial {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        let lin = Polynomial::new(vec![-xs[i].clone(), Q::one()]);
        acc = &(&acc * &lin) + &Polynomial::constant(dd[i].clone());
    }
    acc
}

/// A square matrix over Q[t] described by a row builder, with a degree bound.
struct PolyMatrix {
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    fn degree_bound(&self) -> usize {
        self.rows.iter().map(|row| row.iter().filter_map(Polynomial::degree).max().unwrap_or(0)).sum()
    }

    fn det(&self) -> Polynomial {
        let nodes = self.degree_bound() + 1;
        let xs: Vec<Q> = (0..nodes as i64).map(q).collect();
        let ys: Vec<Q> = xs
            .iter()
            .map(|x| {
                let m = self.rows.iter().map(|row| row.iter().map(|e| e.eval(x)).collect()).collect();
                bareiss_det(m)
            })
            .collect();
        interpolate(&xs, &ys)
    }
}

/// Rows `s^k * p` for `k = copies-1 .. 0`, as coefficient vectors over powers `width-1 .. 0`.
fn shifted_rows(p: &BiPoly, copies: usize, width: usize) -> Vec<Vec<Polynomial>> {
    let dp = p.degree_s().unwrap_or(0);
    (0..copies)
        .rev()
        .map(|k| {
            (0..width)
                .rev()
                .map(|power| if power >= k && power - k <= dp { p.coeff(power - k) } else { Polynomial::zero() })
                .collect()
        })
        .collect()
}

/// Coefficient of `s^i` in the `j`-th subresultant of `p` and `q` (`j < min(deg p, deg q)`).
fn subresultant_coeff(p: &BiPoly, q: &BiPoly, j: usize, i: usize) -> Polynomial {
    let dp = p.degree_s().expect("nonzero");
    let dq = q.degree_s().expect("nonzero");
    let width = dp + dq - j;
    let mut rows = shifted_rows(p, dq - j, width);
    rows.extend(shifted_rows(q, dp - j, width));
    let n = rows.len();
    // keep the leading n-1 columns and the column of s^i
    let col_i = width - 1 - i;
    let rows = rows
        .into_iter()
        .map(|row| {
            let mut kept: Vec<Polynomial> = row[..n - 1].to_vec();
            kept.push(row[col_i].clone());
            kept
        })
        .collect();
    PolyMatrix { rows }.det()
}

/// Resultant with respect to `s`; a polynomial in `t`.
///
/// Either argument of `s`-degree 0 gives the usual power of that constant.
pub fn resultant_s(p: &BiPoly, q: &BiPoly) -> Polynomial {
    match (p.degree_s(), q.degree_s()) {
        (None, _) | (_, None) => Polynomial::zero(),
        (Some(0), Some(dq)) => p.coeff(0).pow(dq),
        (Some(dp), Some(0)) => q.coeff(0).pow(dp),
        _ => subresultant_coeff(p, q, 0, 0),
    }
}

/// First subresultant `A(t)*s + B(t)`, returned as `(A, B)`.
///
/// Where the two specializations share exactly one root in `s` and `A` does not
/// vanish, that root is `-B/A`. If one input is linear in `s` it is returned as is.
pub fn first_subresultant(p: &BiPoly, q: &BiPoly) -> Option<(Polynomial, Polynomial)> {
    let (dp, dq) = (p.degree_s()?, q.degree_s()?);
    if dp == 0 || dq == 0 {
        return None;
    }
    if dq == 1 {
        return Some((q.coeff(1), q.coeff(0)));
    }
    if dp == 1 {
        return Some((p.coeff(1), p.coeff(0)));
    }
    Some((subresultant_coeff(p, q, 1, 1), subresultant_coeff(p, q, 1, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    /// Resultant of two univariate polynomials via a Sylvester matrix over Q.
    fn sylvester_det(a: &Polynomial, b: &Polynomial) -> Q {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let n = da + db;
        let mut m = vec![vec![Q::zero(); n]; n];
        for r in 0..db {
            for (k, c) in a.coeffs().iter().enumerate() {
                m[r][r + da - k] = c.clone();
            }
        }
        for r in 0..da {
            for (k, c) in b.coeffs().iter().enumerate() {
                m[db + r][r + db - k] = c.clone();
            }
        }
        bareiss_det(m)
    }

    #[test]
    fn bareiss_matches_hand_determinant() {
        let m = vec![vec![q(2), q(0), q(1)], vec![q(1), q(3), q(2)], vec![q(1), q(1), q(1)]];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(bareiss_det(m), q(0));
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(bareiss_det(m), q(-1));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = Polynomial::new(vec![qf(1, 2), q(-3), q(0), q(7)]);
        let xs: Vec<Q> = (0..4).map(q).collect();
        let ys: Vec<Q> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), f);
    }

    #[test]
    fn divided_difference_of_cube() {
        // (s^3 - t^3)/(s - t) = s^2 + s t + t^2
        let dd = BiPoly::divided_difference(&p(&[0, 0, 0, 1]));
        assert_eq!(dd.coeff(2), p(&[1]));
        assert_eq!(dd.coeff(1), p(&[0, 1]));
        assert_eq!(dd.coeff(0), p(&[0, 0, 1]));
    }

    #[test]
    fn cusp_resultant() {
        // p = s^2 + st + t^2, q = s + t: p(-t, t) = t^2
        let pp = BiPoly::divided_difference(&p(&[0, 0, 0, 1]));
        let qq = BiPoly::divided_difference(&p(&[0, 0, 1]));
        assert_eq!(resultant_s(&pp, &qq), p(&[0, 0, 1]));
        assert_eq!(first_subresultant(&pp, &qq), Some((p(&[1]), p(&[0, 1]))));
    }

    #[test]
    fn resultant_agrees_with_pointwise_sylvester() {
        let x = p(&[0, 1, -2, 0, 1]);
        let y = p(&[1, 0, 3, 1, 0, -1]);
        let (pp, qq) = (BiPoly::divided_difference(&x), BiPoly::divided_difference(&y));
        let r = resultant_s(&pp, &qq);
        for t in -3..4 {
            let t = q(t);
            assert_eq!(r.eval(&t), sylvester_det(&pp.at_t(&t), &qq.at_t(&t)));
        }
    }

    #[test]
    fn common_factor_gives_zero_resultant() {
        let pp = BiPoly::divided_difference(&p(&[0, 0, 1]));
        let qq = BiPoly::divided_difference(&p(&[0, 0, 0, 0, 1]));
        assert!(resultant_s(&pp, &qq).is_zero());
    }

    #[test]
    fn subresultant_gives_common_root() {
        // x = t^3 - 3t, y = t^4 - 4t^2: shared root s = -B/A whenever gcd degree is 1
        let x = p(&[0, -3, 0, 1]);
        let y = p(&[0, 0, -4, 0, 1]);
        let (pp, qq) = (BiPoly::divided_difference(&x), BiPoly::divided_difference(&y));
        let (a, b) = first_subresultant(&pp, &qq).unwrap();
        let r = resultant_s(&pp, &qq);
        assert!(!r.is_zero());
        for t in -6..7 {
            let t = q(t);
            let at = a.eval(&t);
            if r.eval(&t).is_zero() && !at.is_zero() {
                let s = -b.eval(&t) / at;
                assert!(pp.eval(&s, &t).is_zero() && qq.eval(&s, &t).is_zero());
            }
        }
    }
}
