//! Chebyshev polynomials of both kinds.

use std::ops::RangeInclusive;

use num_traits::{One, Zero};

use super::RatPoly;
use crate::error::{precondition, Result};
use crate::exactnum::{binomial, int, is_integer, rat, Integer, Rational};
use crate::report::{ReportBuilder, VerifyReport};

fn three_term(p0: RatPoly, p1: RatPoly, n: usize) -> RatPoly {
    if n == 0 {
        return p0;
    }
    let two_x = RatPoly::monomial(int(2), 1);
    let (mut a, mut b) = (p0, p1);
    for _ in 1..n {
        let c = &(&two_x * &b) - &a;
        a = b;
        b = c;
    }
    b
}

/// T_n: T_0 = 1, T_1 = x.
pub fn chebyshev_t(n: usize) -> RatPoly {
    three_term(RatPoly::one(), RatPoly::x(), n)
}

/// U_n: U_0 = 1, U_1 = 2x, and U_{-1} = 0.
pub fn chebyshev_u(n: i64) -> RatPoly {
    if n < 0 {
        return RatPoly::zero();
    }
    three_term(RatPoly::one(), RatPoly::monomial(int(2), 1), n as usize)
}

/// Determinant of the n×n tridiagonal matrix with `2x` on the diagonal and
/// 1 beside it, by Gaussian elimination at a rational point.
fn tridiagonal_det(n: usize, x: &Rational) -> Rational {
    let mut m = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        m[i][i] = x * int(2);
        if i + 1 < n {
            m[i][i + 1] = Rational::one();
            m[i + 1][i] = Rational::one();
        }
    }
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..n {
                let d = &f * &m[c][k];
                m[r][k] -= d;
            }
        }
    }
    det
}

/// U_n(p/2) is an integer for every integer p, n ≤ `n_max`. Also checks
/// U_{2n}(0) = (-1)^n, and for n ≤ 12 that the determinant recurrence and
/// the tridiagonal determinant itself (at n + 1 points, enough to pin a
/// degree-n polynomial) reproduce U_n.
pub fn chebu_halfinteger_check(n_max: usize, p_range: RangeInclusive<i64>) -> VerifyReport {
    let mut report = ReportBuilder::new("chebU_halfinteger", 0, n_max as i64);
    let mut d_prev = RatPoly::one();
    let mut d = RatPoly::monomial(int(2), 1);
    let two_x = RatPoly::monomial(int(2), 1);
    for n in 0..=n_max {
        let u = chebyshev_u(n as i64);
        for p in p_range.clone() {
            let v = u.eval(&rat(p, 2));
            report.record("U_n(p/2) integral", is_integer(&v), || {
                format!("n={n} p={p}: {v}")
            });
        }
        if n % 2 == 0 {
            let v = u.eval(&Rational::zero());
            let want = if n % 4 == 0 { int(1) } else { int(-1) };
            report.record("U_2n(0) = (-1)^n", v == want, || format!("n={n}: {v}"));
        }
        if n <= 12 {
            let rec = if n == 0 { RatPoly::one() } else { d.clone() };
            report.record("determinant recurrence", rec == u, || format!("n={n}"));
            let ok = (0..=n as i64).all(|t| {
                let x = rat(t, 3);
                tridiagonal_det(n, &x) == u.eval(&x)
            });
            report.record("tridiagonal determinant", ok, || format!("n={n}"));
            if n >= 1 {
                let next = &(&two_x * &d) - &d_prev;
                d_prev = std::mem::replace(&mut d, next);
            }
        }
    }
    report.finish()
}

/// T_{2n}(x) = T_n(2x² - 1) for n ≤ `n_max`.
pub fn chebt_doubling_check(n_max: usize) -> VerifyReport {
    let mut report = ReportBuilder::new("chebT_doubling", 0, n_max as i64);
    let inner = RatPoly::new(vec![int(-1), int(0), int(2)]);
    for n in 0..=n_max {
        let lhs = chebyshev_t(2 * n);
        let rhs = chebyshev_t(n).compose(&inner);
        report.record("T_2n(x) = T_n(2x^2 - 1)", lhs == rhs, || format!("n={n}"));
    }
    report.finish()
}

/// Σ_{r=0}^{n} C(n+r, 2r)·x^r/(n+r), which equals T_n(x/2 + 1)/n.
pub fn tshift_sum(n: u64) -> Result<RatPoly> {
    if n == 0 {
        return Err(precondition("tshift_sum", "n must be at least 1"));
    }
    Ok(RatPoly::new(
        (0..=n)
            .map(|r| Rational::new(binomial(n + r, 2 * r as i64), Integer::from(n + r)))
            .collect(),
    ))
}
