//! The polynomials A_{j,n}(z) in
//! d^n V/dz^n = (-1)^{n-1}(n-1)!·z^{-n} + z^{-2n}·Σ_j A_{j,n}(z)·ψ_j(z + 1/z),
//! and the nested binomial-Bernoulli identity from the Faà di Bruno pipeline.

use num_traits::Zero;

use super::bell::lah_binomial;
use super::hoppe::psi_j_at_h;
use crate::classical::{bernoulli_number, RatPoly};
use crate::error::{precondition, Result};
use crate::exactnum::{binomial, factorial, int, rat, Integer, Rational};
use crate::report::{ReportBuilder, VerifyReport};
use crate::series::{expand_v, LaurentSeries};

fn z2_minus_1() -> RatPoly {
    RatPoly::new(vec![int(-1), int(0), int(1)])
}

fn sign(e: u64) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// A_{1,n}, ..., A_{n,n} from the recurrence
/// A_{1,1} = z² - 1, A_{n+1,n+1} = (z² - 1)·A_{n,n},
/// A_{j,n+1} = -2nz·A_{j,n} + z²·A'_{j,n} + (z² - 1)·A_{j-1,n}.
pub fn a_poly_recurrence(n: usize) -> Vec<RatPoly> {
    assert!(n >= 1, "A_{{j,n}} needs n ≥ 1");
    let mut row = vec![z2_minus_1()];
    let z2 = RatPoly::monomial(int(1), 2);
    for m in 1..n {
        let lin = RatPoly::monomial(int(-2 * m as i64), 1);
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..m {
            let mut a = &(&lin * &row[j]) + &(&z2 * &row[j].derivative());
            if j > 0 {
                a = &a + &(&z2_minus_1() * &row[j - 1]);
            }
            next.push(a);
        }
        next.push(&z2_minus_1() * &row[m - 1]);
        row = next;
    }
    row
}

fn check_range(what: &'static str, j: u64, n: u64) -> Result<()> {
    if j == 0 || j > n {
        return Err(precondition(
            what,
            format!("need 1 ≤ j ≤ n, got j={j} n={n}"),
        ));
    }
    Ok(())
}

/// A_{n,n} = (z² - 1)^n, and for j < n
/// A_{j,n} = (-1)^n (n!/j!)·z^{n-j}·Σ_{r<j} (-1)^r C(n-1-r, n-j) C(j, r)·z^{2r}.
pub fn a_poly_explicit(j: u64, n: u64) -> Result<RatPoly> {
    check_range("a_poly_explicit", j, n)?;
    if j == n {
        return Ok(z2_minus_1().pow(n as u32));
    }
    let lead = sign(n) * Rational::new(factorial(n), factorial(j));
    let mut c = vec![Rational::zero(); (n + j) as usize];
    for r in 0..j {
        let b = binomial(n - 1 - r, (n - j) as i64) * binomial(j, r as i64);
        c[(n - j + 2 * r) as usize] = &lead * sign(r) * Rational::from_integer(b);
    }
    Ok(RatPoly::new(c))
}

fn pochhammer(a: i64, i: u64) -> Rational {
    (0..i as i64).map(|t| int(a + t)).product()
}

/// For j < n, the terminating hypergeometric form
/// A_{j,n} = (-1)^n (n!/j!) C(n-1, j-1)·z^{n-j}·₂F₁(1-j, -j; 1-n; z²).
pub fn a_poly_hypergeometric(j: u64, n: u64) -> Result<RatPoly> {
    check_range("a_poly_hypergeometric", j, n)?;
    if j == n {
        return Err(precondition(
            "a_poly_hypergeometric",
            "the form needs j < n",
        ));
    }
    let lead = sign(n) * Rational::new(factorial(n) * binomial(n - 1, j as i64 - 1), factorial(j));
    let mut c = vec![Rational::zero(); (n + j) as usize];
    for i in 0..j {
        let t = pochhammer(1 - j as i64, i) * pochhammer(-(j as i64), i)
            / (pochhammer(1 - n as i64, i) * Rational::from_integer(factorial(i)));
        c[(n - j + 2 * i) as usize] = &lead * t;
    }
    Ok(RatPoly::new(c))
}

/// Recurrence against the explicit and hypergeometric forms, and the degree
/// rule (n + j - 2 for j < n, 2n for j = n), for n ≤ `n_max`.
pub fn a_poly_check(n_max: u64) -> Result<VerifyReport> {
    let mut report = ReportBuilder::new("a_poly", 1, n_max as i64);
    for n in 1..=n_max {
        let row = a_poly_recurrence(n as usize);
        for j in 1..=n {
            let a = &row[j as usize - 1];
            let e = a_poly_explicit(j, n)?;
            report.record("recurrence = explicit form", *a == e, || {
                format!("j={j} n={n}")
            });
            if j < n {
                let h = a_poly_hypergeometric(j, n)?;
                report.record("recurrence = hypergeometric form", *a == h, || {
                    format!("j={j} n={n}")
                });
            }
            let want = if j == n { 2 * n } else { n + j - 2 } as usize;
            let d = a.degree();
            report.record("degree", d == Some(want), || {
                format!("j={j} n={n}: {d:?} vs {want}")
            });
        }
    }
    Ok(report.finish())
}

fn poly_times_laurent(p: &RatPoly, s: &LaurentSeries) -> LaurentSeries {
    let pl = LaurentSeries::new(0, p.coeffs().to_vec(), s.order() - s.min_exp());
    &pl * s
}

/// d^n V/dz^n two ways through z^{N-n}: term-by-term differentiation of
/// the expansion of V, and the A_{j,n} form with ψ_j(z + 1/z) expanded
/// through z^{N+n}. The z^{-n} parts cancel on the right.
pub fn polynomial_v_check(n: u64, big_n: usize) -> Result<bool> {
    if n == 0 || big_n < n as usize + 2 {
        return Err(precondition(
            "polynomial_v_check",
            format!("need n ≥ 1 and N ≥ n + 2, got n={n} N={big_n}"),
        ));
    }
    let mut lhs = expand_v(big_n);
    for _ in 0..n {
        lhs = lhs.derivative();
    }
    let lhs = LaurentSeries::from_trunc(&lhs);
    let inner_order = big_n + n as usize;
    let row = a_poly_recurrence(n as usize);
    let mut sum = LaurentSeries::zero(inner_order as i64);
    for (j, a) in row.iter().enumerate() {
        let psi = LaurentSeries::from_trunc(&psi_j_at_h(j as u64 + 1, inner_order));
        sum = &sum + &poly_times_laurent(a, &psi);
    }
    let pole = sign(n - 1) * Rational::from_integer(factorial(n - 1));
    let rhs = &LaurentSeries::monomial(pole, -(n as i64), lhs.order()) + &sum.shift(-2 * n as i64);
    let diff = &lhs - &rhs;
    Ok((diff.min_exp()..=diff.order()).all(|e| diff.coeff(e).is_zero()))
}

/// The quadruple sum
/// Σ_{k=1}^{2m} Σ_{ℓ=0}^{k} Σ_{r=0}^{m} Σ_{i=1}^{m-r-j} (-1)^{i+j+k}
///   C(k, ℓ) C(ℓ, r) C(k+2i, k) C(2m-k-1, k-ℓ-1) C(k+i+m-r-j-1, k+2i-1)·B_{2i}/(k+2i),
/// with C(-1, -1) = 1 at k = 2m.
pub fn nested_sum(m: u64, j: u64) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=2 * m {
        for l in 0..=k {
            let lah = lah_binomial(2 * m as i64 - k as i64 - 1, k as i64 - l as i64 - 1);
            if lah.is_zero() {
                continue;
            }
            let outer = binomial(k, l as i64) * lah;
            for r in 0..=m.min(l) {
                if r + j >= m {
                    continue;
                }
                let w = &outer * binomial(l, r as i64);
                for i in 1..=m - r - j {
                    let b = &w
                        * binomial(k + 2 * i, k as i64)
                        * binomial(k + i + m - r - j - 1, (k + 2 * i - 1) as i64);
                    let t = Rational::from_integer(b) * bernoulli_number(2 * i as usize)
                        / Rational::from_integer(Integer::from(k + 2 * i));
                    acc += sign(i + j + k) * t;
                }
            }
        }
    }
    acc
}

/// Σ_{s=1}^{m} (-1)^s C(m+s-1, m-s)·B_{2s}/(2s).
pub fn nested_rhs_j0(m: u64) -> Rational {
    (1..=m)
        .map(|s| {
            sign(s)
                * Rational::from_integer(binomial(m + s - 1, (m - s) as i64))
                * bernoulli_number(2 * s as usize)
                * rat(1, 2 * s as i64)
        })
        .sum()
}

/// [`nested_sum`] is 0 for 0 < j < m and [`nested_rhs_j0`] for j = 0, for
/// 1 ≤ m ≤ `m_max`.
pub fn nested_identity_check(m_max: u64) -> Result<VerifyReport> {
    if m_max == 0 {
        return Err(precondition(
            "nested_identity_check",
            "m_max must be at least 1",
        ));
    }
    let mut report = ReportBuilder::new("nested_identity", 1, m_max as i64);
    for m in 1..=m_max {
        for j in 0..m {
            let got = nested_sum(m, j);
            let want = if j == 0 {
                nested_rhs_j0(m)
            } else {
                Rational::zero()
            };
            report.record("nested Bernoulli sum", got == want, || {
                format!("m={m} j={j}: {got} vs {want}")
            });
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(a_poly_recurrence(1), vec![z2_minus_1()]);
        let row2 = a_poly_recurrence(2);
        assert_eq!(row2[1], z2_minus_1().pow(2));
        // one recurrence step: -2z(z² - 1) + z²·2z = 2z
        assert_eq!(row2[0], RatPoly::monomial(int(2), 1));
        assert_eq!(a_poly_explicit(1, 2).unwrap(), row2[0]);
        assert!(a_poly_explicit(0, 2).is_err());
        assert!(a_poly_explicit(3, 2).is_err());
        assert!(a_poly_hypergeometric(2, 2).is_err());
    }

    #[test]
    fn forms_agree() {
        let r = a_poly_check(20).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
    }

    #[test]
    fn derivative_form() {
        assert!(polynomial_v_check(1, 10).unwrap());
        assert!(polynomial_v_check(3, 12).unwrap());
        assert!(polynomial_v_check(4, 16).unwrap());
        assert!(polynomial_v_check(2, 3).is_err());
        // constant term of V''/2! is v_2
        let d2 = expand_v(6).derivative().derivative();
        assert_eq!(d2.coeff(0) / int(2), rat(11, 12));
    }

    #[test]
    fn nested() {
        // m = 1, j = 0: the single term -B_2/2
        assert_eq!(nested_sum(1, 0), rat(-1, 12));
        assert_eq!(nested_rhs_j0(1), rat(-1, 12));
        assert!(nested_sum(2, 1).is_zero());
        let r = nested_identity_check(6).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
        assert!(nested_identity_check(0).is_err());
    }
}
