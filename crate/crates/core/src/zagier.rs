//! Zagier's modified Bernoulli numbers B*_n, the polynomials B*_n(x), their
//! denominators, and sweeps over the identities they satisfy.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::classical::{
    bernoulli_number, bernoulli_poly, bernoulli_prefix, chebyshev_t, chebyshev_u, RatPoly,
};
use crate::error::{precondition, Error, Result};
use crate::exactnum::{
    binomial, factor_small, int, is_integer, nu2, nu_p_int, primes_up_to, rat, Integer, Rational,
    Valuation,
};
use crate::report::{ReportBuilder, VerifyReport};

/// Half-width of the integer window used for B*_n(j) checks.
pub const J_WINDOW: i64 = 10;

fn weight(n: u64, r: u64) -> Rational {
    Rational::new(binomial(n + r, 2 * r as i64), Integer::from(n + r))
}

fn positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroIndex)
    } else {
        Ok(())
    }
}

/// B*_n = Σ_{r=0}^{n} C(n+r, 2r)·B_r/(n+r).
pub fn bstar(n: u64) -> Result<Rational> {
    positive(n)?;
    let b = bernoulli_prefix(n as usize);
    Ok((0..=n)
        .filter(|&r| !b[r as usize].is_zero())
        .map(|r| weight(n, r) * &b[r as usize])
        .sum())
}

/// B*_n(x) = Σ_{r=0}^{n} C(n+r, 2r)·B_r(x)/(n+r).
pub fn bstar_poly(n: u64) -> Result<RatPoly> {
    positive(n)?;
    Ok((0..=n).fold(RatPoly::zero(), |acc, r| {
        &acc + &bernoulli_poly(r as usize).scale(&weight(n, r))
    }))
}

/// α_n, the denominator of B*_n.
pub fn alpha(n: u64) -> Result<Integer> {
    Ok(bstar(n)?.denom().clone())
}

/// α_{n,j}, the denominator of B*_n(j).
pub fn alpha_at(n: u64, j: i64) -> Result<Integer> {
    Ok(bstar_poly(n)?.eval(&int(j)).denom().clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZagierRecord {
    pub n: u64,
    pub value: Rational,
    pub alpha: Integer,
    pub nu2: i64,
}

impl ZagierRecord {
    pub fn compute(n: u64) -> Result<Self> {
        let value = bstar(n)?;
        let nu2 = match nu2(&value) {
            Valuation::Finite(v) => v,
            Valuation::Infinite => {
                return Err(precondition("ZagierRecord", format!("B*_{n} is zero")))
            }
        };
        Ok(ZagierRecord {
            n,
            alpha: value.denom().clone(),
            value,
            nu2,
        })
    }
}

/// 2 + ν₂(n) minus 1 when n ≡ 6 (mod 12) and 2 when n ≡ 0 (mod 12).
pub fn nu2_closed_form(n: u64) -> i64 {
    let correction = match n % 12 {
        6 => 1,
        0 => 2,
        _ => 0,
    };
    2 + n.trailing_zeros() as i64 - correction
}

/// -ν₂(B*_n) against [`nu2_closed_form`], and 4 | α_n, for 1 ≤ n ≤ `n_max`.
pub fn nu2_theorem_check(n_max: u64) -> Result<VerifyReport> {
    if n_max == 0 {
        return Err(precondition(
            "nu2_theorem_check",
            "n_max must be at least 1",
        ));
    }
    let mut report = ReportBuilder::new("nu2_theorem", 1, n_max as i64);
    let rows: Vec<Result<ZagierRecord>> = (1..=n_max)
        .into_par_iter()
        .map(ZagierRecord::compute)
        .collect();
    for rec in rows {
        let rec = rec?;
        let want = nu2_closed_form(rec.n);
        report.record("-nu2(B*_n) closed form", -rec.nu2 == want, || {
            format!("n={}: {} vs {want}", rec.n, -rec.nu2)
        });
        report.record("4 | alpha_n", (&rec.alpha % 4u32).is_zero(), || {
            format!("n={}: alpha={}", rec.n, rec.alpha)
        });
    }
    Ok(report.finish())
}

/// ν₂(8n·B*_{2n}) follows 0, 0, 1, 0, 0, 2 for 1 ≤ n ≤ `n_max`.
pub fn nu2_8n_period_check(n_max: u64) -> Result<VerifyReport> {
    if n_max < 12 {
        return Err(precondition(
            "nu2_8n_period_check",
            "n_max must be at least 12",
        ));
    }
    const PATTERN: [i64; 6] = [0, 0, 1, 0, 0, 2];
    let mut report = ReportBuilder::new("nu2_8n_period", 1, n_max as i64);
    let vals: Vec<Result<Valuation>> = (1..=n_max)
        .into_par_iter()
        .map(|n| Ok(nu2(&(bstar(2 * n)? * int(8 * n as i64)))))
        .collect();
    for (i, v) in vals.into_iter().enumerate() {
        let n = i as u64 + 1;
        let want = PATTERN[(i) % 6];
        let v = v?;
        report.record(
            "nu2(8n B*_2n) period 6",
            v == Valuation::Finite(want),
            || format!("n={n}: {v} vs {want}"),
        );
    }
    Ok(report.finish())
}

fn shift(c: Rational) -> RatPoly {
    RatPoly::linear(c, int(1))
}

/// B*_n(x+1) = B*_n(x) + (1/2)·U_{n-1}(x/2 + 1) for 1 ≤ n ≤ `n_max`.
pub fn translation_check(n_max: u64) -> Result<VerifyReport> {
    let mut report = ReportBuilder::new("translation", 1, n_max as i64);
    let half_plus_one = RatPoly::linear(int(1), rat(1, 2));
    for n in 1..=n_max {
        let p = bstar_poly(n)?;
        let lhs = &p.compose(&shift(int(1))) - &p;
        let rhs = chebyshev_u(n as i64 - 1)
            .compose(&half_plus_one)
            .scale(&rat(1, 2));
        report.record("B*_n(x+1) - B*_n(x) = U_(n-1)(x/2+1)/2", lhs == rhs, || {
            format!("n={n}")
        });
    }
    Ok(report.finish())
}

/// B*_n(1) = B*_n + n/2 for 1 ≤ n ≤ `n_max`.
pub fn value_at_one_check(n_max: u64) -> Result<VerifyReport> {
    let mut report = ReportBuilder::new("value_at_one", 1, n_max as i64);
    for n in 1..=n_max {
        let lhs = bstar_poly(n)?.eval(&int(1));
        let rhs = bstar(n)? + rat(n as i64, 2);
        report.record("B*_n(1) = B*_n + n/2", lhs == rhs, || format!("n={n}"));
    }
    Ok(report.finish())
}

/// B*_n(-x-3) = (-1)^n·B*_n(x) for 1 ≤ n ≤ `n_max`.
pub fn reflection_check(n_max: u64) -> Result<VerifyReport> {
    let mut report = ReportBuilder::new("reflection", 1, n_max as i64);
    let mirror = RatPoly::linear(int(-3), int(-1));
    for n in 1..=n_max {
        let p = bstar_poly(n)?;
        let lhs = p.compose(&mirror);
        let rhs = if n % 2 == 0 { p } else { -&p };
        report.record("B*_n(-x-3) = (-1)^n B*_n(x)", lhs == rhs, || {
            format!("n={n}")
        });
    }
    Ok(report.finish())
}

/// For odd m ≤ `n_max`:
/// 4·B*_m(j) is an odd integer for |j| ≤ [`J_WINDOW`];
/// B*_{2n+1} = (-1)^n/4 + (1/2)·U_{2n}(1/2);
/// B*_{m+12} = B*_m.
pub fn odd_index_suite(n_max: u64) -> Result<VerifyReport> {
    if n_max < 7 {
        return Err(precondition("odd_index_suite", "n_max must be at least 7"));
    }
    let mut report = ReportBuilder::new("odd_index", 1, n_max as i64);
    for m in (1..=n_max).step_by(2) {
        let p = bstar_poly(m)?;
        for j in -J_WINDOW..=J_WINDOW {
            let v = p.eval(&int(j)) * int(4);
            let odd = is_integer(&v) && v.numer().is_odd();
            report.record("4 B*_m(j) odd integer", odd, || format!("m={m} j={j}: {v}"));
        }
        let n = (m - 1) / 2;
        let sign = if n % 2 == 0 { rat(1, 4) } else { rat(-1, 4) };
        let closed = sign + chebyshev_u(2 * n as i64).eval(&rat(1, 2)) * rat(1, 2);
        let b = p.eval(&Rational::zero());
        report.record("B*_(2n+1) = (-1)^n/4 + U_2n(1/2)/2", b == closed, || {
            format!("m={m}: {b} vs {closed}")
        });
        let later = bstar(m + 12)?;
        report.record("B*_(m+12) = B*_m", later == b, || format!("m={m}"));
    }
    Ok(report.finish())
}

/// Σ_{r=0}^{n} (-1)^{n+r}·C(n+r, 2r)·B_{2r}(x)/(n+r) = 2·B*_{2n}(x - 2) for
/// 1 ≤ n ≤ `n_max`.
pub fn bstar59_check(n_max: u64) -> Result<VerifyReport> {
    let mut report = ReportBuilder::new("bstar59", 1, n_max as i64);
    for n in 1..=n_max {
        let lhs = (0..=n).fold(RatPoly::zero(), |acc, r| {
            let mut c = weight(n, r);
            if (n + r) % 2 == 1 {
                c = -c;
            }
            &acc + &bernoulli_poly(2 * r as usize).scale(&c)
        });
        let rhs = bstar_poly(2 * n)?.compose(&shift(int(-2))).scale(&int(2));
        report.record("alternating B_2r(x) sum = 2 B*_2n(x-2)", lhs == rhs, || {
            format!("n={n}")
        });
    }
    Ok(report.finish())
}

/// Umbral evaluation of (1/n)·T_n((𝔅 + x + 2)/2): expand in the formal
/// variable 𝔅 and replace 𝔅^k by B_k.
pub fn umbral_bstar(n: u64, x: &Rational) -> Result<Rational> {
    positive(n)?;
    let arg = RatPoly::linear((x + int(2)) * rat(1, 2), rat(1, 2));
    let expanded = chebyshev_t(n as usize).compose(&arg);
    let value: Rational = expanded
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * bernoulli_number(k))
        .sum();
    Ok(value * rat(1, n as i64))
}

/// The umbral representation against B*_n(x) at x ∈ [-J_WINDOW, J_WINDOW] and
/// a few non-integer points, for 1 ≤ n ≤ `n_max`.
pub fn umbral_check(n_max: u64) -> Result<VerifyReport> {
    let mut report = ReportBuilder::new("umbral", 1, n_max as i64);
    let mut points: Vec<Rational> = (-J_WINDOW..=J_WINDOW).map(int).collect();
    points.extend([rat(1, 2), rat(-7, 3), rat(5, 4)]);
    for n in 1..=n_max {
        let p = bstar_poly(n)?;
        for x in &points {
            let u = umbral_bstar(n, x)?;
            let d = p.eval(x);
            report.record("eval T_n((B+x+2)/2)/n = B*_n(x)", u == d, || {
                format!("n={n} x={x}: {u} vs {d}")
            });
        }
    }
    Ok(report.finish())
}

/// α_{n,j} = α_n for 1 ≤ n ≤ `n_max` and |j| ≤ `j_max`, and the numerator of
/// B*_n(j) is odd when 4 | α_n.
pub fn denominator_independence_check(n_max: u64, j_max: i64) -> Result<VerifyReport> {
    let mut report = ReportBuilder::new("alpha_independence", 1, n_max as i64);
    let rows: Vec<Result<Vec<(i64, Rational)>>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let p = bstar_poly(n)?;
            Ok((-j_max..=j_max).map(|j| (j, p.eval(&int(j)))).collect())
        })
        .collect();
    for (i, row) in rows.into_iter().enumerate() {
        let n = i as u64 + 1;
        let a = alpha(n)?;
        let four_divides = (&a % 4u32).is_zero();
        for (j, v) in row? {
            report.record("alpha_(n,j) = alpha_n", v.denom() == &a, || {
                format!("n={n} j={j}: {} vs {a}", v.denom())
            });
            if four_divides {
                report.record("odd numerator of B*_n(j)", v.numer().is_odd(), || {
                    format!("n={n} j={j}")
                });
            }
        }
    }
    Ok(report.finish())
}

fn clausen_sums(n: u64) -> (Rational, Rational) {
    let mut minus = Rational::zero();
    let mut plus = Rational::zero();
    for p in primes_up_to(n + 1) {
        let inv = Rational::new(Integer::one(), Integer::from(p));
        if n % (p - 1) == 0 {
            minus += &inv;
        }
        if n % (p + 1) == 0 {
            plus += inv;
        }
    }
    (minus, plus)
}

/// Whether 2n·B*_n + Σ_{(p-1)|n} 1/p - Σ_{(p+1)|n} 1/p is an integer. Only
/// even n are accepted: the congruence fails for n ≡ 3 (mod 6).
pub fn zagier_congruence_check(n: u64) -> Result<bool> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddIndex(n));
    }
    let (minus, plus) = clausen_sums(n);
    let v = bstar(n)? * int(2 * n as i64) + minus - plus;
    Ok(is_integer(&v))
}

/// [`zagier_congruence_check`] for every even n ≤ `n_max`.
pub fn zagier_congruence_sweep(n_max: u64) -> Result<VerifyReport> {
    if n_max < 2 {
        return Err(precondition(
            "zagier_congruence_sweep",
            "n_max must be at least 2",
        ));
    }
    let mut report = ReportBuilder::new("zagier_congruence", 2, n_max as i64);
    let evens: Vec<u64> = (2..=n_max).step_by(2).collect();
    let oks: Vec<Result<bool>> = evens
        .par_iter()
        .map(|&n| zagier_congruence_check(n))
        .collect();
    for (n, ok) in evens.into_iter().zip(oks) {
        report.record("2nB*_n + sum 1/p - sum 1/p integral", ok?, || {
            format!("n={n}")
        });
    }
    Ok(report.finish())
}

/// For each n ≤ `n_max` and each prime p | α_n, whether (p-1) | n or
/// (p+1) | n. Violations are listed as witnesses.
pub fn conjecture_scan(n_max: u64) -> Result<VerifyReport> {
    if n_max == 0 {
        return Err(precondition("conjecture_scan", "n_max must be at least 1"));
    }
    let mut report = ReportBuilder::new("conjecture", 1, n_max as i64);
    let alphas: Vec<Result<Integer>> = (1..=n_max).into_par_iter().map(alpha).collect();
    for (i, a) in alphas.into_iter().enumerate() {
        let n = i as u64 + 1;
        let a = a?;
        // any prime p > n + 1 already violates both conditions
        let (primes, rest) = factor_small(&a, n + 1);
        report.record("primes of alpha_n within n+1", rest.is_one(), || {
            format!("n={n}: unfactored {rest}")
        });
        for (p, _) in primes {
            let ok = n % (p - 1) == 0 || n % (p + 1) == 0;
            report.record("p | alpha_n => (p-1) | n or (p+1) | n", ok, || {
                format!("n={n} p={p}")
            });
        }
    }
    Ok(report.finish())
}

/// ν_p(α_n) for each prime p | α_n.
pub fn alpha_factorization(n: u64) -> Result<Vec<(u64, u64)>> {
    let a = alpha(n)?;
    let (found, rest) = factor_small(&a, n + 1);
    let mut out: Vec<(u64, u64)> = found.into_iter().map(|(p, e)| (p, e as u64)).collect();
    if !rest.is_one() {
        // cannot happen when the conjecture holds; fall back to slow division
        let mut p = n + 2;
        let mut rest = rest;
        while !rest.is_one() {
            if let Some(e) = nu_p_int(&rest, p).filter(|&e| e > 0) {
                out.push((p, e));
                rest /= Integer::from(p).pow(e as u32);
            }
            p += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_values() {
        let want = [
            rat(3, 4),
            rat(1, 24),
            rat(-1, 4),
            rat(-27, 80),
            rat(-1, 4),
            rat(-29, 1260),
            rat(1, 4),
            rat(451, 1120),
            rat(1, 4),
            rat(-65, 264),
        ];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(&bstar(i as u64 + 1).unwrap(), w);
        }
        assert_eq!(bstar(0), Err(Error::ZeroIndex));
        assert!(bstar_poly(0).is_err());
    }

    #[test]
    fn listed_alpha_quarters() {
        let want = [
            6, 20, 315, 280, 66, 3003, 78, 9520, 305235, 20900, 138, 19734, 6, 7540,
        ];
        for (i, w) in want.iter().enumerate() {
            let n = 2 * (i as u64 + 1);
            assert_eq!(alpha(n).unwrap(), Integer::from(4 * w), "n = {n}");
        }
        assert_eq!(alpha(3).unwrap(), Integer::from(4));
        assert_eq!(alpha_at(6, -4).unwrap(), Integer::from(1260));
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            bstar_poly(1).unwrap(),
            RatPoly::linear(rat(3, 4), rat(1, 2))
        );
        assert_eq!(
            bstar_poly(2).unwrap(),
            RatPoly::new(vec![rat(1, 24), rat(18, 24), rat(6, 24)])
        );
        assert_eq!(bstar_poly(3).unwrap().eval(&int(0)), rat(-1, 4));
        for n in 1..=20 {
            let p = bstar_poly(n).unwrap();
            assert_eq!(p.degree(), Some(n as usize));
            assert_eq!(p.eval(&int(0)), bstar(n).unwrap());
        }
    }

    #[test]
    fn nu2_examples() {
        assert_eq!(nu2_closed_form(2), 3);
        assert_eq!(nu2_closed_form(6), 2);
        assert_eq!(nu2_closed_form(12), 2);
        assert!(nu2_theorem_check(60).unwrap().passed());
        assert!(nu2_8n_period_check(36).unwrap().passed());
        assert!(nu2_8n_period_check(11).is_err());
    }

    #[test]
    fn identity_sweeps() {
        assert!(translation_check(20).unwrap().passed());
        assert!(reflection_check(20).unwrap().passed());
        assert!(value_at_one_check(20).unwrap().passed());
        assert!(bstar59_check(12).unwrap().passed());
        assert!(umbral_check(12).unwrap().passed());
        let r = odd_index_suite(25).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
        assert!(odd_index_suite(5).is_err());
        assert!(denominator_independence_check(20, 10).unwrap().passed());
    }

    #[test]
    fn umbral_examples() {
        assert_eq!(umbral_bstar(1, &int(0)).unwrap(), rat(3, 4));
        assert_eq!(umbral_bstar(2, &int(0)).unwrap(), rat(1, 24));
        assert_eq!(umbral_bstar(4, &int(-1)).unwrap(), rat(13, 80));
    }

    #[test]
    fn congruence() {
        for n in [2, 12, 30] {
            assert!(zagier_congruence_check(n).unwrap());
        }
        assert_eq!(zagier_congruence_check(3), Err(Error::OddIndex(3)));
        // independent check of the odd case that is excluded: n = 3
        let (minus, plus) = clausen_sums(3);
        assert!(!is_integer(&(bstar(3).unwrap() * int(6) + minus - plus)));
    }

    #[test]
    fn conjecture() {
        let r = conjecture_scan(60).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
        assert_eq!(
            alpha_factorization(6).unwrap(),
            vec![(2, 2), (3, 2), (5, 1), (7, 1)]
        );
    }
}
