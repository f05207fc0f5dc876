//! Generating-function identities for B*_n, checked coefficient by
//! coefficient.

use num_traits::Zero;

use super::{
    detect_period, expand_v, expand_zagier_genfun, ratfunc_expand, ratfunc_expand_mod2k, ModSeries,
    TruncSeries,
};
use crate::classical::RatPoly;
use crate::error::{precondition, Result};
use crate::exactnum::{binomial, int, rat, reduce_mod_2k, Integer, Rational};
use crate::report::{ReportBuilder, VerifyReport};
use crate::zagier::{bstar, bstar_poly};

fn poly(c: &[i64]) -> RatPoly {
    RatPoly::new(c.iter().map(|&x| int(x)).collect())
}

/// Σ B*_{2n} z^{2n} against two right-hand sides through z^n:
///
/// * as stated, `-(1/2)·V(z) - (z/4)·[1/(z² + 1) + 2(1 - z⁴)/(1 - z⁶)]`;
/// * rederived from `-(1/2)·log z - (1/4)·ψ(u + 2) - (1/4)·ψ(u - 1)` with
///   u = z + 1/z, `-(1/2)·V(z) - (z/4)·[1/(z² + 1) - 2z(1 - z²)/(1 - z⁶)]`.
///
/// The stated bracket is odd in z, so it cannot supply the even-index
/// difference between B*_{2n} and -v_{2n}/2; it fails from z^1 on.
pub fn even_genfun_check(n: usize) -> Result<VerifyReport> {
    if n < 2 {
        return Err(precondition(
            "even_genfun_check",
            format!("N = {n} is below 2"),
        ));
    }
    let mut report = ReportBuilder::new("even_genfun", 0, n as i64);
    let sextic = poly(&[1, 0, 0, 0, 0, 0, -1]);
    let first = ratfunc_expand(&poly(&[1]), &poly(&[1, 0, 1]), n)?;
    let stated = &first + &ratfunc_expand(&poly(&[2, 0, 0, 0, -2]), &sextic, n)?;
    let rederived = &first - &ratfunc_expand(&poly(&[0, 2, 0, -2]), &sextic, n)?;
    let half_v = expand_v(n).scale(&rat(-1, 2));
    let rhs_stated = &half_v - &stated.shift(1).scale(&rat(1, 4));
    let rhs_rederived = &half_v - &rederived.shift(1).scale(&rat(1, 4));
    for i in 0..=n {
        let lhs = if i >= 2 && i % 2 == 0 {
            bstar(i as u64)?
        } else {
            Rational::zero()
        };
        for (anchor, rhs) in [(EVEN_STATED, &rhs_stated), (EVEN_REDERIVED, &rhs_rederived)] {
            let r = rhs.coeff(i);
            report.record(anchor, &lhs == r, || format!("z^{i}: {lhs} vs {r}"));
        }
    }
    Ok(report.finish())
}

pub const EVEN_STATED: &str = "sum B*_2n z^2n = -V/2 - (z/4)[1/(z^2+1) + 2(1-z^4)/(1-z^6)]";
pub const EVEN_REDERIVED: &str = "sum B*_2n z^2n = -V/2 - (z/4)[1/(z^2+1) - 2z(1-z^2)/(1-z^6)]";

/// Coefficients of the B*_m(x) generating function through z^n against
/// B*_m(x) summed directly, at each x in `xs`.
pub fn zagier_genfun_check(xs: &[Rational], n: usize) -> Result<VerifyReport> {
    if n == 0 {
        return Err(precondition("zagier_genfun_check", "N must be at least 1"));
    }
    let mut report = ReportBuilder::new("zagier_genfun", 1, n as i64);
    for x in xs {
        let s = expand_zagier_genfun(x, n);
        for m in 1..=n {
            let want = bstar_poly(m as u64)?.eval(x);
            let got = s.coeff(m);
            report.record(
                "sum B*_m(x) z^m = generating function",
                *got == want,
                || format!("x={x} m={m}: {got} vs {want}"),
            );
        }
    }
    Ok(report.finish())
}

fn four_term_mod8(n: usize) -> Result<ModSeries> {
    let a = ratfunc_expand_mod2k(&poly(&[2]), &poly(&[1, -1]), 3, n)?;
    // x(1 + x)(1 + x²) = x + x² + x³ + x⁴ over (1 - x)^5
    let b = ratfunc_expand_mod2k(
        &poly(&[0, 1, 1, 1, 1]),
        &poly(&[1, -5, 10, -10, 5, -1]),
        3,
        n,
    )?;
    let c = ratfunc_expand_mod2k(&r2_numer(), &r2_denom(), 3, n)?;
    let d = ratfunc_expand_mod2k(&r3_numer(), &r3_denom(), 3, n)?;
    Ok(a.sub(&b).add(&c.scale(3)).sub(&d.scale(2)))
}

/// 4 for n = 0, else 4n·B*_n reduced mod 8.
pub fn four_n_bstar_mod8(n: usize) -> Result<u64> {
    if n == 0 {
        return Ok(4);
    }
    reduce_mod_2k(&(bstar(n as u64)? * int(4 * n as i64)), 3)
}

/// The mod-8 description of 4n·B*_n:
///
/// * `4 + Σ 4nB*_n x^n ≡ 2/(1-x) - x(1+x)(1+x²)/(1-x)^5 + 3·R₂ - 2·R₃`,
///   where R₂, R₃ are the second and third rational functions of
///   [`prop22_check`];
/// * the stream 4nB*_n mod 8 has period 24;
/// * 8n·B*_{2n} mod 8 is the coefficient of y^n in
///   `y(3 + y + 6y² + y³ + 3y⁴ + 4y⁵)/(1 - y⁶)`.
pub fn mod8_genfun_check(n: usize) -> Result<VerifyReport> {
    if n < 48 {
        return Err(precondition(
            "mod8_genfun_check",
            format!("N = {n} is below 48"),
        ));
    }
    let mut report = ReportBuilder::new("mod8_genfun", 0, n as i64);
    let rhs = four_term_mod8(n)?;
    let stream: Vec<u64> = (0..=n).map(four_n_bstar_mod8).collect::<Result<_>>()?;
    for (i, (l, r)) in stream.iter().zip(rhs.coeffs()).enumerate() {
        report.record("4nB*_n mod 8 = four-term rational function", l == r, || {
            format!("n={i}: {l} vs {r}")
        });
    }
    let p = detect_period(&stream, 2);
    report.record("period 24", p == Some(24), || format!("detected {p:?}"));
    let even = ratfunc_expand_mod2k(
        &poly(&[0, 3, 1, 6, 1, 3, 4]),
        &poly(&[1, 0, 0, 0, 0, 0, -1]),
        3,
        n / 2,
    )?;
    for m in 1..=n / 2 {
        let l = stream[2 * m];
        let r = even.coeffs()[m];
        report.record("8nB*_2n mod 8 = even part", l == r, || {
            format!("n={m}: {l} vs {r}")
        });
    }
    Ok(report.finish())
}

fn r2_numer() -> RatPoly {
    // (1 - 2x)(2 - 2x + x²)
    &poly(&[1, -2]) * &poly(&[2, -2, 1])
}

fn r2_denom() -> RatPoly {
    &poly(&[1, -1, 1]) * &poly(&[1, -3, 1])
}

fn r3_numer() -> RatPoly {
    poly(&[2, -6, 7, -2])
}

fn r3_denom() -> RatPoly {
    poly(&[1, -4, 7, -4, 1])
}

/// Left-hand coefficients of the three binomial-sum generating functions:
/// `2` at n = 0, then Σ_k C(n + s·k, 2s·k)·sign^k·2n/(n + s·k) with
/// (s, sign) = (1, +1), (2, +1), (2, -1).
pub fn prop22_lhs(identity: usize, n: u64) -> Rational {
    if n == 0 {
        return int(2);
    }
    let (step, alternate) = match identity {
        1 => (1, false),
        2 => (2, false),
        3 => (2, true),
        _ => panic!("identity must be 1, 2 or 3"),
    };
    let kmax = if step == 1 { n } else { n / 2 };
    (0..=kmax)
        .map(|k| {
            let c = binomial(n + step * k, 2 * (step * k) as i64) * Integer::from(2 * n);
            let t = Rational::new(c, Integer::from(n + step * k));
            if alternate && k % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// Expansion of the closed form of identity 1, 2 or 3 through x^n.
pub fn prop22_rhs(identity: usize, n: usize) -> Result<TruncSeries> {
    match identity {
        1 => ratfunc_expand(&poly(&[2, -3]), &poly(&[1, -3, 1]), n),
        2 => ratfunc_expand(&r2_numer(), &r2_denom(), n),
        3 => ratfunc_expand(&r3_numer(), &r3_denom(), n),
        _ => Err(precondition(
            "prop22_rhs",
            format!("no identity {identity}"),
        )),
    }
}

/// The three binomial-sum generating functions against their rational
/// closed forms, through x^n.
pub fn prop22_check(n: usize) -> Result<VerifyReport> {
    if n < 4 {
        return Err(precondition("prop22_check", format!("N = {n} is below 4")));
    }
    let mut report = ReportBuilder::new("prop22", 0, n as i64);
    for id in 1..=3 {
        let rhs = prop22_rhs(id, n)?;
        let anchor = format!("binomial sum {id} = rational closed form");
        for i in 0..=n {
            let l = prop22_lhs(id, i as u64);
            let r = rhs.coeff(i);
            report.record(&anchor, &l == r, || format!("n={i}: {l} vs {r}"));
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_genfun() {
        assert!(even_genfun_check(1).is_err());
        let r = even_genfun_check(40).unwrap();
        assert_eq!(r.check(EVEN_REDERIVED).unwrap().witness, None);
        let stated = r.check(EVEN_STATED).unwrap();
        assert!(stated
            .witness
            .as_deref()
            .unwrap()
            .starts_with("z^1: 0 vs -1/2"));
    }

    #[test]
    fn genfun_at_points() {
        let xs = [int(0), int(1), int(-1), int(-2), int(5), rat(-7, 3)];
        let r = zagier_genfun_check(&xs, 40).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
    }

    #[test]
    fn mod8() {
        assert!(mod8_genfun_check(47).is_err());
        assert_eq!(four_n_bstar_mod8(1).unwrap(), 3);
        assert_eq!(four_n_bstar_mod8(2).unwrap(), 3);
        let r = mod8_genfun_check(96).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
        let expect = [
            4, 3, 3, 5, 1, 3, 6, 7, 1, 1, 3, 7, 4, 7, 3, 1, 1, 7, 6, 3, 1, 5, 3, 3,
        ];
        let got: Vec<u64> = (0..24).map(|n| four_n_bstar_mod8(n).unwrap()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn prop22() {
        assert_eq!(prop22_lhs(1, 1), int(3));
        assert_eq!(prop22_lhs(1, 0), int(2));
        assert!(prop22_check(3).is_err());
        let r = prop22_check(64).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
        assert_eq!(r.checks.len(), 3);
    }
}
