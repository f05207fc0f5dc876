//! Expansions of ψ_j(z + 1/z), and v_{2n} from Hoppe's formula applied to
//! V(z) = F(g(z)) + log(z² + 1) with F(w) = ψ(1/w) + log w, g(z) = z/(z² + 1).

use num_traits::Zero;
use rayon::prelude::*;

use super::faa::{even_half, log_term, s_power};
use crate::classical::bernoulli_number;
use crate::error::{precondition, Result};
use crate::exactnum::{binomial, binomial_signed, factorial, int, Integer, Rational};
use crate::report::{ReportBuilder, VerifyReport};
use crate::series::{LaurentSeries, TruncSeries};

fn signed(c: Rational, odd: bool) -> Rational {
    if odd {
        -c
    } else {
        c
    }
}

fn fac(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// ψ_j(z + 1/z) through z^order, j ≥ 1, in the regrouped form
/// (-1)^{j-1}/2·z^{j+1}·Σ_r (-1)^r (j+r)!/r!·z^{2r}
/// + (-1)^{j-1}·z^j·Σ_ℓ [Σ_{k=0}^{ℓ} (-1)^{ℓ-k} B_{2k} (k+j+ℓ-1)!/((2k)!(ℓ-k)!)]·z^{2ℓ}.
pub fn psi_j_at_h(j: u64, order: usize) -> TruncSeries {
    assert!(j >= 1, "ψ_j needs j ≥ 1");
    let mut c = vec![Rational::zero(); order + 1];
    let odd = j % 2 == 0; // sign (-1)^{j-1}
    let mut r = 0u64;
    while (j + 1 + 2 * r) as usize <= order {
        let t = fac(j + r) / fac(r) / int(2);
        c[(j + 1 + 2 * r) as usize] += signed(t, odd ^ (r % 2 == 1));
        r += 1;
    }
    let mut l = 0u64;
    while (j + 2 * l) as usize <= order {
        let inner: Rational = (0..=l)
            .map(|k| {
                let t = bernoulli_number(2 * k as usize) * fac(k + j + l - 1)
                    / (fac(2 * k) * fac(l - k));
                signed(t, (l - k) % 2 == 1)
            })
            .sum();
        c[(j + 2 * l) as usize] += signed(inner, odd);
        l += 1;
    }
    TruncSeries::new(c, order)
}

/// ψ_j(z + 1/z) through z^order from the term-by-term asymptotic series of
/// ψ_j(x) at x = 1/s, s = z/(z² + 1):
/// (-1)^{j-1}·[(j-1)!·s^j + j!/2·s^{j+1} + Σ_k B_{2k}(2k+j-1)!/(2k)!·s^{2k+j}].
pub fn psi_j_direct(j: u64, order: usize) -> TruncSeries {
    let num = TruncSeries::new(vec![int(0), int(1)], order);
    let s = num
        .div(&TruncSeries::new(vec![int(1), int(0), int(1)], order))
        .expect("constant term 1");
    let mut acc =
        &s.pow(j as u32).scale(&fac(j - 1)) + &s.pow(j as u32 + 1).scale(&(fac(j) / int(2)));
    let mut k = 1u64;
    while (2 * k + j) as usize <= order {
        let c = bernoulli_number(2 * k as usize) * fac(2 * k + j - 1) / fac(2 * k);
        acc = &acc + &s.pow((2 * k + j) as u32).scale(&c);
        k += 1;
    }
    acc.scale(&signed(int(1), j % 2 == 0))
}

/// The regrouped ψ_j(z + 1/z) expansion against direct composition, for
/// 1 ≤ j ≤ `j_max` through z^order.
pub fn psi_expansion_check(j_max: u64, order: usize) -> VerifyReport {
    let mut report = ReportBuilder::new("psi_expansion", 1, j_max as i64);
    for j in 1..=j_max {
        let a = psi_j_at_h(j, order);
        let b = psi_j_direct(j, order);
        report.record("regrouped psi_j(z+1/z) = composed series", a == b, || {
            format!("j={j} order={order}")
        });
    }
    report.finish()
}

/// (z^{-1} + z)^p as an exact Laurent polynomial, labelled with `order`.
fn inv_g_power(p: u64, order: i64) -> LaurentSeries {
    let mut c = vec![Rational::zero(); 2 * p as usize + 1];
    for i in 0..=p {
        c[2 * i as usize] = Rational::from_integer(binomial(p, i as i64));
    }
    LaurentSeries::new(-(p as i64), c, order)
}

/// F^{(k)}(g(z)) for k ≥ 1:
/// (-1)^k k!·Σ_{r=1}^{k} C(k-1, r-1)/r!·((z² + 1)/z)^{k+r}·ψ_r((z² + 1)/z)
/// + (-1)^{k-1}(k-1)!·((z² + 1)/z)^k, through z^(order - 2k).
pub fn fk_at_g(k: u64, order: usize) -> LaurentSeries {
    let o = order as i64;
    let lead = signed(fac(k), k % 2 == 1);
    let mut acc = inv_g_power(k, o).scale(&signed(fac(k - 1), k % 2 == 0));
    for r in 1..=k {
        let c = &lead * Rational::new(binomial(k - 1, r as i64 - 1), factorial(r));
        let psi = LaurentSeries::from_trunc(&psi_j_at_h(r, order));
        acc = &acc + &(&inv_g_power(k + r, o) * &psi).scale(&c);
    }
    acc
}

/// d^n/dz^n [g(z)^j] = n!·Σ_r (-1)^r C(j+r-1, r) C(2r+j, n) z^{2r+j-n}, through
/// z^order. Only terms with 2r + j ≥ n survive, so this is a power series.
pub fn g_power_derivative(n: u64, j: u64, order: usize) -> TruncSeries {
    let mut c = vec![Rational::zero(); order + 1];
    let mut r = 0u64;
    loop {
        let top = 2 * r + j;
        if top >= n {
            let e = (top - n) as usize;
            if e > order {
                break;
            }
            let b = binomial_signed(j as i64 + r as i64 - 1, r as i64) * binomial(top, n as i64);
            c[e] += signed(Rational::from_integer(b), r % 2 == 1);
        }
        r += 1;
    }
    TruncSeries::new(c, order).scale(&fac(n))
}

/// P_{n,k}(g(z)) = Σ_{j=0}^{k} (-1)^{k-j} C(k, j)·g^{k-j}·d^n[g^j], through z^order.
pub fn p_nk(n: u64, k: u64, order: usize) -> TruncSeries {
    let mut acc = TruncSeries::zero(order);
    for j in 1..=k {
        let c = signed(
            Rational::from_integer(binomial(k, j as i64)),
            (k - j) % 2 == 1,
        );
        let term = &s_power(k - j, order) * &g_power_derivative(n, j, order);
        acc = &acc + &term.scale(&c);
    }
    acc
}

/// (1/(2n)!)·Σ_{k=1}^{2n} F^{(k)}(g)·P_{2n,k}(g)/k!, the z-expansion of
/// F(g(z))^{(2n)}/(2n)!, through z^0.
pub fn hoppe_sum(m: u64) -> Result<LaurentSeries> {
    let n = even_half(m)?;
    let order = 4 * n as usize;
    let terms: Vec<LaurentSeries> = (1..=m)
        .into_par_iter()
        .map(|k| {
            let f = fk_at_g(k, order);
            let p = LaurentSeries::from_trunc(&p_nk(m, k, order));
            (&f * &p).scale(&fac(k).recip())
        })
        .collect();
    let total = terms
        .into_iter()
        .reduce(|a, b| &a + &b)
        .expect("at least one term");
    Ok(total.truncate(0).scale(&fac(m).recip()))
}

/// v_{2n} from Hoppe's formula: the constant term of [`hoppe_sum`] plus the
/// (-1)^{n-1}/n contributed by log(z² + 1). Leftover negative powers of z
/// are an error.
pub fn v_hoppe(m: u64) -> Result<Rational> {
    let n = even_half(m)?;
    let s = hoppe_sum(m)?;
    s.assert_no_negative_part()?;
    Ok(s.constant_term()? + log_term(n))
}

/// Σ_{ℓ=1}^{r} (-1)^ℓ r!(ℓ+k-1)!/(ℓ!(r-ℓ)!(ℓ-1)!); the ℓ = 0 term vanishes.
pub fn hoppe_coefficient_sum(k: u64, r: u64) -> Integer {
    (1..=r)
        .map(|l| {
            let t = factorial(r) * factorial(l + k - 1)
                / (factorial(l) * factorial(r - l) * factorial(l - 1));
            if l % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// The coefficient identity
/// Σ_ℓ (-1)^ℓ r!(ℓ+k-1)!/(ℓ!(r-ℓ)!(ℓ-1)!) = (-1)^r k! C(k-1, r-1)
/// for 1 ≤ r ≤ k ≤ `k_max`, and d^n[g^j] from the binomial-series formula
/// against term-by-term differentiation of g^j for n ≤ 6, j ≤ 5, through z^8.
pub fn hoppe_fk_coeff_check(k_max: u64) -> Result<VerifyReport> {
    if k_max < 2 {
        return Err(precondition(
            "hoppe_fk_coeff_check",
            "k_max must be at least 2",
        ));
    }
    let mut report = ReportBuilder::new("hoppe_fk", 1, k_max as i64);
    for k in 1..=k_max {
        for r in 1..=k {
            let lhs = hoppe_coefficient_sum(k, r);
            let mut rhs = factorial(k) * binomial(k - 1, r as i64 - 1);
            if r % 2 == 1 {
                rhs = -rhs;
            }
            report.record("Hoppe coefficient sum", lhs == rhs, || {
                format!("k={k} r={r}: {lhs} vs {rhs}")
            });
        }
    }
    const ORDER: usize = 8;
    let g = TruncSeries::new(vec![int(0), int(1)], ORDER + 6)
        .div(&TruncSeries::new(vec![int(1), int(0), int(1)], ORDER + 6))
        .expect("constant term 1");
    for j in 1..=5u64 {
        let mut d = g.pow(j as u32);
        for n in 0..=6u64 {
            if n > 0 {
                d = d.derivative();
            }
            let lemma = g_power_derivative(n, j, ORDER);
            report.record("d^n[g^j] binomial form", lemma == d.truncate(ORDER), || {
                format!("n={n} j={j}")
            });
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn regrouped_psi_matches_composition() {
        assert!(psi_expansion_check(4, 12).passed());
        assert!(psi_expansion_check(7, 20).passed());
        // leading term (-1)^{j-1}(j-1)! z^j
        let p = psi_j_at_h(3, 6);
        assert_eq!(p.coeff(3), &int(2));
        assert!(p.coeff(2).is_zero());
    }

    #[test]
    fn coefficient_identity() {
        let r = hoppe_fk_coeff_check(12).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
        assert!(hoppe_fk_coeff_check(1).is_err());
        assert_eq!(hoppe_coefficient_sum(3, 1), Integer::from(-6));
    }

    #[test]
    fn listed_values() {
        assert_eq!(v_hoppe(2).unwrap(), rat(11, 12));
        assert_eq!(v_hoppe(4).unwrap(), rat(-13, 40));
        assert_eq!(v_hoppe(8).unwrap(), rat(109, 560));
    }
}
