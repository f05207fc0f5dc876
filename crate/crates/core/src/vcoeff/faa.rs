//! v_{2n} from the n-th derivative of W(z) = ψ̃(z + 1/z), ψ̃(x) = ψ(x) - log x,
//! by Faà di Bruno's formula with partial Bell polynomials.

use num_traits::Zero;
use rayon::prelude::*;

use super::bell::bell_der_closed_form;
use crate::classical::bernoulli_number;
use crate::error::{precondition, Error, Result};
use crate::exactnum::{binomial, factorial, int, rat, Integer, Rational};
use crate::series::{LaurentSeries, TruncSeries};

/// s^m for s = z/(z² + 1), from the binomial series
/// s^m = z^m Σ_r (-1)^r C(m+r-1, r) z^{2r}, through z^order.
pub fn s_power(m: u64, order: usize) -> TruncSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    if m == 0 {
        coeffs[0] = int(1);
        return TruncSeries::new(coeffs, order);
    }
    let mut r = 0u64;
    while (m + 2 * r) as usize <= order {
        let c = Rational::from_integer(binomial(m + r - 1, r as i64));
        coeffs[(m + 2 * r) as usize] = if r % 2 == 0 { c } else { -c };
        r += 1;
    }
    TruncSeries::new(coeffs, order)
}

/// I_k(z) = ψ̃^{(k)}(z + 1/z) as a power series through z^order:
/// (-1)^{k-1} k!·[s^{k+1}/2 + Σ_{i≥1} B_{2i}/(k+2i)·C(k+2i, k)·s^{k+2i}].
pub fn ik_series(k: u64, order: usize) -> Result<TruncSeries> {
    if k == 0 {
        return Err(precondition("ik_series", "k must be at least 1"));
    }
    if order < k as usize + 1 {
        return Err(precondition(
            "ik_series",
            format!("order {order} is below k + 1 = {}", k + 1),
        ));
    }
    let mut acc = s_power(k + 1, order).scale(&rat(1, 2));
    let mut i = 1u64;
    while (k + 2 * i) as usize <= order {
        let c = bernoulli_number(2 * i as usize)
            * Rational::new(binomial(k + 2 * i, k as i64), Integer::from(k + 2 * i));
        acc = &acc + &s_power(k + 2 * i, order).scale(&c);
        i += 1;
    }
    let sign = if k % 2 == 1 { int(1) } else { int(-1) };
    Ok(acc.scale(&(sign * Rational::from_integer(factorial(k)))))
}

pub(crate) fn even_half(m: u64) -> Result<u64> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::OddIndex(m));
    }
    Ok(m / 2)
}

/// (-1)^{n-1}/n, the z^{2n} coefficient of log(1 + z²).
pub(crate) fn log_term(n: u64) -> Rational {
    let c = rat(1, n as i64);
    if n % 2 == 1 {
        c
    } else {
        -c
    }
}

/// W^{(2n)}(z) = Σ_{k=1}^{2n} I_k(z)·B_{2n,k}(h'(z), ...) as a Laurent series
/// through z^0, with every series carried to order 4n.
pub fn w_derivative(m: u64) -> Result<LaurentSeries> {
    let n = even_half(m)?;
    let order = 4 * n as i64;
    let terms: Vec<Result<LaurentSeries>> = (1..=m)
        .into_par_iter()
        .map(|k| {
            let bell =
                LaurentSeries::new(-(m as i64) - k as i64, bell_der_closed_form(m, k), order);
            let ik = LaurentSeries::from_trunc(&ik_series(k, order as usize)?);
            Ok(&bell * &ik)
        })
        .collect();
    let mut total = LaurentSeries::zero(0);
    let mut first = true;
    for t in terms {
        let t = t?;
        total = if first { t } else { &total + &t };
        first = false;
    }
    Ok(total.truncate(0))
}

/// v_{2n} = W^{(2n)}(0)/(2n)! + (-1)^{n-1}/n. Every negative power of z in
/// W^{(2n)} must cancel; a leftover one is an error.
pub fn v_faa_di_bruno(m: u64) -> Result<Rational> {
    let n = even_half(m)?;
    let w = w_derivative(m)?;
    w.assert_no_negative_part()?;
    let c = w.constant_term()?;
    Ok(c / Rational::from_integer(factorial(m)) + log_term(n))
}
