//! The closed-form and series routes to v_n.

use num_traits::Zero;

use super::faa::even_half;
use crate::classical::{bernoulli_number, chebyshev_t, RatPoly};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, int, rat, Rational};
use crate::series::expand_v;
use crate::zagier::bstar_poly;

fn sign(e: u64) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroIndex)
    } else {
        Ok(())
    }
}

/// v_n = Σ_{k=0}^{⌊n/2⌋} (-1)^{n-k+1} C(n-k, k)/(n-k)·B_{n-2k}, with v_0 = 0.
pub fn v_umbral(n: u64) -> Rational {
    (0..=n / 2)
        .filter(|&k| k < n)
        .map(|k| {
            sign(n - k + 1)
                * Rational::new(binomial(n - k, k as i64), (n - k).into())
                * bernoulli_number((n - 2 * k) as usize)
        })
        .sum()
}

/// v_{2n-1} = (-1)^n/2 and
/// v_{2n} = (-1)^{n+1}·[1/n + Σ_{k=1}^{n} (-1)^k C(n+k-1, n-k)·B_{2k}/(2k)].
pub fn v_parity(m: u64) -> Result<Rational> {
    positive(m)?;
    if m % 2 == 1 {
        return Ok(sign(m.div_ceil(2)) * rat(1, 2));
    }
    let n = m / 2;
    let inner: Rational = (1..=n)
        .map(|k| {
            sign(k)
                * Rational::from_integer(binomial(n + k - 1, (n - k) as i64))
                * bernoulli_number(2 * k as usize)
                * rat(1, 2 * k as i64)
        })
        .sum();
    Ok(sign(n + 1) * (rat(1, n as i64) + inner))
}

/// v_n = -2·B*_n(-1).
pub fn v_zagier_eval(n: u64) -> Result<Rational> {
    Ok(bstar_poly(n)?.eval(&int(-1)) * int(-2))
}

/// The z^n coefficient of the expansion of V(z) = log z + ψ(z + 1/z).
pub fn v_series(n: u64) -> Result<Rational> {
    positive(n)?;
    Ok(expand_v(n as usize).coeff(n as usize).clone())
}

/// Replace X^k by B_k in a polynomial in X.
fn umbral_eval(p: &RatPoly) -> Rational {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| c * bernoulli_number(k))
        .sum()
}

/// v_{2n} = -(1/n)·T_{2n}(𝔅/2) with 𝔅^k ↦ B_k, also evaluated as
/// -(1/n)·T_n((𝔅² - 2)/2); the two must agree.
pub fn v_cheb_umbral(m: u64) -> Result<Rational> {
    let n = even_half(m)?;
    let scale = rat(-1, n as i64);
    let half_x = RatPoly::monomial(rat(1, 2), 1);
    let direct = umbral_eval(&chebyshev_t(m as usize).compose(&half_x)) * &scale;
    let inner = RatPoly::new(vec![int(-1), int(0), rat(1, 2)]);
    let doubled = umbral_eval(&chebyshev_t(n as usize).compose(&inner)) * &scale;
    if direct != doubled {
        return Err(Error::Disagreement {
            n: m,
            detail: format!("T_2n(B/2) gives {direct}, T_n((B^2-2)/2) gives {doubled}"),
        });
    }
    Ok(direct)
}
