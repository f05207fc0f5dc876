use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::TruncSeries;
use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// Laurent series Σ_{e = min_exp}^{order} c_e z^e. Coefficients below
/// `min_exp` are exactly zero; those above `order` are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl LaurentSeries {
    /// `coeffs[i]` is the coefficient of z^(min_exp + i); missing entries up to
    /// `order` are zero and extra ones are dropped.
    pub fn new(min_exp: i64, mut coeffs: Vec<Rational>, order: i64) -> Self {
        let len = (order - min_exp + 1).max(0) as usize;
        coeffs.resize(len, Rational::zero());
        LaurentSeries {
            min_exp,
            coeffs,
            order,
        }
    }

    pub fn zero(order: i64) -> Self {
        Self::new(order + 1, Vec::new(), order)
    }

    pub fn monomial(c: Rational, exp: i64, order: i64) -> Self {
        if exp > order {
            return Self::zero(order);
        }
        Self::new(exp, vec![c], order)
    }

    pub fn from_trunc(s: &TruncSeries) -> Self {
        Self::new(0, s.coeffs().to_vec(), s.order() as i64)
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of z^e. Panics past the known order.
    pub fn coeff(&self, e: i64) -> Rational {
        assert!(e <= self.order, "z^{e} is beyond order {}", self.order);
        if e < self.min_exp {
            return Rational::zero();
        }
        self.coeffs[(e - self.min_exp) as usize].clone()
    }

    /// Multiplies by z^k; the order moves with it.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        let keep = (order - self.min_exp + 1).max(0) as usize;
        Self::new(
            self.min_exp,
            self.coeffs[..keep.min(self.coeffs.len())].to_vec(),
            order,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Checks that every coefficient of a negative power of z vanishes.
    pub fn assert_no_negative_part(&self) -> Result<()> {
        for e in self.min_exp..0.min(self.order + 1) {
            let c = self.coeff(e);
            if !c.is_zero() {
                return Err(Error::NegativePowerResidue {
                    exponent: e,
                    value: c.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Coefficient of z^0, available once the order reaches 0.
    pub fn constant_term(&self) -> Result<Rational> {
        if self.order < 0 {
            return Err(Error::TruncatedTooEarly(self.order));
        }
        Ok(self.coeff(0))
    }

    /// The nonnegative part as a power series, after checking that the
    /// negative part vanishes.
    pub fn into_trunc(&self) -> Result<TruncSeries> {
        self.assert_no_negative_part()?;
        if self.order < 0 {
            return Err(Error::TruncatedTooEarly(self.order));
        }
        Ok(TruncSeries::new(
            (0..=self.order).map(|e| self.coeff(e)).collect(),
            self.order as usize,
        ))
    }
}

fn combine(
    a: &LaurentSeries,
    b: &LaurentSeries,
    f: impl Fn(Rational, Rational) -> Rational,
) -> LaurentSeries {
    let order = a.order.min(b.order);
    let lo = a.min_exp.min(b.min_exp);
    let coeffs = (lo..=order)
        .map(|e| f(coeff_or_zero(a, e), coeff_or_zero(b, e)))
        .collect();
    LaurentSeries::new(lo, coeffs, order)
}

fn coeff_or_zero(s: &LaurentSeries, e: i64) -> Rational {
    if e < s.min_exp || e > s.order {
        Rational::zero()
    } else {
        s.coeffs[(e - s.min_exp) as usize].clone()
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;

    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        combine(self, rhs, |x, y| x + y)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;

    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        combine(self, rhs, |x, y| x - y)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;

    /// The product is known through
    /// `min(a.min_exp + b.order, b.min_exp + a.order)`.
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = (self.min_exp + rhs.order).min(rhs.min_exp + self.order);
        let lo = self.min_exp + rhs.min_exp;
        let len = (order - lo + 1).max(0) as usize;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= len {
                    break;
                }
                if !b.is_zero() {
                    out[k] += a * b;
                }
            }
        }
        LaurentSeries::new(lo, out, order)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;

    fn neg(self) -> LaurentSeries {
        self.scale(&-Rational::from_integer(1.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use proptest::prelude::*;

    #[test]
    fn product_order_rule() {
        // (z^-1 + 1 + z) known through z^1, times (z^-2) known through z^3
        let a = LaurentSeries::new(-1, vec![int(1), int(1), int(1)], 1);
        let b = LaurentSeries::new(-2, vec![int(1)], 3);
        let p = &a * &b;
        assert_eq!(p.order(), -1);
        assert_eq!(p.min_exp(), -3);
        assert_eq!(p.coeff(-3), int(1));
        assert_eq!(p.coeff(-1), int(1));
        assert!(matches!(
            p.constant_term(),
            Err(Error::TruncatedTooEarly(-1))
        ));
    }

    #[test]
    fn negative_part_assertion() {
        let a = LaurentSeries::new(-2, vec![int(0), int(3), int(5)], 4);
        assert!(matches!(
            a.assert_no_negative_part(),
            Err(Error::NegativePowerResidue { exponent: -1, .. })
        ));
        let b = LaurentSeries::new(-2, vec![int(0), int(0), int(5)], 4);
        assert_eq!(b.into_trunc().unwrap().coeff(0), &int(5));
        assert_eq!(LaurentSeries::zero(3).coeff(-7), int(0));
    }

    proptest! {
        #[test]
        fn constant_term_is_linear(a in proptest::collection::vec(-9i64..9, 1..6),
                                   b in proptest::collection::vec(-9i64..9, 1..6),
                                   lo in -3i64..1, c in -5i64..5) {
            let sa = LaurentSeries::new(lo, a.iter().map(|&x| int(x)).collect(), 4);
            let sb = LaurentSeries::new(lo - 1, b.iter().map(|&x| int(x)).collect(), 3);
            let lhs = (&sa.scale(&int(c)) + &sb).constant_term().unwrap();
            let rhs = sa.constant_term().unwrap() * int(c) + sb.constant_term().unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn agrees_with_power_series(a in proptest::collection::vec(-9i64..9, 1..6),
                                    b in proptest::collection::vec(-9i64..9, 1..6)) {
            let ta = TruncSeries::new(a.iter().map(|&x| int(x)).collect(), 5);
            let tb = TruncSeries::new(b.iter().map(|&x| int(x)).collect(), 5);
            let prod = &LaurentSeries::from_trunc(&ta) * &LaurentSeries::from_trunc(&tb);
            prop_assert_eq!(prod.constant_term().unwrap(), ta.coeff(0) * tb.coeff(0));
            prop_assert_eq!(prod.into_trunc().unwrap(), &ta * &tb);
        }
    }
}
