use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::classical::RatPoly;
use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};

/// Power series in z known through z^order. Binary operations on series of
/// different orders truncate to the smaller one.
#[derive(Debug, Clone)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
    order: usize,
}

impl PartialEq for TruncSeries {
    /// Coefficient-wise through the common order.
    fn eq(&self, other: &Self) -> bool {
        let n = self.order.min(other.order);
        self.coeffs[..=n] == other.coeffs[..=n]
    }
}

impl TruncSeries {
    /// Pads with zeros or drops terms so that exactly z^0..z^order are kept.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn monomial(c: Rational, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    pub fn from_poly(p: &RatPoly, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of z^i. Panics past the known order.
    pub fn coeff(&self, i: usize) -> &Rational {
        assert!(i <= self.order, "z^{i} is beyond order {}", self.order);
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Multiplies by z^k, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.order)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        if self.order == 0 {
            return Self::zero(0);
        }
        Self::new(
            (1..=self.order)
                .map(|i| &self.coeffs[i] * int(i as i64))
                .collect(),
            self.order - 1,
        )
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[n - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncSeries {
            coeffs: out,
            order: self.order,
        })
    }

    pub fn div(&self, divisor: &Self) -> Result<Self> {
        Ok(self * &divisor.inverse()?)
    }

    /// log(1 + u) = Σ_{m≥1} (-1)^(m+1) u^m / m; needs u(0) = 0.
    pub fn log1p(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant(self.coeffs[0].to_string()));
        }
        let mut acc = Self::zero(self.order);
        let mut power = self.clone();
        for m in 1..=self.order {
            let term = power.scale(&Rational::new(
                if m % 2 == 1 { 1 } else { -1 }.into(),
                (m as i64).into(),
            ));
            acc = &acc + &term;
            power = &power * self;
        }
        Ok(acc)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order.min(rhs.order);
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
            order: n,
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order.min(rhs.order);
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
            order: n,
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order.min(rhs.order);
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncSeries {
            coeffs: out,
            order: n,
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn series(c: &[i64], order: usize) -> TruncSeries {
        TruncSeries::new(c.iter().map(|&x| int(x)).collect(), order)
    }

    #[test]
    fn log1p_examples() {
        let l = series(&[0, 0, 1], 6).log1p().unwrap();
        assert_eq!(
            l,
            TruncSeries::new(
                vec![
                    int(0),
                    int(0),
                    int(1),
                    int(0),
                    rat(-1, 2),
                    int(0),
                    rat(1, 3)
                ],
                6
            )
        );
        let l = series(&[0, -3, 1], 4).log1p().unwrap();
        assert_eq!(l.coeff(1), &int(-3));
        assert!(series(&[1, 1], 3).log1p().is_err());
    }

    #[test]
    fn geometric_division() {
        let q = series(&[1], 3).div(&series(&[1, -1], 3)).unwrap();
        assert_eq!(q, series(&[1, 1, 1, 1], 3));
        assert!(series(&[1], 3).div(&series(&[0, 1], 3)).is_err());
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = series(&[1, 2, 3, 4], 3);
        let b = series(&[1, 1], 1);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn derivative_of_log_is_reciprocal() {
        // d/dz log(1+z) = 1/(1+z)
        let l = series(&[0, 1], 8).log1p().unwrap().derivative();
        let r = series(&[1], 7).div(&series(&[1, 1], 7)).unwrap();
        assert_eq!(l, r);
    }

    proptest! {
        #[test]
        fn inverse_round_trips(c in proptest::collection::vec(-20i64..20, 1..8), c0 in 1i64..9) {
            let mut v = vec![c0];
            v.extend(c);
            let s = series(&v, 7);
            let p = &s * &s.inverse().unwrap();
            prop_assert_eq!(p, TruncSeries::one(7));
        }

        #[test]
        fn log_of_product_is_sum(a in proptest::collection::vec(-5i64..5, 1..6),
                                 b in proptest::collection::vec(-5i64..5, 1..6)) {
            let mut ua = vec![0];
            ua.extend(a);
            let mut ub = vec![0];
            ub.extend(b);
            let (ua, ub) = (series(&ua, 6), series(&ub, 6));
            let one = TruncSeries::one(6);
            let prod = &(&(&one + &ua) * &(&one + &ub)) - &one;
            let lhs = prod.log1p().unwrap();
            let rhs = &ua.log1p().unwrap() + &ub.log1p().unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
