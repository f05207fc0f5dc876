use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::RatPoly;
use crate::exactnum::{binomial, primes_up_to, rat, Integer, Rational};

fn table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one(), rat(-1, 2)]))
}

/// B_n, with B_1 = -1/2.
///
/// Values come from a process-wide table grown on demand by the recurrence
/// `Σ_{k=0}^{n} C(n+1,k) B_k = 0`. Readers share the lock; growth is
/// serialized.
pub fn bernoulli_number(n: usize) -> Rational {
    {
        let t = table().read().unwrap();
        if let Some(b) = t.get(n) {
            return b.clone();
        }
    }
    let mut t = table().write().unwrap();
    extend(&mut t, n);
    t[n].clone()
}

/// B_0, ..., B_n.
pub fn bernoulli_prefix(n: usize) -> Vec<Rational> {
    {
        let t = table().read().unwrap();
        if t.len() > n {
            return t[..=n].to_vec();
        }
    }
    let mut t = table().write().unwrap();
    extend(&mut t, n);
    t[..=n].to_vec()
}

fn extend(t: &mut Vec<Rational>, n: usize) {
    while t.len() <= n {
        let m = t.len();
        if m % 2 == 1 {
            t.push(Rational::zero());
            continue;
        }
        // Every B_k with k < m has a squarefree denominator made of primes
        // ≤ k + 1, so scaling by the product of primes ≤ m keeps the sum in
        // the integers.
        let scale: Integer = primes_up_to(m as u64)
            .into_iter()
            .fold(Integer::one(), |acc, p| acc * p);
        let mut c = Integer::one(); // C(m+1, k)
        let mut sum = Integer::zero();
        for (k, b) in t.iter().enumerate() {
            if !b.is_zero() {
                sum += &c * (b.numer() * (&scale / b.denom()));
            }
            c = c * (m + 1 - k) / (k + 1);
        }
        let den = BigInt::from(m + 1) * scale;
        t.push(Rational::new(-sum, den));
    }
}

/// B_n(x) = Σ_k C(n,k) B_{n-k} x^k.
pub fn bernoulli_poly(n: usize) -> RatPoly {
    let b = bernoulli_prefix(n);
    RatPoly::new(
        (0..=n)
            .map(|k| Rational::from_integer(binomial(n as u64, k as i64)) * &b[n - k])
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    /// Independent route: the Akiyama–Tanigawa triangle, which gives B_1 = +1/2.
    fn akiyama_tanigawa(n: usize) -> Rational {
        let mut a: Vec<Rational> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            a.push(rat(1, m as i64 + 1));
            for j in (1..=m).rev() {
                a[j - 1] = Rational::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
            }
        }
        if n == 1 {
            -a[0].clone()
        } else {
            a[0].clone()
        }
    }

    #[test]
    fn examples() {
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(7), int(0));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn agrees_with_akiyama_tanigawa() {
        for n in 0..60 {
            assert_eq!(bernoulli_number(n), akiyama_tanigawa(n), "n = {n}");
        }
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(bernoulli_poly(0), RatPoly::one());
        assert_eq!(bernoulli_poly(1), RatPoly::linear(rat(-1, 2), int(1)));
        assert_eq!(bernoulli_poly(4).eval(&int(1)), bernoulli_number(4));
    }

    #[test]
    fn polynomial_endpoints() {
        for n in 0..40 {
            let p = bernoulli_poly(n);
            let b = bernoulli_number(n);
            assert_eq!(p.eval(&int(0)), b);
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(p.eval(&int(1)), sign * &b, "n = {n}");
            assert_eq!(p.leading(), Some(&int(1)));
        }
    }
}
