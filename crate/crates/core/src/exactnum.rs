//! Exact integer and rational primitives: binomials, factorials, p-adic
//! valuations, reduction of 2-integral rationals modulo powers of two, and
//! small-prime machinery for denominators.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Add;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Integer = BigInt;
/// Always in lowest terms with a positive denominator; zero is `0/1`.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// C(n, k) with C(n, k) = 0 outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial for a possibly negative upper index:
/// C(n, k) = n(n-1)...(n-k+1)/k! for k ≥ 0, and 0 for k < 0.
pub fn binomial_signed(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n >= 0 {
        return binomial(n as u64, k);
    }
    // C(n, k) = (-1)^k C(k - n - 1, k)
    let c = binomial((k - n - 1) as u64, k);
    if k % 2 == 0 {
        c
    } else {
        -c
    }
}

pub fn factorial(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// Per-worker memo of Pascal rows, for sweeps that ask for the same rows
/// over and over.
#[derive(Debug, Default)]
pub struct BinomialTable {
    rows: HashMap<u64, Vec<Integer>>,
}

impl BinomialTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(&mut self, n: u64) -> &[Integer] {
        self.rows.entry(n).or_insert_with(|| {
            let mut row = Vec::with_capacity(n as usize + 1);
            let mut c = Integer::one();
            row.push(c.clone());
            for k in 0..n {
                c = c * (n - k) / (k + 1);
                row.push(c.clone());
            }
            row
        })
    }

    pub fn get(&mut self, n: u64, k: i64) -> Integer {
        if k < 0 || k as u64 > n {
            return Integer::zero();
        }
        self.row(n)[k as usize].clone()
    }
}

/// p-adic valuation; `Infinite` is the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, _) => Ordering::Greater,
            (_, Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Exponent of `p` in a nonzero integer.
pub fn nu_p_int(n: &Integer, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let mut n = n.abs();
    let p = Integer::from(p);
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

pub fn nu_p(q: &Rational, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let up = nu_p_int(q.numer(), p).unwrap_or(0) as i64;
    let down = nu_p_int(q.denom(), p).unwrap_or(0) as i64;
    Ok(Valuation::Finite(up - down))
}

/// 2-adic valuation; the prime is fixed so this cannot fail.
pub fn nu2(q: &Rational) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let up = q.numer().trailing_zeros().unwrap_or(0) as i64;
    let down = q.denom().trailing_zeros().unwrap_or(0) as i64;
    Valuation::Finite(up - down)
}

/// `numerator · denominator⁻¹ mod 2^k` for a rational with odd denominator.
pub fn reduce_mod_2k(q: &Rational, k: u32) -> Result<u64> {
    if k == 0 || k > 63 {
        return Err(Error::ModulusOutOfRange(k));
    }
    if q.denom().is_even() {
        return Err(Error::NotTwoIntegral(q.to_string()));
    }
    let modulus = Integer::from(1u64 << k);
    let num = q.numer().mod_floor(&modulus).to_u64().unwrap();
    let den = q.denom().mod_floor(&modulus).to_u64().unwrap();
    let m = 1u64 << k;
    Ok(mul_mod(num, inverse_odd_mod_2k(den, k), m))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of an odd residue modulo 2^k by Newton iteration.
pub fn inverse_odd_mod_2k(a: u64, k: u32) -> u64 {
    debug_assert!(a % 2 == 1);
    let mut x: u64 = 1;
    // each step doubles the number of correct low bits
    for _ in 0..7 {
        x = x.wrapping_mul(2u64.wrapping_sub(a.wrapping_mul(x)));
    }
    if k == 64 {
        x
    } else {
        x & ((1u64 << k) - 1)
    }
}

pub fn denom(q: &Rational) -> Integer {
    q.denom().clone()
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `p ≤ bound`, by sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Trial division by primes up to `bound`. Returns the prime powers found
/// and the unfactored cofactor (1 when `n` is `bound`-smooth).
pub fn factor_small(n: &Integer, bound: u64) -> (Vec<(u64, u32)>, Integer) {
    let mut rest = n.abs();
    let mut found = Vec::new();
    for p in primes_up_to(bound) {
        if rest.is_one() {
            break;
        }
        let bp = Integer::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            found.push((p, e));
        }
    }
    (found, rest)
}

pub fn floor(q: &Rational) -> Integer {
    q.floor().to_integer()
}

pub fn is_positive(q: &Rational) -> bool {
    q.numer().sign() == Sign::Plus
}

/// Serde adapter writing a [`Rational`] as its exact `p/q` string.
pub mod rational_string {
    use super::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(q)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|_| D::Error::custom(format!("not a rational: {text}")))
    }
}
