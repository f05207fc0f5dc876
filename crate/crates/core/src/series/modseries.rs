use crate::classical::RatPoly;
use crate::error::{precondition, Error, Result};
use crate::exactnum::{inverse_odd_mod_2k, reduce_mod_2k};

use super::TruncSeries;

/// Power series with coefficients in Z/2^k, known through z^(len - 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModSeries {
    k: u32,
    coeffs: Vec<u64>,
}

impl ModSeries {
    pub fn new(k: u32, coeffs: Vec<u64>) -> Result<Self> {
        if k == 0 || k > 63 {
            return Err(Error::ModulusOutOfRange(k));
        }
        let m = 1u64 << k;
        Ok(ModSeries {
            k,
            coeffs: coeffs.into_iter().map(|c| c % m).collect(),
        })
    }

    /// Reduces a 2-integral rational series coefficient by coefficient.
    pub fn reduce(s: &TruncSeries, k: u32) -> Result<Self> {
        let coeffs = s
            .coeffs()
            .iter()
            .map(|c| reduce_mod_2k(c, k))
            .collect::<Result<_>>()?;
        Ok(ModSeries { k, coeffs })
    }

    pub fn modulus(&self) -> u64 {
        1u64 << self.k
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.k, other.k, "mismatched moduli");
        let n = self.coeffs.len().min(other.coeffs.len());
        ModSeries {
            k: self.k,
            coeffs: (0..n).map(|i| f(self.coeffs[i], other.coeffs[i])).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.modulus();
        self.zip(other, |a, b| ((a as u128 + b as u128) % m as u128) as u64)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.modulus();
        self.zip(other, |a, b| {
            ((a as u128 + m as u128 - b as u128) % m as u128) as u64
        })
    }

    pub fn scale(&self, c: i64) -> Self {
        let m = self.modulus() as i128;
        let c = (c as i128).rem_euclid(m) as u128;
        ModSeries {
            k: self.k,
            coeffs: self
                .coeffs
                .iter()
                .map(|&a| ((a as u128 * c) % m as u128) as u64)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "mismatched moduli");
        let m = self.modulus() as u128;
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![0u128; n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] = (out[i + j] + self.coeffs[i] as u128 * other.coeffs[j] as u128) % m;
            }
        }
        ModSeries {
            k: self.k,
            coeffs: out.into_iter().map(|c| c as u64).collect(),
        }
    }
}

/// Power-series expansion of `numer/denom` through z^n over the rationals.
pub fn ratfunc_expand(numer: &RatPoly, denom: &RatPoly, n: usize) -> Result<TruncSeries> {
    let d = TruncSeries::from_poly(denom, n);
    TruncSeries::from_poly(numer, n).div(&d)
}

/// Expansion of `numer/denom` through z^n with coefficients in Z/2^k. Both
/// polynomials must be 2-integral and `denom(0)` must be odd.
pub fn ratfunc_expand_mod2k(
    numer: &RatPoly,
    denom: &RatPoly,
    k: u32,
    n: usize,
) -> Result<ModSeries> {
    let num = ModSeries::reduce(&TruncSeries::from_poly(numer, n), k)?;
    let den = ModSeries::reduce(&TruncSeries::from_poly(denom, n), k)?;
    let d0 = den.coeffs[0];
    if d0 % 2 == 0 {
        return Err(precondition(
            "ratfunc_expand_mod2k",
            format!("constant term of the denominator is {d0}, not odd"),
        ));
    }
    let m = den.modulus() as u128;
    let inv = inverse_odd_mod_2k(d0, k) as u128;
    let mut out: Vec<u64> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = num.coeffs[i] as u128;
        for j in 1..=i {
            let t = den.coeffs[j] as u128 * out[i - j] as u128 % m;
            acc = (acc + m - t) % m;
        }
        out.push((acc * inv % m) as u64);
    }
    Ok(ModSeries { k, coeffs: out })
}
