//! Congruences satisfied by Bernoulli numbers.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::bernoulli_number;
use crate::error::{precondition, Error, Result};
use crate::exactnum::{is_integer, primes_up_to, reduce_mod_2k, Integer, Rational};
use crate::report::{ReportBuilder, VerifyReport};

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut b = base as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

fn even_index(n: u64) -> Result<()> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddIndex(n));
    }
    Ok(())
}

/// Primes p with (p - 1) | n.
fn clausen_primes(n: u64) -> Vec<u64> {
    primes_up_to(n + 1)
        .into_iter()
        .filter(|p| n % (p - 1) == 0)
        .collect()
}

/// Product of the primes p with (p - 1) | n, which is the denominator of B_n
/// for even n ≥ 2.
pub fn vsc_denominator(n: u64) -> Result<Integer> {
    even_index(n)?;
    Ok(clausen_primes(n)
        .into_iter()
        .fold(Integer::one(), |acc, p| acc * p))
}

/// Whether B_n + Σ_{(p-1)|n} 1/p is an integer.
pub fn vsc_congruence_check(n: u64) -> Result<bool> {
    even_index(n)?;
    let s = clausen_primes(n)
        .into_iter()
        .fold(bernoulli_number(n as usize), |acc, p| {
            acc + Rational::new(Integer::one(), Integer::from(p))
        });
    Ok(is_integer(&s))
}

/// Voronoi's congruence for B_m = U/V:
/// (a^m - 1)·U ≡ m·a^(m-1)·V·Σ_{j=1}^{n-1} j^(m-1)·floor(ja/n)  (mod n).
pub fn voronoi_check(m: u64, a: u64, n: u64) -> Result<bool> {
    even_index(m)?;
    if a == 0 || n == 0 {
        return Err(precondition("voronoi_check", "a and n must be positive"));
    }
    let g = a.gcd(&n);
    if g != 1 {
        return Err(Error::NotCoprime { a, n, g });
    }
    let b = bernoulli_number(m as usize);
    let modulus = Integer::from(n);
    let lhs = (Integer::from(a).pow(m as u32) - 1u32) * b.numer();
    let mut sum = 0u64;
    for j in 1..n {
        let f = (j as u128 * a as u128 / n as u128) as u64 % n;
        sum = ((sum as u128 + pow_mod(j, m - 1, n) as u128 * f as u128) % n as u128) as u64;
    }
    let rhs = Integer::from(m) * Integer::from(a).pow((m - 1) as u32) * b.denom() * sum;
    Ok((lhs - rhs).mod_floor(&modulus).is_zero())
}

/// Closed-form residue of 2B_{2k} mod 8: 3 for k = 1, then 1 for even k and
/// 5 for odd k.
pub fn bernoulli_mod8(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(precondition("bernoulli_mod8", "k must be at least 1"));
    }
    Ok(match k {
        1 => 3,
        k if k % 2 == 0 => 1,
        _ => 5,
    })
}

/// Exact reduction of 2B_{2k} mod 8.
pub fn bernoulli_mod8_exact(k: u64) -> Result<u64> {
    let b = bernoulli_number(2 * k as usize) * Integer::from(2);
    reduce_mod_2k(&b, 3)
}

/// Modular facts used when specializing Voronoi's congruence to a = 3,
/// n = 64, swept over even m ≤ `m_max`:
///
/// * `3^m - 1 ≡ 4m (mod 64)` for every even m;
/// * `3^(m-1)·Σ_{j=1}^{63} j^(m-1)·floor(3j/64) ≡ 42 (mod 64)` for m ≡ 2 mod 4,
///   m ≥ 6, as stated;
/// * the same sum `≡ 10 (mod 16)`, which is what the downstream mod-8
///   argument uses.
///
/// The stated mod-64 value fails whenever m ≡ 6 (mod 8), where the sum is 10.
pub fn proof_scan_mod64(m_max: u64) -> Result<VerifyReport> {
    if m_max < 6 {
        return Err(precondition(
            "proof_scan_mod64",
            format!("m_max = {m_max} is below 6"),
        ));
    }
    let mut report = ReportBuilder::new("proof_scan_mod64", 2, m_max as i64);
    for m in (2..=m_max).step_by(2) {
        let lhs = (pow_mod(3, m, 64) + 63) % 64;
        let rhs = (4 * m) % 64;
        report.record("3^m - 1 = 4m mod 64", lhs == rhs, || {
            format!("m={m}: {lhs} vs {rhs}")
        });
        if m % 4 == 2 && m >= 6 {
            let s = voronoi_sum_mod64(m);
            report.record("sum = 42 mod 64", s == 42, || format!("m={m}: sum={s}"));
            report.record("sum = 10 mod 16", s % 16 == 10, || {
                format!("m={m}: sum={s}")
            });
        }
    }
    Ok(report.finish())
}

/// `3^(m-1)·Σ_{j=1}^{63} j^(m-1)·floor(3j/64) mod 64`.
pub fn voronoi_sum_mod64(m: u64) -> u64 {
    let sum: u64 = (1..64u64)
        .map(|j| pow_mod(j, m - 1, 64) * (3 * j / 64))
        .sum::<u64>()
        % 64;
    sum * pow_mod(3, m - 1, 64) % 64
}

/// von Staudt-Clausen for even n ≤ `n_max` (denominator and integrality),
/// and Voronoi's congruence on even m ≤ `m_max`, 1 ≤ a ≤ 11, 2 ≤ n < 40,
/// gcd(a, n) = 1.
pub fn classical_congruence_sweep(n_max: u64, m_max: u64) -> Result<VerifyReport> {
    if n_max < 2 || m_max < 2 {
        return Err(precondition(
            "classical_congruence_sweep",
            "bounds must be at least 2",
        ));
    }
    let mut report = ReportBuilder::new("classical_congruences", 2, n_max.max(m_max) as i64);
    for n in (2..=n_max).step_by(2) {
        let d = vsc_denominator(n)?;
        let got = bernoulli_number(n as usize).denom().clone();
        report.record(
            "denominator of B_n = product of p with (p-1) | n",
            got == d,
            || format!("n={n}: {got} vs {d}"),
        );
        let ok = vsc_congruence_check(n)?;
        report.record("B_n + sum 1/p integral", ok, || format!("n={n}"));
    }
    for m in (2..=m_max).step_by(2) {
        for a in 1..=11u64 {
            for n in 2..40u64 {
                if a.gcd(&n) != 1 {
                    continue;
                }
                let ok = voronoi_check(m, a, n)?;
                report.record("Voronoi congruence", ok, || format!("m={m} a={a} n={n}"));
            }
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::denom;

    #[test]
    fn vsc_examples() {
        assert_eq!(vsc_denominator(2).unwrap(), Integer::from(6));
        assert_eq!(vsc_denominator(4).unwrap(), Integer::from(30));
        assert_eq!(vsc_denominator(12).unwrap(), Integer::from(2730));
        assert!(vsc_denominator(7).is_err());
        for n in [2, 12, 40] {
            assert!(vsc_congruence_check(n).unwrap());
        }
    }

    #[test]
    fn vsc_matches_denominators() {
        for n in (2..=200).step_by(2) {
            assert_eq!(
                vsc_denominator(n).unwrap(),
                denom(&bernoulli_number(n as usize)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn voronoi_examples() {
        assert!(voronoi_check(6, 3, 64).unwrap());
        assert!(voronoi_check(2, 3, 5).unwrap());
        assert!(voronoi_check(10, 7, 9).unwrap());
        assert!(matches!(
            voronoi_check(4, 6, 9),
            Err(Error::NotCoprime { g: 3, .. })
        ));
    }

    #[test]
    fn voronoi_grid() {
        for m in (2..=30).step_by(2) {
            for n in 2..=40u64 {
                for a in 1..n.min(12) {
                    if a.gcd(&n) == 1 {
                        assert!(voronoi_check(m, a, n).unwrap(), "m={m} a={a} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn mod8_closed_form_agrees() {
        assert_eq!(bernoulli_mod8(1).unwrap(), 3);
        assert_eq!(bernoulli_mod8(2).unwrap(), 1);
        assert_eq!(bernoulli_mod8(3).unwrap(), 5);
        for k in 1..=150 {
            assert_eq!(
                bernoulli_mod8(k).unwrap(),
                bernoulli_mod8_exact(k).unwrap(),
                "k = {k}"
            );
        }
    }

    #[test]
    fn scan_mod64() {
        assert!(proof_scan_mod64(4).is_err());
        let r = proof_scan_mod64(50).unwrap();
        assert_eq!(r.check("3^m - 1 = 4m mod 64").unwrap().cases, 25);
        assert!(r.check("sum = 10 mod 16").unwrap().witness.is_none());
        // m = 6 gives 10, not 42
        assert_eq!(voronoi_sum_mod64(6), 10);
        assert_eq!(voronoi_sum_mod64(10), 42);
    }
}
