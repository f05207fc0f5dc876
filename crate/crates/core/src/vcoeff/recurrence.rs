//! The binomial recurrence for z_n = 4n·v_{2n}, its parity pattern, the
//! inverse pair behind it, and the sum F(m) that drives the mod-2 argument.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::bell::random_rational;
use super::methods::v_parity;
use crate::classical::bernoulli_number;
use crate::error::{precondition, Result};
use crate::exactnum::{binomial, denom, int, rat, reduce_mod_2k, Integer, Rational};
use crate::report::{ReportBuilder, VerifyReport};
use crate::series::detect_period;

fn central(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(2 * n, (n + k) as i64))
}

/// z_1, ..., z_{n_max} from
/// z_n = 2C(2n, n) - Σ_{k=1}^{n-1} C(2n, n+k)·z_k - 2B_{2n}.
pub fn z_recurrence(n_max: u64) -> Vec<Rational> {
    let mut z: Vec<Rational> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let mut v = central(n, 0) * int(2) - bernoulli_number(2 * n as usize) * int(2);
        for k in 1..n {
            v -= central(n, k) * &z[k as usize - 1];
        }
        z.push(v);
    }
    z
}

/// z_n from the recurrence against 4n·v_{2n}, and
/// B_{2n} = C(2n, n) - Σ_{k=1}^{n} C(2n, n+k)·2k·v_{2k}, for n ≤ `n_max`.
pub fn z_recurrence_check(n_max: u64) -> Result<VerifyReport> {
    if n_max == 0 {
        return Err(precondition(
            "z_recurrence_check",
            "n_max must be at least 1",
        ));
    }
    let mut report = ReportBuilder::new("z_recurrence", 1, n_max as i64);
    let z = z_recurrence(n_max);
    let v: Vec<Rational> = (1..=n_max)
        .map(|n| v_parity(2 * n))
        .collect::<Result<_>>()?;
    for n in 1..=n_max {
        let want = &v[n as usize - 1] * int(4 * n as i64);
        let got = &z[n as usize - 1];
        report.record("z_n = 4n v_2n", *got == want, || {
            format!("n={n}: {got} vs {want}")
        });
        let mut b = central(n, 0);
        for k in 1..=n {
            b -= central(n, k) * int(2 * k as i64) * &v[k as usize - 1];
        }
        let b2n = bernoulli_number(2 * n as usize);
        report.record("B_2n from v_2k", b == b2n, || {
            format!("n={n}: {b} vs {b2n}")
        });
    }
    Ok(report.finish())
}

/// Every z_n has odd denominator, and z_n mod 2 runs 1, 1, 0 with period 3,
/// for n ≤ `n_max`.
pub fn z_mod2_period_check(n_max: u64) -> Result<VerifyReport> {
    if n_max < 6 {
        return Err(precondition(
            "z_mod2_period_check",
            format!("n_max = {n_max} is below 6"),
        ));
    }
    let mut report = ReportBuilder::new("z_mod2", 1, n_max as i64);
    let z = z_recurrence(n_max);
    let mut residues = Vec::with_capacity(z.len());
    for (i, zn) in z.iter().enumerate() {
        let n = i as u64 + 1;
        let d = denom(zn);
        let odd = d.bit(0);
        report.record("z_n has odd denominator", odd, || {
            format!("n={n}: denominator {d}")
        });
        if !odd {
            continue;
        }
        let r = reduce_mod_2k(zn, 1)?;
        let want = if n % 3 == 0 { 0 } else { 1 };
        report.record("z_n mod 2 = 1, 1, 0", r == want, || {
            format!("n={n}: {r} vs {want}")
        });
        residues.push(r);
    }
    let p = detect_period(&residues, 2);
    report.record("z_n mod 2 period 3", p == Some(3), || {
        format!("detected {p:?}")
    });
    Ok(report.finish())
}

/// a_n = 2n·Σ_{k=1}^{n} C(n+k-1, n-k)·b_k/(2k).
pub fn legendre_forward(b: &[Rational]) -> Vec<Rational> {
    (1..=b.len() as u64)
        .map(|n| {
            let s: Rational = (1..=n)
                .map(|k| {
                    Rational::from_integer(binomial(n + k - 1, (n - k) as i64))
                        * &b[k as usize - 1]
                        * rat(1, 2 * k as i64)
                })
                .sum();
            s * int(2 * n as i64)
        })
        .collect()
}

/// b_n = Σ_{k=1}^{n} (-1)^{n-k} C(2n, n+k)·a_k.
pub fn legendre_backward(a: &[Rational]) -> Vec<Rational> {
    (1..=a.len() as u64)
        .map(|n| {
            (1..=n)
                .map(|k| {
                    let t = central(n, k) * &a[k as usize - 1];
                    if (n - k) % 2 == 1 {
                        -t
                    } else {
                        t
                    }
                })
                .sum()
        })
        .collect()
}

/// The inverse pair round-trips on every basis vector of length `n_max`, on
/// `sequences` random rational sequences from `seed`, and on the Bernoulli
/// pair b_n = (-1)^n B_{2n}, a_n = 2n·((-1)^{n+1} v_{2n} - 1/n).
pub fn legendre_inversion_check(n_max: u64, sequences: usize, seed: u64) -> Result<VerifyReport> {
    if n_max == 0 {
        return Err(precondition(
            "legendre_inversion_check",
            "n_max must be at least 1",
        ));
    }
    let mut report = ReportBuilder::new("legendre_inversion", 1, n_max as i64);
    let len = n_max as usize;
    for i in 0..len {
        let mut b = vec![Rational::zero(); len];
        b[i] = Rational::one();
        let back = legendre_backward(&legendre_forward(&b));
        report.record("basis vector round trip", back == b, || {
            format!("e_{}", i + 1)
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..sequences {
        let b: Vec<Rational> = (0..len).map(|_| random_rational(&mut rng)).collect();
        let back = legendre_backward(&legendre_forward(&b));
        report.record("random round trip", back == b, || {
            format!("sequence {s} seed {seed}")
        });
    }
    let b: Vec<Rational> = (1..=n_max)
        .map(|n| {
            let x = bernoulli_number(2 * n as usize);
            if n % 2 == 1 {
                -x
            } else {
                x
            }
        })
        .collect();
    let a: Vec<Rational> = (1..=n_max)
        .map(|n| {
            let v = v_parity(2 * n)?;
            let signed = if n % 2 == 1 { v } else { -v };
            Ok((signed - rat(1, n as i64)) * int(2 * n as i64))
        })
        .collect::<Result<_>>()?;
    let fwd = legendre_forward(&b);
    report.record("Bernoulli pair forward", fwd == a, || {
        "a_n from (-1)^n B_2n".into()
    });
    let back = legendre_backward(&a);
    report.record("Bernoulli pair recovers (-1)^n B_2n", back == b, || {
        "b_n from v_2n".into()
    });
    Ok(report.finish())
}

/// F(m) = Σ_k C(6m+1, 3m+3k-1) over every integer k.
pub fn f_sum(m: u64) -> Integer {
    let top = 6 * m + 1;
    // 3m + 3k - 1 ≡ 2 mod 3
    (0..=top)
        .filter(|b| b % 3 == 2)
        .map(|b| binomial(top, b as i64))
        .sum()
}

/// Σ_{k=1}^{m} C(6m+1, 3m+3k-1).
pub fn f_half_sum(m: u64) -> Integer {
    (1..=m)
        .map(|k| binomial(6 * m + 1, (3 * m + 3 * k - 1) as i64))
        .sum()
}

/// F(m) = (2/3)(64^m - 1), -64F(m) + 65F(m+1) - F(m+2) = 0, and
/// 3·Σ_{k=1}^{m} C(6m+1, 3m+3k-1) = 64^m - 1, for m ≤ `m_max`.
pub fn f_sum_check(m_max: u64) -> Result<VerifyReport> {
    if m_max < 2 {
        return Err(precondition(
            "f_sum_check",
            format!("m_max = {m_max} is below 2"),
        ));
    }
    let mut report = ReportBuilder::new("f_sum", 1, m_max as i64);
    let f: Vec<Integer> = (1..=m_max).map(f_sum).collect();
    for m in 1..=m_max {
        let p = Integer::from(64u32).pow(m as u32) - Integer::one();
        let fm = &f[m as usize - 1];
        report.record("F(m) = (2/3)(64^m - 1)", fm * 3 == &p * 2, || {
            format!("m={m}: {fm}")
        });
        let h = f_half_sum(m);
        report.record("3 sum C(6m+1, 3m+3k-1) = 64^m - 1", &h * 3 == p, || {
            format!("m={m}: {h}")
        });
        if m + 2 <= m_max {
            let (a, b, c) = (fm, &f[m as usize], &f[m as usize + 1]);
            let r: Integer = b * 65 - a * 64 - c;
            report.record("-64F(m) + 65F(m+1) - F(m+2) = 0", r.is_zero(), || {
                format!("m={m}: {r}")
            });
        }
    }
    Ok(report.finish())
}
