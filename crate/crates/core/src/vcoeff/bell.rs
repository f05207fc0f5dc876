//! Partial Bell polynomials evaluated at rational arguments.

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{precondition, Error, Result};
use crate::exactnum::{binomial, factorial, int, rat, Integer, Rational};
use crate::report::{ReportBuilder, VerifyReport};

/// Arguments x_1, ..., x_{n-k+1} of B_{n,k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellArgs {
    pub values: Vec<Rational>,
}

impl BellArgs {
    pub fn new(values: Vec<Rational>) -> Self {
        BellArgs { values }
    }
}

/// B_{n,k} for any n, k ≥ 0 (zero when k > n, B_{0,0} = 1), by the recurrence
/// B_{n,k} = Σ_j C(n-1, j-1)·x_j·B_{n-j,k-1}. Reads x_1..x_{n-k+1}; missing
/// trailing arguments count as zero.
pub(crate) fn bell_any(n: u64, k: u64, x: &[Rational]) -> Rational {
    if k > n {
        return Rational::zero();
    }
    if k == 0 {
        return if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    let gap = n - k;
    let arg = |j: u64| -> Rational {
        x.get(j as usize - 1)
            .cloned()
            .unwrap_or_else(Rational::zero)
    };
    // table[l][d] = B_{l+d, l}; only m - l ≤ n - k is ever needed
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(k as usize + 1);
    let mut base = vec![Rational::zero(); gap as usize + 1];
    base[0] = Rational::one();
    table.push(base);
    for l in 1..=k {
        let row: Vec<Rational> = (0..=gap)
            .map(|d| {
                let m = l + d;
                (1..=d + 1)
                    .map(|j| {
                        let prev = &table[(l - 1) as usize][(d + 1 - j) as usize];
                        if prev.is_zero() {
                            return Rational::zero();
                        }
                        Rational::from_integer(binomial(m - 1, j as i64 - 1)) * arg(j) * prev
                    })
                    .sum()
            })
            .collect();
        table.push(row);
    }
    table[k as usize][gap as usize].clone()
}

fn check_shape(n: u64, k: u64, args: &BellArgs) -> Result<()> {
    if k == 0 || k > n {
        return Err(precondition(
            "bell_partial",
            format!("need 1 <= k <= n, got n={n} k={k}"),
        ));
    }
    let expected = (n - k + 1) as usize;
    if args.values.len() != expected {
        return Err(Error::BellArity {
            expected,
            got: args.values.len(),
        });
    }
    Ok(())
}

/// B_{n,k}(x_1, ..., x_{n-k+1}).
pub fn bell_partial(n: u64, k: u64, args: &BellArgs) -> Result<Rational> {
    check_shape(n, k, args)?;
    Ok(bell_any(n, k, &args.values))
}

/// B_{n,k} straight from the definition: a sum over j_1 + ... = k,
/// j_1 + 2j_2 + ... = n of n!/(Π j_i!)·Π (x_i/i!)^{j_i}. Exponential; meant
/// as a reference for small n.
pub fn bell_partial_by_partitions(n: u64, k: u64, args: &BellArgs) -> Result<Rational> {
    check_shape(n, k, args)?;
    let len = args.values.len();
    let scaled: Vec<Rational> = (0..len)
        .map(|i| &args.values[i] / Rational::from_integer(factorial(i as u64 + 1)))
        .collect();
    let mut total = Rational::zero();
    let mut js = vec![0u64; len];
    enumerate(0, k, n, &mut js, &mut |js| {
        let mut term = Rational::from_integer(factorial(n));
        for (i, &j) in js.iter().enumerate() {
            if j > 0 {
                term /= Rational::from_integer(factorial(j));
                term *= pow(&scaled[i], j);
            }
        }
        total += term;
    });
    Ok(total)
}

fn enumerate(i: usize, parts: u64, weight: u64, js: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
    if i == js.len() {
        if parts == 0 && weight == 0 {
            f(js);
        }
        return;
    }
    let size = i as u64 + 1;
    let mut j = 0;
    while j <= parts && j * size <= weight {
        js[i] = j;
        enumerate(i + 1, parts - j, weight - j * size, js, f);
        j += 1;
    }
    js[i] = 0;
}

fn pow(x: &Rational, e: u64) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

/// C(a, b) extended so that C(-1, -1) = 1 and C(-1, b) = 0 otherwise; zero
/// for any other negative argument. This is the boundary value the Bell
/// closed form needs at k = n.
pub fn lah_binomial(a: i64, b: i64) -> Integer {
    if a == -1 {
        return if b == -1 {
            Integer::one()
        } else {
            Integer::zero()
        };
    }
    if a < 0 || b < 0 {
        return Integer::zero();
    }
    binomial(a as u64, b)
}

/// Closed form of B_{n,k}(h'(z), ..., h^{(n-k+1)}(z)) for h(z) = z + 1/z:
/// (-1)^n·n!/z^{n+k}·Σ_{ℓ=0}^{k} C(n-k-1, k-ℓ-1)·(1 - z²)^ℓ/(ℓ!(k-ℓ)!).
/// Returned as coefficients of z^{-n-k}, z^{-n-k+1}, ...
pub fn bell_der_closed_form(n: u64, k: u64) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); 2 * k as usize + 1];
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    let lead = sign * Rational::from_integer(factorial(n));
    for l in 0..=k {
        let c = lah_binomial(n as i64 - k as i64 - 1, k as i64 - l as i64 - 1);
        if c.is_zero() {
            continue;
        }
        let w = &lead * Rational::new(c, factorial(l) * factorial(k - l));
        // (1 - z²)^ℓ = Σ_i C(ℓ, i)(-1)^i z^{2i}
        for i in 0..=l {
            let b = Rational::from_integer(binomial(l, i as i64));
            let t = if i % 2 == 0 { b } else { -b };
            coeffs[2 * i as usize] += &w * t;
        }
    }
    coeffs
}

/// h^{(i)}(z) for h(z) = z + 1/z.
fn h_derivative(i: u64, z: &Rational) -> Rational {
    let sign = if i % 2 == 0 { int(1) } else { int(-1) };
    let tail = sign * Rational::from_integer(factorial(i)) / pow(z, i + 1);
    if i == 1 {
        int(1) + tail
    } else {
        tail
    }
}

/// The Bell polynomial at the derivatives of z + 1/z, evaluated directly,
/// against [`bell_der_closed_form`].
pub fn bell_der_check(n: u64, k: u64, z: &Rational) -> Result<bool> {
    if z.is_zero() {
        return Err(precondition("bell_der_check", "z must be nonzero"));
    }
    let args = BellArgs::new((1..=n - k + 1).map(|i| h_derivative(i, z)).collect());
    let direct = bell_partial(n, k, &args)?;
    let coeffs = bell_der_closed_form(n, k);
    let base = pow(z, n + k).recip();
    let closed: Rational = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * pow(z, i as u64))
        .sum::<Rational>()
        * base;
    Ok(direct == closed)
}

pub(crate) fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let d: i64 = rng.gen_range(1..=9);
    rat(rng.gen_range(-20..=20), d)
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let q = random_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Homogeneity, reduction and factorial-argument identities for
/// 1 ≤ k ≤ n ≤ `n_max`, each at `points` random rational argument lists
/// (and random s, t), plus the recurrence against the partition sum for
/// n ≤ 8.
pub fn bell_identity_checks(n_max: u64, points: usize, seed: u64) -> Result<VerifyReport> {
    if n_max < 3 {
        return Err(precondition(
            "bell_identity_checks",
            "n_max must be at least 3",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ReportBuilder::new("bell", 1, n_max as i64);
    for n in 1..=n_max {
        for k in 1..=n {
            let len = (n - k + 1) as usize;
            for _ in 0..points {
                let x: Vec<Rational> = (0..len + 1).map(|_| random_rational(&mut rng)).collect();
                let (s, t) = (random_nonzero(&mut rng), random_nonzero(&mut rng));
                let lhs_args: Vec<Rational> = x
                    .iter()
                    .enumerate()
                    .map(|(i, xi)| {
                        if i == 0 {
                            xi.clone()
                        } else {
                            xi * &s * pow(&t, i as u64 + 1)
                        }
                    })
                    .collect();
                let mut rhs_args = x.clone();
                rhs_args[0] = &x[0] / (&s * &t);
                let lhs = bell_any(n, k, &lhs_args);
                let rhs = pow(&s, k) * pow(&t, n) * bell_any(n, k, &rhs_args);
                report.record("Bel-hom", lhs == rhs, || format!("n={n} k={k} s={s} t={t}"));

                let b = bell_any(n, k, &x);
                let reduced: Vec<Rational> =
                    (1..x.len()).map(|i| &x[i] / int(i as i64 + 1)).collect();
                let sum: Rational = (0..=k)
                    .map(|l| {
                        pow(&x[0], l) / Rational::from_integer(factorial(l))
                            * bell_any(n - k, k - l, &reduced)
                    })
                    .sum();
                let red = Rational::new(factorial(n), factorial(n - k)) * sum;
                report.record("Bel-red", b == red, || format!("n={n} k={k}"));

                if n <= 8 {
                    let args = BellArgs::new(x[..len].to_vec());
                    let p = bell_partial_by_partitions(n, k, &args)?;
                    report.record("recurrence = partition sum", b == p, || {
                        format!("n={n} k={k}")
                    });
                }
            }
            let fac: Vec<Rational> = (1..=len as u64)
                .map(|i| Rational::from_integer(factorial(i)))
                .collect();
            let got = bell_any(n, k, &fac);
            let want = Rational::new(binomial(n - 1, k as i64 - 1) * factorial(n), factorial(k));
            report.record("Bel-fac", got == want, || {
                format!("n={n} k={k}: {got} vs {want}")
            });
        }
    }
    Ok(report.finish())
}

/// [`bell_der_check`] for 1 ≤ k ≤ n ≤ `n_max` at `points` random nonzero z.
pub fn bell_der_sweep(n_max: u64, points: usize, seed: u64) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ReportBuilder::new("bell_der", 1, n_max as i64);
    for n in 1..=n_max {
        for k in 1..=n {
            for _ in 0..points {
                let z = random_nonzero(&mut rng);
                let ok = bell_der_check(n, k, &z)?;
                report.record("B_nk(h', h'', ...) closed form", ok, || {
                    format!("n={n} k={k} z={z}")
                });
            }
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(v: &[Rational]) -> BellArgs {
        BellArgs::new(v.to_vec())
    }

    #[test]
    fn examples() {
        let x = rat(3, 7);
        for n in 1..8 {
            assert_eq!(bell_partial(n, n, &args(std::slice::from_ref(&x))).unwrap(), pow(&x, n));
        }
        let (a, b) = (rat(2, 3), rat(-5, 2));
        assert_eq!(
            bell_partial(3, 2, &args(&[a.clone(), b.clone()])).unwrap(),
            int(3) * &a * &b
        );
        assert!(matches!(
            bell_partial(3, 2, &args(std::slice::from_ref(&a))),
            Err(Error::BellArity {
                expected: 2,
                got: 1
            })
        ));
        assert!(bell_partial(2, 3, &args(&[])).is_err());
    }

    #[test]
    fn factorial_arguments_give_lah_numbers() {
        for n in 1..=10u64 {
            for k in 1..=n {
                let fac: Vec<Rational> = (1..=n - k + 1)
                    .map(|i| Rational::from_integer(factorial(i)))
                    .collect();
                let want =
                    Rational::new(binomial(n - 1, k as i64 - 1) * factorial(n), factorial(k));
                assert_eq!(bell_partial(n, k, &args(&fac)).unwrap(), want);
            }
        }
    }

    #[test]
    fn derivative_closed_form() {
        assert!(bell_der_check(1, 1, &int(2)).unwrap());
        assert!(bell_der_check(4, 2, &rat(1, 3)).unwrap());
        assert!(bell_der_check(6, 6, &int(5)).unwrap());
        assert!(bell_der_check(3, 1, &int(0)).is_err());
        assert!(bell_der_sweep(10, 3, 7).unwrap().passed());
    }

    #[test]
    fn identity_sweep() {
        let r = bell_identity_checks(7, 3, 11).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
        assert_eq!(r.checks.len(), 4);
    }

    #[test]
    fn lah_convention() {
        assert_eq!(lah_binomial(-1, -1), Integer::one());
        assert_eq!(lah_binomial(-1, 0), Integer::zero());
        assert_eq!(lah_binomial(4, 2), Integer::from(6));
    }
}
