use num_traits::{One, Zero};

use super::TruncSeries;
use crate::classical::bernoulli_number;
use crate::exactnum::{int, rat, Rational};

/// Σ_{k=1}^{K} B_{2k}/(2k)·t^{2k}, the divergent part of the asymptotic
/// expansion of ψ evaluated at 1/t. With t(0) = 0 the k-th term starts at
/// z^{2k}, so K = ceil(order/2) terms determine every known coefficient.
fn digamma_tail(t: &TruncSeries) -> TruncSeries {
    assert!(t.coeff(0).is_zero(), "digamma tail needs t(0) = 0");
    let n = t.order();
    let terms = n.div_ceil(2);
    let t2 = t * t;
    let mut power = t2.clone();
    let mut acc = TruncSeries::zero(n);
    for k in 1..=terms {
        let c = bernoulli_number(2 * k) * rat(1, 2 * k as i64);
        acc = &acc + &power.scale(&c);
        power = &power * &t2;
    }
    // the first omitted term lies past the order
    debug_assert!(power.coeffs().iter().all(|c| c.is_zero()));
    acc
}

/// Coefficients v_0, ..., v_n of the asymptotic series
/// V(z) = log z + ψ(z + 1/z) = log(1 + z²) - s/2 - Σ_k B_{2k}/(2k)·s^{2k},
/// where s = z/(1 + z²).
pub fn expand_v(n: usize) -> TruncSeries {
    let one_plus_z2 = TruncSeries::new(vec![int(1), int(0), int(1)], n);
    let s = TruncSeries::monomial(Rational::one(), 1, n)
        .div(&one_plus_z2)
        .expect("1 + z² is invertible");
    let log = TruncSeries::monomial(Rational::one(), 2, n)
        .log1p()
        .expect("z² has no constant term");
    &(&log - &s.scale(&rat(1, 2))) - &digamma_tail(&s)
}

/// Σ_{m≥1} B*_m(x) z^m through z^n, from
/// -(1/2)·log z - (1/2)·ψ(z + 1/z - 1 - x) with the log z terms cancelled:
/// -(1/2)·log(1 + (-1-x)z + z²) + (1/4)·w + (1/2)·Σ_k B_{2k}/(2k)·w^{2k},
/// where w = z/(1 + (-1-x)z + z²).
pub fn expand_zagier_genfun(x: &Rational, n: usize) -> TruncSeries {
    let b = -(x + int(1));
    let q = TruncSeries::new(vec![int(1), b.clone(), int(1)], n);
    let w = TruncSeries::monomial(Rational::one(), 1, n)
        .div(&q)
        .expect("constant term 1");
    let log = TruncSeries::new(vec![int(0), b, int(1)], n)
        .log1p()
        .expect("no constant term");
    let out =
        &(&log.scale(&rat(-1, 2)) + &w.scale(&rat(1, 4))) + &digamma_tail(&w).scale(&rat(1, 2));
    // B*_0 is undefined; the constant term of the expansion is 0
    debug_assert!(out.coeff(0).is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_examples() {
        let v = expand_v(12);
        assert_eq!(v.coeff(0), &int(0));
        assert_eq!(v.coeff(1), &rat(-1, 2));
        assert_eq!(v.coeff(2), &rat(11, 12));
        let listed = [
            rat(-1, 2),
            rat(11, 12),
            rat(1, 2),
            rat(-13, 40),
            rat(-1, 2),
            rat(29, 630),
            rat(1, 2),
            rat(109, 560),
            rat(-1, 2),
            rat(-67, 132),
            rat(1, 2),
            rat(6571, 6006),
        ];
        for (i, c) in listed.iter().enumerate() {
            assert_eq!(v.coeff(i + 1), c, "v_{}", i + 1);
        }
    }

    #[test]
    fn genfun_examples() {
        let s = expand_zagier_genfun(&int(0), 8);
        assert_eq!(s.coeff(1), &rat(3, 4));
        assert_eq!(s.coeff(2), &rat(1, 24));
        assert_eq!(s.coeff(4), &rat(-27, 80));
        assert_eq!(s.coeff(8), &rat(451, 1120));
        // x = -1 gives -v_n/2
        let s = expand_zagier_genfun(&int(-1), 10);
        let v = expand_v(10);
        for n in 1..=10 {
            assert_eq!(s.coeff(n), &(v.coeff(n) * rat(-1, 2)));
        }
        // x = 1 gives B*_n + n/2
        let s1 = expand_zagier_genfun(&int(1), 10);
        let s0 = expand_zagier_genfun(&int(0), 10);
        for n in 1..=10 {
            assert_eq!(s1.coeff(n), &(s0.coeff(n) + rat(n as i64, 2)));
        }
    }

    #[test]
    fn tail_truncation_is_enough() {
        // one more Bernoulli term must not change anything through the order
        for n in 1..=20 {
            let v = expand_v(n);
            let longer = expand_v(n + 2).truncate(n);
            assert_eq!(v, longer, "n = {n}");
        }
    }
}
