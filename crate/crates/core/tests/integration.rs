use proptest::prelude::*;
use zagier_core::exactnum::{denom, int, rat, sign_pow, Rational};
use zagier_core::vcoeff::{
    bell_partial, legendre_backward, legendre_forward, v_by, v_parity, v_umbral, v_zagier_eval,
    z_recurrence, BellArgs, VMethod, VMethodResult,
};
use zagier_core::zagier::bstar_poly;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reflection_at_rational_points(n in 1u64..=24, x in small_rational()) {
        let p = bstar_poly(n).unwrap();
        let lhs = p.eval(&(-&x - int(3)));
        prop_assert_eq!(lhs, sign_pow(n as i64) * p.eval(&x));
    }

    #[test]
    fn umbral_sum_is_minus_twice_bstar_at_minus_one(n in 1u64..=40) {
        prop_assert_eq!(v_umbral(n), v_zagier_eval(n).unwrap());
    }

    #[test]
    fn legendre_round_trip(b in prop::collection::vec(small_rational(), 1..=15)) {
        prop_assert_eq!(legendre_backward(&legendre_forward(&b)), b);
    }

    #[test]
    fn bell_scales_by_t_to_the_n(
        n in 1u64..=7,
        k_off in 0u64..7,
        xs in prop::collection::vec(small_rational(), 7),
        t in small_rational(),
    ) {
        let k = 1 + k_off % n;
        let len = (n - k + 1) as usize;
        let x: Vec<Rational> = xs[..len].to_vec();
        // B_{n,k}(t x_1, t² x_2, ...) = t^n B_{n,k}(x_1, x_2, ...)
        let scaled: Vec<Rational> = x
            .iter()
            .enumerate()
            .map(|(i, v)| v * (0..=i).fold(int(1), |acc, _| acc * &t))
            .collect();
        let lhs = bell_partial(n, k, &BellArgs::new(scaled)).unwrap();
        let tn = (0..n).fold(int(1), |acc, _| acc * &t);
        prop_assert_eq!(lhs, tn * bell_partial(n, k, &BellArgs::new(x)).unwrap());
    }
}

#[test]
fn odd_index_v_through_60() {
    for n in 1..=60u64 {
        assert_eq!(v_parity(2 * n - 1).unwrap(), sign_pow(n as i64) * rat(1, 2));
    }
}

#[test]
fn z_has_odd_denominator_through_150() {
    for (i, z) in z_recurrence(150).iter().enumerate() {
        assert!(denom(z).bit(0), "n = {}", i + 1);
    }
}

#[test]
fn method_result_serializes_value_as_string() {
    let r = VMethodResult {
        n: 4,
        method: VMethod::Hoppe,
        value: v_by(VMethod::Hoppe, 4).unwrap(),
    };
    let s = serde_json::to_string(&r).unwrap();
    assert_eq!(s, r#"{"n":4,"method":"HOPPE","value":"-13/40"}"#);
    let back: VMethodResult = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
}

#[test]
fn heavy_pipelines_match_light_methods_at_twenty() {
    let want = v_parity(20).unwrap();
    assert_eq!(v_by(VMethod::FaaDiBruno, 20).unwrap(), want);
    assert_eq!(v_by(VMethod::Hoppe, 20).unwrap(), want);
}
