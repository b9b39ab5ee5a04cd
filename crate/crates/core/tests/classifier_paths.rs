mod common;

use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;
use pyth_core::{census, classify, enumerate_primitive, verify_theorem1, GptClass, PythTriple, TripleParams};

/// Class predicted from the generating parameters alone.
fn class_from_params(s: u64, t: u64) -> GptClass {
    let st = s * t;
    let squares_agree_mod5 = {
        let (i, j) = (s % 5, t % 5);
        i == j || i + j == 5
    };
    match (st.is_multiple_of(3), st.is_multiple_of(5)) {
        (false, false) if squares_agree_mod5 => GptClass::K2,
        (false, false) => GptClass::K1,
        (true, false) if squares_agree_mod5 => GptClass::K4,
        (true, false) => GptClass::K3,
        (false, true) => GptClass::K5,
        (true, true) => GptClass::K6,
    }
}

fn st(p: &TripleParams) -> (u64, u64) {
    (p.s().try_into().unwrap(), p.t().try_into().unwrap())
}

#[test]
fn param_path_agrees_up_to_1e5() {
    let mut n = 0;
    for (p, tr) in enumerate_primitive(&BigUint::from(100_000u32)).with_params() {
        let (s, t) = st(&p);
        assert_eq!(classify(&tr).unwrap(), class_from_params(s, t), "{tr} from s={s}, t={t}");
        n += 1;
    }
    assert!(n > 15_000);
}

#[test]
fn census_at_100() {
    let c = census(&BigUint::from(100u32));
    let counts: Vec<u64> = GptClass::ALL.iter().map(|&k| c.count(k)).collect();
    assert_eq!(counts, [3, 2, 3, 4, 3, 1]);
    assert!(c.violations.is_empty());
}

#[test]
fn census_matches_sequential_classification() {
    let c_max = BigUint::from(20_000u32);
    let mut counts = [0u64; 6];
    for tr in enumerate_primitive(&c_max) {
        counts[classify(&tr).unwrap().index()] += 1;
    }
    let c = census(&c_max);
    assert_eq!(GptClass::ALL.map(|k| c.count(k)), counts);
}

proptest! {
    #[test]
    fn param_path_agrees_for_large_params(t in 1u64..1u64 << 30, d in 0u64..1u64 << 30) {
        let s = t + 2 * d + 1;
        prop_assume!(s.gcd(&t) == 1);
        let p = TripleParams::new(s, t).unwrap();
        let tr = PythTriple::from_params(&p);
        prop_assert_eq!(classify(&tr).unwrap(), class_from_params(s, t));
        prop_assert!(verify_theorem1(&tr).holds());
    }

    #[test]
    fn exactly_one_class_matches(t in 1u64..5000, d in 0u64..5000) {
        let s = t + 2 * d + 1;
        prop_assume!(s.gcd(&t) == 1);
        let tr = PythTriple::from_params(&TripleParams::new(s, t).unwrap());
        let (a, b, c) = common::u64s(&tr);
        let hits = [
            a % 3 == 0 && b % 4 == 0 && c % 5 == 0,
            b % 4 == 0 && a % 15 == 0,
            b % 12 == 0 && c % 5 == 0,
            b % 12 == 0 && a % 5 == 0,
            a % 3 == 0 && b % 20 == 0,
            b % 60 == 0,
        ];
        prop_assert_eq!(hits.iter().filter(|&&h| h).count(), 1);
        let k = classify(&tr).unwrap();
        prop_assert!(hits[k.index()]);
    }
}
