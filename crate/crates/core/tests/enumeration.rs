mod common;

use common::{grid_search, triples_up_to, u64s};
use num_bigint::BigUint;
use pyth_core::{enumerate_primitive, validate, PythTriple, TripleParams};

#[test]
fn matches_grid_search_up_to_500() {
    let got: Vec<_> = triples_up_to(500).iter().map(u64s).collect();
    assert_eq!(got, grid_search(500));
    assert_eq!(got.len(), 80);
}

#[test]
fn counts_at_known_bounds() {
    assert_eq!(triples_up_to(100).len(), 16);
    assert_eq!(triples_up_to(1000).len(), 158);
}

#[test]
fn every_small_bound_is_a_prefix() {
    let full = triples_up_to(300);
    for n in 0..=300u64 {
        let want: Vec<_> = full.iter().filter(|t| *t.c() <= BigUint::from(n)).cloned().collect();
        assert_eq!(triples_up_to(n), want, "c_max = {n}");
    }
}

#[test]
fn params_round_trip() {
    for (p, tr) in enumerate_primitive(&BigUint::from(2000u32)).with_params() {
        assert_eq!(PythTriple::from_params(&p), tr);
        assert_eq!(tr.params(), p);
        let (a, b, c) = u64s(&tr);
        assert_eq!(validate(b, a, c).unwrap(), tr);
    }
}

#[test]
fn large_parameters_stay_exact() {
    let s = BigUint::from(u64::MAX);
    let p = TripleParams::new(s.clone(), 2u32).unwrap();
    let tr = PythTriple::from_params(&p);
    assert_eq!(tr.a() * tr.a() + tr.b() * tr.b(), tr.c() * tr.c());
    assert!(tr.to_u64s().is_none());
    assert_eq!(validate(tr.a().clone(), tr.b().clone(), tr.c().clone()).unwrap(), tr);
}
