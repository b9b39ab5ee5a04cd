#![allow(dead_code)]

use num_bigint::BigUint;
use num_integer::Integer;
use pyth_core::{enumerate_primitive, PythTriple};

/// Primitive triples with `c ≤ n` found by scanning every `(a, c)` pair,
/// as `(odd leg, even leg, c)` ordered by `(c, a)`.
pub fn grid_search(n: u64) -> Vec<(u64, u64, u64)> {
    let mut found = Vec::new();
    for c in 1..=n {
        for a in 1..c {
            let b2 = c * c - a * a;
            let b = b2.isqrt();
            if b * b != b2 || a % 2 == 0 || a.gcd(&b) != 1 {
                continue;
            }
            found.push((a, b, c));
        }
    }
    found
}

pub fn triples_up_to(c_max: u64) -> Vec<PythTriple> {
    enumerate_primitive(&BigUint::from(c_max)).collect()
}

pub fn u64s(tr: &PythTriple) -> (u64, u64, u64) {
    tr.to_u64s().expect("small triple")
}
