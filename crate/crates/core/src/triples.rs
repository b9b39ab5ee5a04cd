//! Primitive Pythagorean triples `a² + b² = c²` with `a` odd and `b` even.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Generating pair `(s, t)` with `s > t ≥ 1`, `gcd(s, t) = 1`, `s ≢ t (mod 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TripleParams {
    #[serde(serialize_with = "ser_big")]
    s: BigUint,
    #[serde(serialize_with = "ser_big")]
    t: BigUint,
}

impl TripleParams {
    pub fn new(s: impl Into<BigUint>, t: impl Into<BigUint>) -> Result<Self> {
        let (s, t) = (s.into(), t.into());
        let fail = |reason| Err(Error::InvalidParams { s: s.to_string(), t: t.to_string(), reason });
        if t.is_zero() {
            return fail("t must be positive");
        }
        if s <= t {
            return fail("s must exceed t");
        }
        if s.is_even() == t.is_even() {
            return fail("s and t must have opposite parity");
        }
        if s.gcd(&t) != BigUint::from(1u32) {
            return fail("s and t must be coprime");
        }
        Ok(TripleParams { s, t })
    }

    pub fn s(&self) -> &BigUint {
        &self.s
    }

    pub fn t(&self) -> &BigUint {
        &self.t
    }
}

/// A primitive Pythagorean triple in canonical leg order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PythTriple {
    #[serde(serialize_with = "ser_big")]
    a: BigUint,
    #[serde(serialize_with = "ser_big")]
    b: BigUint,
    #[serde(serialize_with = "ser_big")]
    c: BigUint,
}

impl PythTriple {
    fn new_unchecked(a: BigUint, b: BigUint, c: BigUint) -> Self {
        PythTriple { a, b, c }
    }

    /// `(s² − t², 2st, s² + t²)`.
    pub fn from_params(p: &TripleParams) -> Self {
        let (s2, t2) = (&p.s * &p.s, &p.t * &p.t);
        let b = BigUint::from(2u32) * &p.s * &p.t;
        Self::new_unchecked(&s2 - &t2, b, s2 + t2)
    }

    /// Odd leg.
    pub fn a(&self) -> &BigUint {
        &self.a
    }

    /// Even leg, always divisible by 4.
    pub fn b(&self) -> &BigUint {
        &self.b
    }

    /// Hypotenuse.
    pub fn c(&self) -> &BigUint {
        &self.c
    }

    /// Recovers `(s, t)` from `c + a = 2s²` and `c − a = 2t²`.
    pub fn params(&self) -> TripleParams {
        let s = ((&self.c + &self.a) >> 1u32).sqrt();
        let t = ((&self.c - &self.a) >> 1u32).sqrt();
        TripleParams { s, t }
    }

    /// `(a, b, c)` as `u64`s when they all fit.
    pub fn to_u64s(&self) -> Option<(u64, u64, u64)> {
        Some((self.a.to_u64()?, self.b.to_u64()?, self.c.to_u64()?))
    }
}

/// Ascending by hypotenuse, then odd leg.
impl Ord for PythTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.c, &self.a, &self.b).cmp(&(&other.c, &other.a, &other.b))
    }
}

impl PartialOrd for PythTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PythTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Serialises a big integer as a bare JSON number of any length.
pub(crate) fn ser_big<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    let num: serde_json::Number = n.to_string().parse().map_err(serde::ser::Error::custom)?;
    num.serialize(s)
}

/// Checks `(a, b, c)` and returns it with the even leg moved to `b`.
pub fn validate(a: impl Into<BigUint>, b: impl Into<BigUint>, c: impl Into<BigUint>) -> Result<PythTriple> {
    let (mut a, mut b, c) = (a.into(), b.into(), c.into());
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::Domain(format!("triple members must be positive: ({a}, {b}, {c})")));
    }
    if a.is_even() && b.is_odd() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_odd() {
        return Err(Error::ParityViolation { a: a.to_string(), b: b.to_string() });
    }
    if &a * &a + &b * &b != &c * &c {
        return Err(Error::NotPythagorean { a: a.to_string(), b: b.to_string(), c: c.to_string() });
    }
    let g = a.gcd(&b);
    if g != BigUint::from(1u32) {
        return Err(Error::NotPrimitive {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
            gcd: g.to_string(),
        });
    }
    Ok(PythTriple::new_unchecked(a, b, c))
}

/// Every primitive triple with `c ≤ c_max`, ascending by `(c, a)`.
pub fn enumerate_primitive(c_max: &BigUint) -> PrimitiveTriples {
    PrimitiveTriples::new(c_max.to_u128().unwrap_or(u128::MAX))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Cursor {
    c: u128,
    a: u128,
    s: u64,
    t: u64,
}

/// Streaming enumerator over `(s, t)`.
///
/// For fixed `s` the hypotenuse grows with `t`, so the stream is a k-way merge
/// of one cursor per `s`, held in a min-heap. Cursors for a new `s` are opened
/// lazily once `s² + t_min²` reaches the current minimum, which keeps the heap
/// at `O(√c_max)` entries.
#[derive(Debug, Clone)]
pub struct PrimitiveTriples {
    c_max: u128,
    next_s: u64,
    heap: BinaryHeap<Reverse<Cursor>>,
}

impl PrimitiveTriples {
    fn new(c_max: u128) -> Self {
        PrimitiveTriples { c_max, next_s: 2, heap: BinaryHeap::new() }
    }

    fn cursor(s: u64, t: u64) -> Cursor {
        let (s2, t2) = (s as u128 * s as u128, t as u128 * t as u128);
        Cursor { c: s2 + t2, a: s2 - t2, s, t }
    }

    fn first_t(s: u64) -> u64 {
        if s.is_multiple_of(2) {
            1
        } else {
            2
        }
    }

    /// Next valid `t` after `t` for this `s`, if its triple is in range.
    fn advance(&self, s: u64, mut t: u64) -> Option<Cursor> {
        loop {
            t += 2;
            if t >= s {
                return None;
            }
            let cur = Self::cursor(s, t);
            if cur.c > self.c_max {
                return None;
            }
            if s.gcd(&t) == 1 {
                return Some(cur);
            }
        }
    }

    fn next_raw(&mut self) -> Option<Cursor> {
        loop {
            let s = self.next_s;
            let opening = Self::cursor(s, Self::first_t(s));
            if opening.c > self.c_max {
                break;
            }
            match self.heap.peek() {
                Some(Reverse(top)) if top.c < opening.c => break,
                _ => {
                    self.heap.push(Reverse(opening));
                    self.next_s += 1;
                }
            }
        }
        let Reverse(cur) = self.heap.pop()?;
        if let Some(next) = self.advance(cur.s, cur.t) {
            self.heap.push(Reverse(next));
        }
        Some(cur)
    }

    /// Pairs each triple with its generating parameters.
    pub fn with_params(self) -> impl Iterator<Item = (TripleParams, PythTriple)> {
        let mut inner = self;
        std::iter::from_fn(move || {
            let cur = inner.next_raw()?;
            let params = TripleParams { s: cur.s.into(), t: cur.t.into() };
            let triple = PythTriple::from_params(&params);
            Some((params, triple))
        })
    }
}

impl Iterator for PrimitiveTriples {
    type Item = PythTriple;

    fn next(&mut self) -> Option<PythTriple> {
        let cur = self.next_raw()?;
        let b = 2 * cur.s as u128 * cur.t as u128;
        Some(PythTriple::new_unchecked(cur.a.into(), b.into(), cur.c.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abc(tr: &PythTriple) -> (u64, u64, u64) {
        tr.to_u64s().unwrap()
    }

    fn list(c_max: u64) -> Vec<(u64, u64, u64)> {
        enumerate_primitive(&c_max.into()).map(|t| abc(&t)).collect()
    }

    #[test]
    fn from_params_examples() {
        let cases = [((2u32, 1u32), (3, 4, 5)), ((3, 2), (5, 12, 13)), ((7, 4), (33, 56, 65))];
        for ((s, t), expected) in cases {
            let p = TripleParams::new(s, t).unwrap();
            assert_eq!(abc(&PythTriple::from_params(&p)), expected);
        }
    }

    #[test]
    fn params_rejected_with_reason() {
        let reason = |s: u32, t: u32| match TripleParams::new(s, t) {
            Err(Error::InvalidParams { reason, .. }) => reason,
            other => panic!("expected InvalidParams, got {other:?}"),
        };
        assert_eq!(reason(1, 2), "s must exceed t");
        assert_eq!(reason(3, 1), "s and t must have opposite parity");
        assert_eq!(reason(9, 5), "s and t must have opposite parity");
        assert_eq!(reason(9, 6), "s and t must be coprime");
        assert_eq!(reason(15, 6), "s and t must be coprime");
        assert_eq!(reason(4, 0), "t must be positive");
    }

    #[test]
    fn validate_examples() {
        assert_eq!(abc(&validate(4u32, 3u32, 5u32).unwrap()), (3, 4, 5));
        assert_eq!(abc(&validate(5u32, 12u32, 13u32).unwrap()), (5, 12, 13));
        assert!(matches!(validate(6u32, 8u32, 10u32), Err(Error::NotPrimitive { .. })));
        assert!(matches!(validate(3u32, 4u32, 6u32), Err(Error::NotPythagorean { .. })));
        assert!(matches!(validate(3u32, 5u32, 6u32), Err(Error::ParityViolation { .. })));
        assert!(matches!(validate(0u32, 4u32, 4u32), Err(Error::Domain(_))));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(list(5), vec![(3, 4, 5)]);
        assert_eq!(list(20), vec![(3, 4, 5), (5, 12, 13), (15, 8, 17)]);
        assert_eq!(list(100).len(), 16);
        assert!(list(4).is_empty());
        assert!(list(0).is_empty());
    }

    #[test]
    fn shared_hypotenuse_is_ordered_by_odd_leg() {
        // 65 = 8² + 1² = 7² + 4²
        let at_65: Vec<_> = list(65).into_iter().filter(|t| t.2 == 65).collect();
        assert_eq!(at_65, vec![(33, 56, 65), (63, 16, 65)]);
    }

    #[test]
    fn with_params_agrees_with_plain_stream() {
        let c_max = BigUint::from(2000u32);
        let plain: Vec<_> = enumerate_primitive(&c_max).collect();
        let paired: Vec<_> = enumerate_primitive(&c_max).with_params().collect();
        assert_eq!(plain.len(), paired.len());
        for (t, (p, t2)) in plain.iter().zip(&paired) {
            assert_eq!(t, t2);
            assert_eq!(&t.params(), p);
        }
    }

    #[test]
    fn big_members_serialise_as_bare_numbers() {
        let p = TripleParams::new(BigUint::from(u64::MAX), 2u32).unwrap();
        let tr = PythTriple::from_params(&p);
        let json = serde_json::to_string(&tr).unwrap();
        assert!(json.starts_with("{\"a\":340282366920938463426481119284349108221,"), "{json}");
    }

    proptest! {
        #[test]
        fn round_trip_through_validate(s in 2u32..=200, t in 1u32..200) {
            prop_assume!(t < s);
            if let Ok(p) = TripleParams::new(s, t) {
                let tr = PythTriple::from_params(&p);
                prop_assert_eq!(validate(tr.a().clone(), tr.b().clone(), tr.c().clone()).unwrap(), tr.clone());
                prop_assert_eq!(validate(tr.b().clone(), tr.a().clone(), tr.c().clone()).unwrap(), tr.clone());
                prop_assert_eq!(tr.params(), p);
                prop_assert!((tr.b() % 4u32).is_zero());
            }
        }
    }
}
