//! Divisibility of primitive triples by the factors of `(3, 4, 5)`.
//!
//! Every primitive triple has `60 | abc` and `3 ∤ c`, and falls into exactly
//! one of six classes according to which member absorbs the 3 and the 5.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::triples::{enumerate_primitive, PythTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GptClass {
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
}

impl GptClass {
    pub const ALL: [GptClass; 6] =
        [GptClass::K1, GptClass::K2, GptClass::K3, GptClass::K4, GptClass::K5, GptClass::K6];

    pub fn name(self) -> &'static str {
        match self {
            GptClass::K1 => "K1",
            GptClass::K2 => "K2",
            GptClass::K3 => "K3",
            GptClass::K4 => "K4",
            GptClass::K5 => "K5",
            GptClass::K6 => "K6",
        }
    }

    /// Divisibility pattern defining the class.
    pub fn definition(self) -> &'static str {
        match self {
            GptClass::K1 => "3|a, 4|b, 5|c",
            GptClass::K2 => "4|b, 15|a",
            GptClass::K3 => "12|b, 5|c",
            GptClass::K4 => "12|b, 5|a",
            GptClass::K5 => "3|a, 20|b",
            GptClass::K6 => "60|b",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Tests the class predicate on residues of `(a, b, c)` modulo 60.
    fn matches(self, a: u64, b: u64, c: u64) -> bool {
        match self {
            GptClass::K1 => a.is_multiple_of(3) && b.is_multiple_of(4) && c.is_multiple_of(5),
            GptClass::K2 => b.is_multiple_of(4) && a.is_multiple_of(15),
            GptClass::K3 => b.is_multiple_of(12) && c.is_multiple_of(5),
            GptClass::K4 => b.is_multiple_of(12) && a.is_multiple_of(5),
            GptClass::K5 => a.is_multiple_of(3) && b.is_multiple_of(20),
            GptClass::K6 => b.is_multiple_of(60),
        }
    }
}

impl fmt::Display for GptClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for GptClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn residues60(tr: &PythTriple) -> (u64, u64, u64) {
    let r = |n: &BigUint| (n % 60u32).to_u64().expect("residue below 60");
    (r(tr.a()), r(tr.b()), r(tr.c()))
}

fn matching_classes(tr: &PythTriple) -> Vec<GptClass> {
    let (a, b, c) = residues60(tr);
    GptClass::ALL.into_iter().filter(|k| k.matches(a, b, c)).collect()
}

/// The unique class of `tr`; anything but exactly one match is an error.
pub fn classify(tr: &PythTriple) -> Result<GptClass> {
    match matching_classes(tr).as_slice() {
        [only] => Ok(*only),
        matched => Err(Error::PartitionViolation {
            triple: tr.clone(),
            matched: matched.iter().map(|k| k.name()).collect(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    pub triple: PythTriple,
    pub product_div_60: bool,
    pub c_not_div_3: bool,
    /// `None` when the six predicates do not single out one class.
    pub gpt_class: Option<GptClass>,
}

impl Theorem1Report {
    pub fn holds(&self) -> bool {
        self.product_div_60 && self.c_not_div_3 && self.gpt_class.is_some()
    }
}

pub fn verify_theorem1(tr: &PythTriple) -> Theorem1Report {
    let (a, b, c) = residues60(tr);
    Theorem1Report {
        triple: tr.clone(),
        product_div_60: (a * b * c) % 60 == 0,
        c_not_div_3: c % 3 != 0,
        gpt_class: classify(tr).ok(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusViolation {
    pub triple: PythTriple,
    pub product_div_60: bool,
    pub c_not_div_3: bool,
    pub matched: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Census {
    pub counts: [u64; 6],
    pub violations: Vec<CensusViolation>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn count(&self, k: GptClass) -> u64 {
        self.counts[k.index()]
    }

    fn record(mut self, tr: &PythTriple) -> Self {
        let report = verify_theorem1(tr);
        let matched = matching_classes(tr);
        if let [k] = matched.as_slice() {
            self.counts[k.index()] += 1;
        }
        if !report.holds() {
            self.violations.push(CensusViolation {
                triple: tr.clone(),
                product_div_60: report.product_div_60,
                c_not_div_3: report.c_not_div_3,
                matched: matched.iter().map(|k| k.name()).collect(),
            });
        }
        self
    }

    fn merge(mut self, other: Census) -> Census {
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts) {
            *mine += theirs;
        }
        self.violations.extend(other.violations);
        self
    }
}

const CENSUS_BATCH: usize = 1 << 14;

/// Tallies classes over every primitive triple with `c ≤ c_max`.
///
/// Runs on the current rayon pool. Violations are collected rather than
/// returned as errors, then sorted by `(c, a)`.
pub fn census(c_max: &BigUint) -> Census {
    let mut stream = enumerate_primitive(c_max);
    let mut total = Census::default();
    let mut batch = Vec::with_capacity(CENSUS_BATCH);
    loop {
        batch.clear();
        batch.extend(stream.by_ref().take(CENSUS_BATCH));
        if batch.is_empty() {
            break;
        }
        let part = batch
            .par_iter()
            .fold(Census::default, Census::record)
            .reduce(Census::default, Census::merge);
        total = total.merge(part);
    }
    total.violations.sort_by(|x, y| x.triple.cmp(&y.triple));
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triples::validate;

    fn tr(a: u32, b: u32, c: u32) -> PythTriple {
        validate(a, b, c).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&tr(3, 4, 5)).unwrap(), GptClass::K1);
        assert_eq!(classify(&tr(5, 12, 13)).unwrap(), GptClass::K4);
        assert_eq!(classify(&tr(11, 60, 61)).unwrap(), GptClass::K6);
        assert_eq!(classify(&tr(15, 8, 17)).unwrap(), GptClass::K2);
        assert_eq!(classify(&tr(7, 24, 25)).unwrap(), GptClass::K3);
        assert_eq!(classify(&tr(21, 20, 29)).unwrap(), GptClass::K5);
    }

    #[test]
    fn verify_theorem1_examples() {
        for (t, k) in [
            (tr(3, 4, 5), GptClass::K1),
            (tr(33, 56, 65), GptClass::K1),
            (tr(21, 20, 29), GptClass::K5),
        ] {
            let r = verify_theorem1(&t);
            assert!(r.product_div_60 && r.c_not_div_3);
            assert_eq!(r.gpt_class, Some(k));
            assert!(r.holds());
        }
    }

    #[test]
    fn census_small_bounds() {
        let c = census(&5u32.into());
        assert_eq!(c.counts, [1, 0, 0, 0, 0, 0]);
        assert!(c.violations.is_empty());

        let c = census(&100u32.into());
        assert_eq!(c.counts, [3, 2, 3, 4, 3, 1]);
        assert_eq!(c.total(), 16);
        assert!(c.violations.is_empty());
    }

    #[test]
    fn census_spans_several_batches() {
        // ~ 15.9k triples per 10^5 of c_max; forces more than one batch
        let c = census(&200_000u32.into());
        let sequential = enumerate_primitive(&200_000u32.into())
            .fold(Census::default(), |acc, t| acc.record(&t));
        assert!(c.total() > CENSUS_BATCH as u64);
        assert_eq!(c, sequential);
    }

    #[test]
    fn residue_predicates_catch_non_partitions() {
        // (a, b, c) residues that no primitive triple can have: 15|a and 5|c
        let hits: Vec<_> =
            GptClass::ALL.into_iter().filter(|k| k.matches(15, 4, 5)).collect();
        assert_eq!(hits, vec![GptClass::K1, GptClass::K2]);
        assert!(GptClass::ALL.into_iter().all(|k| !k.matches(1, 4, 1)));
    }
}
