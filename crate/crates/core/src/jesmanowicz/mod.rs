//! Bounded search for `a^x + b^y = c^z` over a primitive triple.
//!
//! Two engines are provided. [`naive_search`] is the oracle: for every
//! `(x, z)` it subtracts and looks the difference up among the powers of `b`.
//! [`sieved_search`] walks the same lattice but discards candidates whose
//! exponent residues cannot satisfy the equation modulo small moduli, or whose
//! terms are too large, before doing any big-integer arithmetic.
//!
//! The remaining functions check individual steps of the uniqueness argument
//! for `(2, 2, 2)` by exhaustion rather than assuming them.

mod lemmas;
mod search;

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::classifier::GptClass;
use crate::triples::PythTriple;

pub use lemmas::{lemma1_scan, lemma2_constraints, mu_nu_split, Lemma1Hit, Lemma1Report, Lemma1System, MuNuSplit};
pub use search::{naive_report, naive_search, sieved_search, theorem2_check};

/// A solution `(x, y, z)` of `a^x + b^y = c^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExponentSolution {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl ExponentSolution {
    pub const TRIVIAL: ExponentSolution = ExponentSolution { x: 2, y: 2, z: 2 };

    pub fn new(x: u32, y: u32, z: u32) -> Self {
        ExponentSolution { x, y, z }
    }

    pub fn as_tuple(self) -> (u32, u32, u32) {
        (self.x, self.y, self.z)
    }
}

impl fmt::Display for ExponentSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Naive,
    Sieved,
}

/// State of the `x ≡ z (mod 2), x ≥ z ≥ 2` pruning layer for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma2Layer {
    /// Not requested.
    Off,
    /// Active, and the oracle found no solution outside the predicate.
    Audited,
    /// Active without an oracle run.
    Unaudited,
    /// Requested, but the oracle found a solution violating the predicate.
    DisabledByAudit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Sieve moduli; an empty list degenerates to magnitude pruning only.
    pub moduli: Vec<u64>,
    pub lemma2_layer: bool,
    /// Re-run the naive oracle and fail on any disagreement.
    pub oracle_crosscheck: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            moduli: crate::modular::DEFAULT_MODULI.to_vec(),
            lemma2_layer: false,
            oracle_crosscheck: false,
        }
    }
}

impl SearchOptions {
    pub fn with_moduli(moduli: &[u64]) -> Self {
        SearchOptions { moduli: moduli.to_vec(), ..Self::default() }
    }
}

/// Outcome of one search over the cube `1 ≤ x, y, z ≤ exponent_bound`.
///
/// `candidates_examined + candidates_pruned_by_sieve +
/// candidates_pruned_by_magnitude` always equals `exponent_bound³`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub triple: PythTriple,
    pub gpt_class: GptClass,
    pub exponent_bound: u32,
    pub engine: Engine,
    pub moduli: Vec<u64>,
    pub solutions: Vec<ExponentSolution>,
    pub candidates_examined: u64,
    pub candidates_pruned_by_sieve: u64,
    pub candidates_pruned_by_magnitude: u64,
    /// Share of `candidates_pruned_by_sieve` removed by the exponent-shape layer alone.
    pub candidates_pruned_by_lemma2: u64,
    pub lemma2_layer: Lemma2Layer,
    /// Oracle solutions outside the exponent-shape predicate, other than `(2, 2, 2)`.
    pub lemma2_violations: Vec<ExponentSolution>,
    pub oracle_checked: bool,
    /// When `5 | c`: admitted `(x mod 4, y mod 4)` pairs of
    /// `a^x + b^y ≡ 0 (mod 5)` other than `(2, 2)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mod5_extra_residue_pairs: Option<Vec<(u64, u64)>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn lattice_points(&self) -> u64 {
        (self.exponent_bound as u64).pow(3)
    }

    /// Solutions other than `(2, 2, 2)`.
    pub fn extra_solutions(&self) -> Vec<ExponentSolution> {
        self.solutions.iter().copied().filter(|s| *s != ExponentSolution::TRIVIAL).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    NotApplicable,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Verdict of the uniqueness check for classes K1 and K3, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem2Outcome {
    pub verdict: Verdict,
    pub extra_solutions: Vec<ExponentSolution>,
    pub report: SearchReport,
}
