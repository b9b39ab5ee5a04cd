//! Primitive Pythagorean triples and the exponential equation `a^x + b^y = c^z`.
//!
//! The crate is organised bottom-up:
//!
//! - [`modular`]: exact modular powers, multiplicative orders and the
//!   exponent-residue sieve.
//! - [`triples`]: parameterisation, validation and ordered enumeration of
//!   primitive triples.
//! - [`classifier`]: the divisibility facts `60 | abc`, `3 ∤ c` and the six
//!   residue classes K1..K6 induced by `(3, 4, 5)`.
//! - [`jesmanowicz`]: naive and sieved exponent searches plus checkers for the
//!   auxiliary identities used when arguing uniqueness of `(2, 2, 2)`.
//! - [`report`] and [`cli`]: batch runs, CSV / NDJSON serialisation and the
//!   `pyth` command line.
//!
//! All arithmetic on triple members and powers is arbitrary precision.

pub mod classifier;
pub mod cli;
mod error;
pub mod jesmanowicz;
pub mod modular;
pub mod report;
pub mod triples;

pub use classifier::{census, classify, verify_theorem1, Census, GptClass, Theorem1Report};
pub use error::{Error, Result};
pub use jesmanowicz::{
    lemma1_scan, lemma2_constraints, mu_nu_split, naive_search, sieved_search, theorem2_check,
    Engine, ExponentSolution, Lemma1Hit, Lemma1Report, MuNuSplit, SearchOptions, SearchReport,
    Theorem2Outcome, Verdict,
};
pub use modular::{
    admissible_exponent_residues, mod_pow, mult_order, residue_cycle, AdmissibleResidues,
    ExponentClass, ResidueCycle, DEFAULT_MODULI,
};
pub use triples::{enumerate_primitive, validate, PrimitiveTriples, PythTriple, TripleParams};
