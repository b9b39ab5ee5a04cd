use thiserror::Error;

use crate::triples::PythTriple;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid triple parameters (s={s}, t={t}): {reason}")]
    InvalidParams { s: String, t: String, reason: &'static str },

    #[error("({a}, {b}, {c}) is not a right triangle")]
    NotPythagorean { a: String, b: String, c: String },

    #[error("({a}, {b}, {c}) is not primitive (common factor {gcd})")]
    NotPrimitive { a: String, b: String, c: String, gcd: String },

    #[error("legs {a} and {b} have the same parity")]
    ParityViolation { a: String, b: String },

    /// Zero or several of the K1..K6 predicates matched.
    #[error("partition violation for {triple}: matched classes {matched:?}")]
    PartitionViolation { triple: PythTriple, matched: Vec<&'static str> },

    /// The sieved engine disagreed with the naive oracle.
    #[error("sieve soundness violation for {triple}: oracle {oracle:?}, sieved {sieved:?}")]
    SieveSoundnessViolation {
        triple: PythTriple,
        oracle: Vec<(u32, u32, u32)>,
        sieved: Vec<(u32, u32, u32)>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
