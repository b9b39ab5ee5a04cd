//! Record layouts and writers for batch output.
//!
//! JSON output is newline-delimited, one object per record, so long runs can
//! be streamed. CSV output has a fixed header per subcommand.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::classifier::{Census, CensusViolation, GptClass, Theorem1Report};
use crate::error::Result;
use crate::jesmanowicz::{
    Engine, ExponentSolution, Lemma1Report, Lemma2Layer, Theorem2Outcome, Verdict,
};
use crate::triples::{PythTriple, TripleParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub const GENERATE_COLUMNS: &[&str] = &["s", "t", "a", "b", "c"];
pub const CLASSIFY_COLUMNS: &[&str] = &["a", "b", "c", "class"];
pub const THEOREM1_COLUMNS: &[&str] = &["a", "b", "c", "product_div_60", "c_not_div_3", "class"];
pub const CENSUS_COLUMNS: &[&str] = &["class", "count"];
pub const CHECK_COLUMNS: &[&str] = &["a", "b", "c", "class", "bound", "verdict", "solutions"];
pub const LEMMA1_COLUMNS: &[&str] = &["s", "t", "system", "x", "y", "z"];

enum Sink<W: Write> {
    Json(W),
    Csv(Box<csv::Writer<W>>),
}

/// Writes records either as NDJSON or as CSV rows under a fixed header.
pub struct RecordWriter<W: Write> {
    sink: Sink<W>,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W, format: Format, columns: &[&str]) -> Result<Self> {
        let sink = match format {
            Format::Json => Sink::Json(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(columns)?;
                Sink::Csv(Box::new(w))
            }
        };
        Ok(RecordWriter { sink })
    }

    pub fn write<T: Serialize>(&mut self, json: &T, csv_row: &[String]) -> Result<()> {
        match &mut self.sink {
            Sink::Json(w) => {
                serde_json::to_writer(&mut *w, json)?;
                w.write_all(b"\n")?;
            }
            Sink::Csv(w) => w.write_record(csv_row)?,
        }
        Ok(())
    }

    pub fn finish(self) -> Result<()> {
        match self.sink {
            Sink::Json(mut w) => w.flush()?,
            Sink::Csv(mut w) => w.flush()?,
        }
        Ok(())
    }
}

fn abc(tr: &PythTriple) -> [String; 3] {
    [tr.a().to_string(), tr.b().to_string(), tr.c().to_string()]
}

fn class_name(k: Option<GptClass>) -> &'static str {
    k.map_or("NONE", GptClass::name)
}

#[derive(Serialize)]
pub struct GenerateRecord<'a> {
    #[serde(flatten)]
    pub params: &'a TripleParams,
    #[serde(flatten)]
    pub triple: &'a PythTriple,
}

impl GenerateRecord<'_> {
    pub fn csv(&self) -> Vec<String> {
        let mut row = vec![self.params.s().to_string(), self.params.t().to_string()];
        row.extend(abc(self.triple));
        row
    }
}

#[derive(Serialize)]
pub struct ClassifyRecord<'a> {
    #[serde(flatten)]
    pub triple: &'a PythTriple,
    pub class: &'static str,
}

impl<'a> ClassifyRecord<'a> {
    pub fn new(triple: &'a PythTriple, class: Option<GptClass>) -> Self {
        ClassifyRecord { triple, class: class_name(class) }
    }

    pub fn csv(&self) -> Vec<String> {
        let mut row = abc(self.triple).to_vec();
        row.push(self.class.to_string());
        row
    }
}

#[derive(Serialize)]
pub struct Theorem1Record<'a> {
    #[serde(flatten)]
    pub triple: &'a PythTriple,
    pub product_div_60: bool,
    pub c_not_div_3: bool,
    pub class: &'static str,
}

impl<'a> Theorem1Record<'a> {
    pub fn new(r: &'a Theorem1Report) -> Self {
        Theorem1Record {
            triple: &r.triple,
            product_div_60: r.product_div_60,
            c_not_div_3: r.c_not_div_3,
            class: class_name(r.gpt_class),
        }
    }

    pub fn csv(&self) -> Vec<String> {
        let mut row = abc(self.triple).to_vec();
        row.push(self.product_div_60.to_string());
        row.push(self.c_not_div_3.to_string());
        row.push(self.class.to_string());
        row
    }
}

#[derive(Serialize)]
pub struct CensusRecord<'a> {
    #[serde(serialize_with = "crate::triples::ser_big")]
    pub c_max: &'a num_bigint::BigUint,
    /// Class name to defining divisibility pattern.
    pub classes: serde_json::Map<String, serde_json::Value>,
    pub counts: serde_json::Map<String, serde_json::Value>,
    pub total: u64,
    pub violations: &'a [CensusViolation],
}

impl<'a> CensusRecord<'a> {
    pub fn new(c_max: &'a num_bigint::BigUint, census: &'a Census) -> Self {
        let classes = GptClass::ALL
            .iter()
            .map(|k| (k.name().to_string(), k.definition().into()))
            .collect();
        let counts = GptClass::ALL
            .iter()
            .map(|&k| (k.name().to_string(), census.count(k).into()))
            .collect();
        CensusRecord {
            c_max,
            classes,
            counts,
            total: census.total(),
            violations: &census.violations,
        }
    }

    pub fn csv_rows(census: &Census) -> Vec<Vec<String>> {
        GptClass::ALL
            .iter()
            .map(|&k| vec![k.name().to_string(), census.count(k).to_string()])
            .collect()
    }
}

#[derive(Serialize)]
pub struct Pruning {
    pub examined: u64,
    pub pruned_by_sieve: u64,
    pub pruned_by_magnitude: u64,
    pub pruned_by_lemma2: u64,
}

/// One line of `check` output.
#[derive(Serialize)]
pub struct CheckRecord<'a> {
    pub triple: &'a PythTriple,
    pub class: GptClass,
    pub bound: u32,
    pub engine: Engine,
    pub moduli: &'a [u64],
    pub solutions: &'a [ExponentSolution],
    pub pruning: Pruning,
    pub lemma2_layer: Lemma2Layer,
    pub lemma2_violations: &'a [ExponentSolution],
    pub oracle_checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mod5_extra_residue_pairs: Option<&'a [(u64, u64)]>,
    pub verdict: Verdict,
    pub extra_solutions: &'a [ExponentSolution],
}

impl<'a> CheckRecord<'a> {
    pub fn new(o: &'a Theorem2Outcome) -> Self {
        let r = &o.report;
        CheckRecord {
            triple: &r.triple,
            class: r.gpt_class,
            bound: r.exponent_bound,
            engine: r.engine,
            moduli: &r.moduli,
            solutions: &r.solutions,
            pruning: Pruning {
                examined: r.candidates_examined,
                pruned_by_sieve: r.candidates_pruned_by_sieve,
                pruned_by_magnitude: r.candidates_pruned_by_magnitude,
                pruned_by_lemma2: r.candidates_pruned_by_lemma2,
            },
            lemma2_layer: r.lemma2_layer,
            lemma2_violations: &r.lemma2_violations,
            oracle_checked: r.oracle_checked,
            mod5_extra_residue_pairs: r.mod5_extra_residue_pairs.as_deref(),
            verdict: o.verdict,
            extra_solutions: &o.extra_solutions,
        }
    }

    /// Solutions are joined as `(x,y,z);(x,y,z)`.
    pub fn csv(&self) -> Vec<String> {
        let mut row = abc(self.triple).to_vec();
        row.push(self.class.to_string());
        row.push(self.bound.to_string());
        row.push(self.verdict.to_string());
        row.push(self.solutions.iter().map(ToString::to_string).collect::<Vec<_>>().join(";"));
        row
    }
}

pub fn lemma1_csv_rows(r: &Lemma1Report) -> Vec<Vec<String>> {
    r.hits
        .iter()
        .map(|h| {
            let system = match h.system {
                crate::jesmanowicz::Lemma1System::SEven => "i",
                crate::jesmanowicz::Lemma1System::TEven => "ii",
            };
            vec![
                h.s.to_string(),
                h.t.to_string(),
                system.to_string(),
                h.x.to_string(),
                h.y.to_string(),
                h.z.to_string(),
            ]
        })
        .collect()
}
