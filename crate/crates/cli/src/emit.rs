//! Report records on standard output: JSONL (one object per graph) or a
//! flattened CSV view (one row per graph/check pair).
//!
//! Field names are stable and match the check-id vocabulary. `lhs`, `rhs`,
//! and `margin` are arbitrary-precision: they serialize as JSON numbers
//! when they fit in an i64 and as decimal strings otherwise.

use inertia_core::checks::{CheckResult, ConjectureReport};
use inertia_core::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use std::io::{self, Write};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Jsonl,
    Csv,
}

struct BigNum<'a>(&'a BigInt);

impl Serialize for BigNum<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Serialize)]
struct CheckOut<'a> {
    check: &'a str,
    verdict: &'a str,
    lhs: BigNum<'a>,
    rhs: BigNum<'a>,
    margin: BigNum<'a>,
    #[serde(skip_serializing_if = "str::is_empty")]
    note: &'a str,
}

#[derive(Serialize)]
struct RecordOut<'a> {
    line: u64,
    id: &'a str,
    order: usize,
    size: usize,
    n_plus: usize,
    n_zero: usize,
    n_minus: usize,
    signature: i64,
    rank: usize,
    reduced: Option<bool>,
    #[serde(skip_serializing_if = "is_false")]
    approximate: bool,
    checks: Vec<CheckOut<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_us: Option<u128>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

fn check_out(r: &CheckResult) -> CheckOut<'_> {
    CheckOut {
        check: r.check.as_str(),
        verdict: r.verdict.as_str(),
        lhs: BigNum(&r.lhs),
        rhs: BigNum(&r.rhs),
        margin: BigNum(&r.margin),
        note: &r.note,
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub struct Emitter<W: Write> {
    out: W,
    format: EmitFormat,
    /// Wall-clock durations are emitted only on request so that identical
    /// inputs produce bitwise-identical streams.
    timings: bool,
    header_written: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: EmitFormat, timings: bool) -> Emitter<W> {
        Emitter {
            out,
            format,
            timings,
            header_written: false,
        }
    }

    pub fn record(&mut self, line: u64, report: &ConjectureReport) -> io::Result<()> {
        match self.format {
            EmitFormat::Jsonl => {
                let rec = RecordOut {
                    line,
                    id: &report.graph_id,
                    order: report.order,
                    size: report.size,
                    n_plus: report.inertia.n_plus,
                    n_zero: report.inertia.n_zero,
                    n_minus: report.inertia.n_minus,
                    signature: report.signature,
                    rank: report.rank,
                    reduced: report.reduced,
                    approximate: report.approximate,
                    checks: report.results.iter().map(check_out).collect(),
                    elapsed_us: self.timings.then_some(report.elapsed.as_micros()),
                };
                serde_json::to_writer(&mut self.out, &rec)?;
                writeln!(self.out)
            }
            EmitFormat::Csv => {
                if !self.header_written {
                    writeln!(
                        self.out,
                        "line,id,order,size,n_plus,n_zero,n_minus,signature,rank,reduced,approximate,check,verdict,lhs,rhs,margin,note"
                    )?;
                    self.header_written = true;
                }
                for r in &report.results {
                    writeln!(
                        self.out,
                        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                        line,
                        csv_field(&report.graph_id),
                        report.order,
                        report.size,
                        report.inertia.n_plus,
                        report.inertia.n_zero,
                        report.inertia.n_minus,
                        report.signature,
                        report.rank,
                        report.reduced.map_or(String::new(), |b| b.to_string()),
                        report.approximate,
                        r.check.as_str(),
                        r.verdict.as_str(),
                        r.lhs,
                        r.rhs,
                        r.margin,
                        csv_field(&r.note),
                    )?;
                }
                Ok(())
            }
        }
    }

    /// Emit a final summary object (JSONL) or comment line (CSV).
    pub fn summary(&mut self, value: &serde_json::Value) -> io::Result<()> {
        match self.format {
            EmitFormat::Jsonl => {
                serde_json::to_writer(&mut self.out, value)?;
                writeln!(self.out)
            }
            EmitFormat::Csv => writeln!(self.out, "# summary: {value}"),
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
