//! Row types and the CSV/JSON writers.

use std::io::{self, Write};

use hyperwave_core::{ComplexValue, SeriesSpec};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub tau: f64,
    pub phi: f64,
    pub re: f64,
    pub im: f64,
}

impl Row {
    pub fn new(tau: f64, phi: f64, v: ComplexValue) -> Self {
        Self { tau, phi, re: v.re, im: v.im }
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub spec: SeriesSpec,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
}

impl Metadata {
    pub fn new(spec: SeriesSpec, with_version: bool) -> Self {
        Self { spec, name: spec.to_string(), version: with_version.then(|| env!("CARGO_PKG_VERSION").to_string()) }
    }
}

/// `eval --format json`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalDocument {
    pub metadata: Metadata,
    pub data: Vec<Row>,
}

/// `table --format json` without `--split`: every function of the range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
    pub functions: Vec<EvalDocument>,
}

pub const EVAL_HEADER: &str = "tau,phi,re,im,abs";
pub const TABLE_HEADER: &str = "k,m,tau,phi,re,im,abs";

/// f64 `Display` is the shortest representation that parses back exactly.
pub fn write_csv(w: &mut impl Write, rows: &[Row], with_version: bool) -> io::Result<()> {
    if with_version {
        writeln!(w, "# hyperwave {}", env!("CARGO_PKG_VERSION"))?;
    }
    writeln!(w, "{EVAL_HEADER}")?;
    for r in rows {
        writeln!(w, "{},{},{},{},{}", r.tau, r.phi, r.re, r.im, r.abs())?;
    }
    Ok(())
}

pub fn write_long_csv(w: &mut impl Write, blocks: &[(String, f64, Vec<Row>)], with_version: bool) -> io::Result<()> {
    if with_version {
        writeln!(w, "# hyperwave {}", env!("CARGO_PKG_VERSION"))?;
    }
    writeln!(w, "{TABLE_HEADER}")?;
    for (k, m, rows) in blocks {
        for r in rows {
            writeln!(w, "{k},{m},{},{},{},{},{}", r.tau, r.phi, r.re, r.im, r.abs())?;
        }
    }
    Ok(())
}

pub fn write_json<T: Serialize>(w: &mut impl Write, doc: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, doc)?;
    writeln!(w)
}
