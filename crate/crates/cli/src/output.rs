//! Table emission as CSV or JSON.
//!
//! Both formats carry the same field set; counts are written as decimal
//! strings so that consumers without big integers lose nothing.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn emit<T: Serialize>(rows: &[T], format: Format, out: impl Write) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row).map_err(std::io::Error::other)?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DecomposeRow {
    pub t: u32,
    pub neg: String,
    pub tope: String,
    pub x: String,
    pub ell: usize,
    pub q: String,
}

#[derive(Debug, Serialize)]
pub struct TopeRow {
    pub t: u32,
    pub ell: u32,
    pub count: String,
}

#[derive(Debug, Serialize)]
pub struct TopeSplitRow {
    pub t: u32,
    pub j: u32,
    pub ell: u32,
    pub count: String,
}

#[derive(Debug, Serialize)]
pub struct PairRow {
    pub t: u32,
    pub j_prime: u32,
    pub j_double_prime: u32,
    pub ell_prime: u32,
    pub ell_double_prime: u32,
    pub ell: u32,
    pub case: String,
    pub count: String,
}

#[derive(Debug, Serialize)]
pub struct SmirnovRow {
    pub start: &'static str,
    pub end: &'static str,
    pub theta: u32,
    pub alpha: u32,
    pub beta: u32,
    pub method: &'static str,
    pub count: String,
}

#[derive(Debug, Serialize)]
pub struct CompositionRow {
    pub m: i64,
    pub n: i64,
    pub count: String,
}

#[derive(Debug, Serialize)]
pub struct CheckRow {
    pub suite: &'static str,
    pub check: &'static str,
    pub passed: u64,
    pub failed: u64,
}

/// JSON form of a verification check, with its counterexamples inline.
#[derive(Debug, Serialize)]
pub struct CheckDetail {
    pub suite: &'static str,
    pub check: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<String>,
}
