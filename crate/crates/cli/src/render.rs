//! Text, JSON and CSV rendering of verification reports and coefficient tables.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use g2clasp::report::SCHEMA_VERSION;
use g2clasp::{CheckReport, CoeffKey, Fundamental, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
struct CsvCheck<'a> {
    kind: &'a str,
    id: &'a str,
    mode: String,
    status: String,
    fund: Option<u8>,
    mu: Option<&'a str>,
    word: Option<&'a str>,
    sign: Option<i8>,
    witness: Option<&'a str>,
    probes: String,
    elapsed_ms: Option<u64>,
}

fn csv_text<T: Serialize>(rows: impl IntoIterator<Item = T>) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn probes_cell(r: &CheckReport) -> String {
    r.probes.iter().map(|p| format!("{}:{}:{}", p.q, p.a, p.b)).collect::<Vec<_>>().join(" ")
}

pub fn verify(report: &VerifyReport, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Csv => {
            let rows = report.results.iter().map(|r| CsvCheck {
                kind: &r.kind,
                id: &r.id,
                mode: r.mode.to_string(),
                status: r.status.to_string(),
                fund: r.fund,
                mu: r.mu.as_deref(),
                word: r.word.as_deref(),
                sign: r.sign,
                witness: r.witness.as_deref(),
                probes: probes_cell(r),
                elapsed_ms: r.elapsed_ms,
            });
            if report.results.is_empty() {
                return Ok("kind,id,mode,status,fund,mu,word,sign,witness,probes,elapsed_ms\n".into());
            }
            csv_text(rows)
        }
        Format::Text => {
            let mut s = String::new();
            for r in &report.results {
                write!(s, "{} {:<10} {}", r.status, r.kind, r.id)?;
                if let Some(sign) = r.sign {
                    write!(s, " sign={sign:+}")?;
                }
                if let Some(ms) = r.elapsed_ms {
                    write!(s, " {ms}ms")?;
                }
                if let Some(w) = &r.witness {
                    write!(s, "  [{w}]")?;
                }
                s.push('\n');
            }
            let sum = &report.summary;
            write!(s, "{}/{} passed, {} failed, mode {}", sum.passed, sum.total, sum.failed, sum.mode)?;
            if let Some(seed) = sum.seed {
                write!(s, ", seed {seed}")?;
            }
            s.push('\n');
            Ok(s)
        }
    }
}

/// One coefficient at a fixed weight; `kind` is `K`, `R`, `R00` or `det`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub kind: String,
    pub fund: u8,
    pub m: i64,
    pub n: i64,
    pub i: Option<u8>,
    pub j: Option<u8>,
    pub value: String,
}

impl TableRow {
    pub fn coefficient(key: CoeffKey, value: String) -> Self {
        let kind = match (key.fund, key.idx) {
            (Fundamental::F1, _) => "K",
            (Fundamental::F2, None) => "R",
            (Fundamental::F2, Some(_)) => "R00",
        };
        TableRow {
            kind: kind.into(),
            fund: key.fund.index(),
            m: key.mu.a,
            n: key.mu.b,
            i: key.idx.map(|x| x.0),
            j: key.idx.map(|x| x.1),
            value,
        }
    }

    pub fn det(value: String) -> Self {
        TableRow { kind: "det".into(), fund: 2, m: 0, n: 0, i: None, j: None, value }
    }
}

#[derive(Serialize)]
struct TableDoc<'a> {
    schema_version: u32,
    a: i64,
    b: i64,
    rows: &'a [TableRow],
}

pub fn table(a: i64, b: i64, rows: &[TableRow], format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&TableDoc { schema_version: SCHEMA_VERSION, a, b, rows })? + "\n"),
        Format::Csv => csv_text(rows),
        Format::Text => {
            let mut s = String::new();
            for r in rows {
                let idx = r.i.zip(r.j).map(|(i, j)| format!(" ({i},{j})")).unwrap_or_default();
                writeln!(s, "{:<4} F{} ({},{}){} = {}", r.kind, r.fund, r.m, r.n, idx, r.value)?;
            }
            Ok(s)
        }
    }
}
