//! Row types for sweeps and their CSV / Markdown / JSON-lines renderings.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;
use stackycovers_core::simple_cyclic::{self as sc, CharAssumption, SimpleCyclicParams};
use stackycovers_core::triple_cover::{self as tc, TripleCoverParams};
use stackycovers_core::{ClassifyError, Result};

use crate::args::Format;
use crate::error::CliError;

pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleRow {
    pub n: u32,
    pub r: u64,
    pub d: u64,
    pub rd: u64,
    pub g: u64,
    pub family: bool,
    pub bs_trivial: bool,
    /// `yes`, `no`, `conditional`, or `n/a` below rd = 4
    pub rational: String,
    pub condition: String,
    pub rule: String,
    pub pic_order: String,
    pub no_section: String,
}

impl SimpleRow {
    pub fn build(p: &SimpleCyclicParams, ch: CharAssumption) -> Result<Self> {
        let fam = sc::tautological_family_exists(p);
        let (rational, condition, rule) = match sc::rationality_simple(p) {
            Ok(v) => (
                v.outcome.to_string(),
                v.condition.clone().unwrap_or_default(),
                v.reasons.iter().map(|r| r.rule.as_str()).collect::<Vec<_>>().join("+"),
            ),
            Err(ClassifyError::Domain(_)) => ("n/a".into(), String::new(), String::new()),
            Err(e) => return Err(e),
        };
        let no_section = sc::no_section_over_m0(p, ch, false);
        Ok(Self {
            n: p.n(),
            r: p.r(),
            d: p.d(),
            rd: p.rd(),
            g: p.g(),
            family: fam.exists,
            bs_trivial: fam.brauer_severi_zariski_trivial,
            rational,
            condition,
            rule,
            pic_order: sc::pic_stack(p)?.order.to_string(),
            no_section: no_section.outcome.to_string(),
        })
    }
}

impl Row for SimpleRow {
    const HEADER: &'static [&'static str] = &[
        "n", "r", "d", "rd", "g", "family", "bs_trivial", "rational", "condition", "rule", "pic_order",
        "no_section",
    ];

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.r.to_string(),
            self.d.to_string(),
            self.rd.to_string(),
            self.g.to_string(),
            self.family.to_string(),
            self.bs_trivial.to_string(),
            self.rational.clone(),
            self.condition.clone(),
            self.rule.clone(),
            self.pic_order.clone(),
            self.no_section.clone(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleRow {
    pub d1: u64,
    pub d2: u64,
    pub l1: u64,
    pub l2: u64,
    pub bs_trivial: bool,
    pub g13: bool,
    pub k1: String,
    pub k2: String,
    pub k1p: String,
    pub k2p: String,
    pub index: String,
    pub no_section: String,
}

impl TripleRow {
    pub fn build(p: &TripleCoverParams) -> Result<Self> {
        let w = tc::triple_hom_witness(p)?;
        Ok(Self {
            d1: p.d1(),
            d2: p.d2(),
            l1: p.l1(),
            l2: p.l2(),
            bs_trivial: tc::tautological_family_triple(p)?.brauer_severi_zariski_trivial,
            g13: tc::triple_structure_flags(p).g13_exists,
            k1: w.k1.to_string(),
            k2: w.k2.to_string(),
            k1p: w.k1p.to_string(),
            k2p: w.k2p.to_string(),
            index: tc::pic_injectivity_index(p)?.index.to_string(),
            no_section: tc::no_section_over_m0_triple(p)?.outcome.to_string(),
        })
    }
}

impl Row for TripleRow {
    const HEADER: &'static [&'static str] = &[
        "d1", "d2", "l1", "l2", "bs_trivial", "g13", "k1", "k2", "k1p", "k2p", "index", "no_section",
    ];

    fn cells(&self) -> Vec<String> {
        vec![
            self.d1.to_string(),
            self.d2.to_string(),
            self.l1.to_string(),
            self.l2.to_string(),
            self.bs_trivial.to_string(),
            self.g13.to_string(),
            self.k1.clone(),
            self.k2.clone(),
            self.k1p.clone(),
            self.k2p.clone(),
            self.index.clone(),
            self.no_section.clone(),
        ]
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn write_markdown(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    writeln!(out, "| {} |", header.join(" | "))?;
    writeln!(out, "|{}", "---|".repeat(header.len()))?;
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| md_escape(c)).collect();
        writeln!(out, "| {} |", cells.join(" | "))?;
    }
    Ok(())
}

pub fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::result::Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_rows<R: Row>(out: &mut dyn Write, rows: &[R], format: Format) -> std::result::Result<(), CliError> {
    match format {
        Format::Json => {
            for r in rows {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => write_csv(out, R::HEADER, &rows.iter().map(Row::cells).collect::<Vec<_>>())?,
        Format::Md => write_markdown(out, R::HEADER, &rows.iter().map(Row::cells).collect::<Vec<_>>())?,
    }
    Ok(())
}

/// Flattens a JSON document into `(dotted.path, scalar)` pairs.
pub fn flatten(value: &Value) -> Vec<Vec<String>> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<Vec<String>>) {
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    walk(&join(k), child, out);
                }
            }
            Value::Array(items) => {
                for (i, child) in items.iter().enumerate() {
                    walk(&join(&i.to_string()), child, out);
                }
            }
            Value::String(s) => out.push(vec![prefix.to_string(), s.clone()]),
            Value::Null => out.push(vec![prefix.to_string(), String::new()]),
            other => out.push(vec![prefix.to_string(), other.to_string()]),
        }
    }
    let mut out = Vec::new();
    walk("", value, &mut out);
    out
}
