//! Sweep files: one `key = lo..hi` (or `key = v`, or `key = other`) per line,
//! `#` starts a comment.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use stackycovers_core::oracle::SweepBox;
use stackycovers_core::simple_cyclic::SimpleCyclicParams;
use stackycovers_core::triple_cover::TripleCoverParams;

use crate::error::CliError;

const KEYS: [&str; 6] = ["n", "r", "d", "rd", "d1", "d2"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepValue {
    Range(u64, u64),
    /// Tied to another key, e.g. `d2 = d1`.
    Same(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSpec {
    entries: BTreeMap<String, SweepValue>,
}

pub enum Tuples {
    Simple(Vec<SimpleCyclicParams>),
    Triple(Vec<TripleCoverParams>),
}

fn parse_u64(s: &str, line: usize) -> Result<u64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("sweep line {line}: {s:?} is not a nonnegative integer")))
}

fn width(lo: u64, hi: u64) -> u128 {
    if hi < lo {
        0
    } else {
        (hi - lo) as u128 + 1
    }
}

impl SweepSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("sweep line {line}: expected `key = lo..hi`")))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(CliError::Usage(format!("sweep line {line}: unknown parameter {key:?}")));
            }
            let value = value.trim();
            let parsed = if let Some((lo, hi)) = value.split_once("..") {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                SweepValue::Range(parse_u64(lo, line)?, parse_u64(hi, line)?)
            } else if KEYS.contains(&value) {
                SweepValue::Same(value.to_string())
            } else {
                let v = parse_u64(value, line)?;
                SweepValue::Range(v, v)
            };
            if entries.insert(key.to_string(), parsed).is_some() {
                return Err(CliError::Usage(format!("sweep line {line}: {key} given twice")));
            }
        }
        for (k, v) in &entries {
            if let SweepValue::Same(other) = v {
                if !matches!(entries.get(other), Some(SweepValue::Range(..))) {
                    return Err(CliError::Usage(format!("{k} is tied to {other}, which has no range")));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn range(&self, key: &str) -> Option<(u64, u64)> {
        match self.entries.get(key)? {
            SweepValue::Range(lo, hi) => Some((*lo, *hi)),
            SweepValue::Same(other) => self.range(other),
        }
    }

    fn is_triple(&self) -> Result<bool, CliError> {
        let triple = self.entries.contains_key("d1") || self.entries.contains_key("d2");
        let simple = ["n", "r", "d", "rd"].iter().any(|k| self.entries.contains_key(*k));
        if triple && simple {
            return Err(CliError::Usage("a sweep mixes triple-cover and simple-cover parameters".into()));
        }
        Ok(triple)
    }

    fn require(&self, key: &str) -> Result<(u64, u64), CliError> {
        self.range(key)
            .ok_or_else(|| CliError::Usage(format!("sweep needs a range for {key}")))
    }

    /// Tuple count before filtering, used against the cap.
    pub fn tuple_count(&self) -> Result<u128, CliError> {
        if self.is_empty() {
            return Ok(0);
        }
        if self.is_triple()? {
            let (a, b) = self.require("d1")?;
            return Ok(match self.entries.get("d2") {
                Some(SweepValue::Same(_)) => width(a, b),
                _ => {
                    let (c, e) = self.require("d2")?;
                    width(a, b).saturating_mul(width(c, e))
                }
            });
        }
        let (nlo, nhi) = self.require("n")?;
        if let Some((lo, hi)) = self.range("rd") {
            // every divisor r of rd gives one tuple; rd bounds the count
            let per_n: u128 = (lo.max(1)..=hi).map(|rd| rd as u128).sum::<u128>().min(u128::MAX);
            return Ok(width(nlo, nhi).saturating_mul(per_n));
        }
        let (rlo, rhi) = self.require("r")?;
        let (dlo, dhi) = self.require("d")?;
        Ok(width(nlo, nhi)
            .saturating_mul(width(rlo, rhi))
            .saturating_mul(width(dlo, dhi)))
    }

    /// Valid tuples in lexicographic parameter order.
    pub fn tuples(&self) -> Result<Tuples, CliError> {
        if self.is_empty() {
            return Ok(Tuples::Simple(Vec::new()));
        }
        if self.is_triple()? {
            let (lo1, hi1) = self.require("d1")?;
            let tied = matches!(self.entries.get("d2"), Some(SweepValue::Same(k)) if k == "d1");
            let mut out = Vec::new();
            for d1 in lo1..=hi1 {
                let d2s = if tied {
                    d1..=d1
                } else {
                    let (lo2, hi2) = self.require("d2")?;
                    lo2..=hi2
                };
                for d2 in d2s {
                    if let Ok(p) = TripleCoverParams::new(d1, d2) {
                        out.push(p);
                    }
                }
            }
            out.sort_by_key(|p| (p.d1(), p.d2()));
            return Ok(Tuples::Triple(out));
        }
        let (nlo, nhi) = self.require("n")?;
        let mut triples: Vec<(u32, u64, u64)> = Vec::new();
        let n_range = || (nlo.min(u32::MAX as u64) as u32)..=(nhi.min(u32::MAX as u64) as u32);
        if let Some((lo, hi)) = self.range("rd") {
            let r_range = self.range("r");
            let d_range = self.range("d");
            let within = |v: u64, r: Option<(u64, u64)>| r.map_or(true, |(a, b)| (a..=b).contains(&v));
            for n in n_range() {
                for rd in lo.max(1)..=hi {
                    for r in (1..=rd).filter(|r| rd % r == 0) {
                        let d = rd / r;
                        if within(r, r_range) && within(d, d_range) {
                            triples.push((n, r, d));
                        }
                    }
                }
            }
        } else {
            let (rlo, rhi) = self.require("r")?;
            let (dlo, dhi) = self.require("d")?;
            for n in n_range() {
                for r in rlo..=rhi {
                    for d in dlo..=dhi {
                        triples.push((n, r, d));
                    }
                }
            }
        }
        triples.sort_unstable();
        triples.dedup();
        let params = triples
            .into_iter()
            .filter_map(|(n, r, d)| SimpleCyclicParams::new(n, r, d).ok())
            .collect();
        Ok(Tuples::Simple(params))
    }

    /// A verification box: given keys override the default box.
    pub fn to_box(&self, cap: u128) -> Result<SweepBox, CliError> {
        if self.entries.contains_key("rd") {
            return Err(CliError::Usage("verify sweeps take n, r, d, d1, d2 ranges, not rd".into()));
        }
        let mut b = SweepBox::default().with_cap(cap);
        let pick = |key: &str, default: RangeInclusive<u64>| -> RangeInclusive<u64> {
            self.range(key).map_or(default, |(lo, hi)| lo..=hi)
        };
        let n = pick("n", *b.n.start() as u64..=*b.n.end() as u64);
        b.n = (*n.start() as u32)..=(*n.end() as u32);
        b.r = pick("r", b.r.clone());
        b.d = pick("d", b.d.clone());
        b.d1 = pick("d1", b.d1.clone());
        b.d2 = pick("d2", b.d2.clone());
        Ok(b)
    }
}
