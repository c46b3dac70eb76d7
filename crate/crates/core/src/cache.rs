//! Newline-delimited JSON persistence for [`MemoStore`].
//!
//! One record per line:
//!
//! ```text
//! {"h":0,"g":0,"alpha":[2,1],"num":"4","den":"1"}
//! ```
//!
//! `alpha` must be non-increasing, the fraction reduced with a positive
//! denominator, and both integers written in canonical decimal. Export sorts
//! records by key, so export → import → export is byte-identical.

use std::io::{BufRead, Write};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::engine::{HurwitzKey, MemoStore};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{is_reduced, Rational};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CacheRecord {
    pub h: u32,
    pub g: u32,
    pub alpha: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl CacheRecord {
    pub fn new(key: &HurwitzKey, value: &Rational) -> Self {
        CacheRecord {
            h: key.base_genus,
            g: key.cover_genus,
            alpha: key.alpha.parts().to_vec(),
            num: value.numer().to_string(),
            den: value.denom().to_string(),
        }
    }

    /// Checks canonical form and returns the key and value.
    pub fn validate(&self) -> std::result::Result<(HurwitzKey, Rational), String> {
        if self.alpha.is_empty() {
            return Err("alpha is empty".into());
        }
        if self.alpha.contains(&0) {
            return Err("alpha has a zero part".into());
        }
        if self.alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("alpha {:?} is not non-increasing", self.alpha));
        }
        let num = parse_canonical(&self.num).ok_or_else(|| format!("bad numerator {:?}", self.num))?;
        let den = parse_canonical(&self.den).ok_or_else(|| format!("bad denominator {:?}", self.den))?;
        if !is_reduced(&num, &den) {
            return Err(format!("{}/{} is not a reduced fraction with positive denominator", self.num, self.den));
        }
        let alpha = Partition::new(self.alpha.clone()).map_err(|e| e.to_string())?;
        Ok((HurwitzKey::new(self.h, self.g, alpha), Rational::new_raw(num, den)))
    }
}

fn parse_canonical(s: &str) -> Option<BigInt> {
    let n: BigInt = s.parse().ok()?;
    (n.to_string() == s).then_some(n)
}

/// Writes every memo entry, sorted by key. Returns the record count.
pub fn export_memo<W: Write>(memo: &MemoStore, mut out: W) -> Result<usize> {
    let entries = memo.entries();
    for (key, value) in &entries {
        let line = serde_json::to_string(&CacheRecord::new(key, value)).expect("record serializes");
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(entries.len())
}

/// Parses and validates every line before touching `memo`, then inserts.
/// Blank lines are skipped. Line numbers in errors are one-based.
pub fn import_memo<R: BufRead>(memo: &MemoStore, input: R) -> Result<usize> {
    let mut parsed = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let cache_err = |reason: String| Error::Cache { line: i + 1, reason };
        let rec: CacheRecord = serde_json::from_str(&line).map_err(|e| cache_err(e.to_string()))?;
        let (key, value) = rec.validate().map_err(cache_err)?;
        parsed.push((i + 1, key, value));
    }
    let n = parsed.len();
    for (line, key, value) in parsed {
        memo.insert(key, value)
            .map_err(|(k, old)| Error::Cache { line, reason: format!("conflicts with stored value {old} for {k}") })?;
    }
    Ok(n)
}
