//! Integer partitions used as ramification profiles.
//!
//! A [`Partition`] is stored canonically: parts sorted non-increasing, so two
//! partitions built from rearrangements of the same multiset compare equal.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::factorial;

/// A partition of a positive integer `k`, parts sorted non-increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
    degree: u32,
}

impl Partition {
    /// Canonicalizes `values` into a partition.
    ///
    /// Fails on an empty list or a zero entry.
    pub fn new(mut values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidPartition("empty list of parts".into()));
        }
        if values.contains(&0) {
            return Err(Error::InvalidPartition(format!("parts must be positive, got {values:?}")));
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        let degree = values.iter().sum();
        Ok(Partition { parts: values, degree })
    }

    /// Builds a partition from parts already known to be positive.
    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty() && !parts.contains(&0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let degree = parts.iter().sum();
        Partition { parts, degree }
    }

    /// The one-part partition `(1)` of degree one.
    pub fn one() -> Self {
        Partition { parts: vec![1], degree: 1 }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned, `k`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The number of parts, `m`.
    pub fn num_parts(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == value).count() as u32
    }

    /// Distinct part values with their multiplicities, ascending by value.
    pub fn value_counts(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation with this cycle type,
    /// `prod_v v^{m_v} m_v!`.
    pub fn centralizer_order(&self) -> BigUint {
        self.value_counts().into_iter().fold(BigUint::one(), |acc, (v, c)| acc * BigUint::from(v).pow(c) * factorial(c))
    }

    /// Number of permutations of `{1..k}` whose cycle type is this partition.
    pub fn conjugacy_class_size(&self) -> BigUint {
        factorial(self.degree) / self.centralizer_order()
    }

    /// The `i`-th elementary symmetric polynomial evaluated at the parts.
    pub fn elementary_symmetric(&self, i: usize) -> BigUint {
        // e[j] holds e_j of the prefix processed so far.
        let mut e = vec![BigUint::from(0u32); i + 1];
        e[0] = BigUint::one();
        for &p in &self.parts {
            for j in (1..=i).rev() {
                let add = &e[j - 1] * p;
                e[j] += add;
            }
        }
        e.swap_remove(i)
    }

    /// The parts with one occurrence of `value` removed, or `None` when
    /// `value` is absent. May be empty.
    pub fn without(&self, value: u32) -> Option<Vec<u32>> {
        let idx = self.parts.iter().position(|&p| p == value)?;
        let mut rest = self.parts.clone();
        rest.remove(idx);
        Some(rest)
    }

    /// Parts in ascending order, the way they are usually written in tables.
    pub fn ascending_label(&self) -> String {
        let inner: Vec<String> = self.parts.iter().rev().map(u32::to_string).collect();
        format!("({})", inner.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated positive integers in any order, e.g. `"1,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u32>().map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(values)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Partition::new(values)
    }
}

/// All partitions of `k`, in reverse lexicographic order of their
/// non-increasing part lists: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(k: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(current.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(k, k, &mut Vec::new(), &mut out);
    }
    out
}
