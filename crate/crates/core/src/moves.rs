//! The three degenerations that drive the recursion.
//!
//! Removing the simple branch point closest to the special fiber either
//! joins two parts of the ramification profile ([`JoinMove`]), cuts one part
//! in two on a connected cover of lower genus ([`CutMove`]), or cuts one part
//! while disconnecting the cover ([`SplitClass`]). Each comes with the weight
//! it contributes to the recursion.
//!
//! Enumeration runs over value classes, never over part indices: two moves
//! that differ only by which equal-valued part they touch are the same move.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{integer, Rational};

/// Merge of two parts `a <= b` into the single part `a + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinMove {
    pub theta: Partition,
    pub merged_pair: (u32, u32),
    pub weight: Rational,
}

/// Cut of a part `cut_value` into `rho` and `cut_value - rho`, with
/// `1 <= rho <= cut_value / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutMove {
    pub omega: Partition,
    pub cut_value: u32,
    pub rho: u32,
    pub weight: Rational,
}

/// One way of distributing the parts of a cut over two connected components.
///
/// `part1` always holds `rho` and `part2` holds `cut_value - rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitClass {
    pub rho: u32,
    pub part1: Partition,
    pub part2: Partition,
    pub weight: Rational,
}

fn halved_if(cond: bool, n: u64) -> Rational {
    let q = integer(n);
    if cond {
        q / integer(2)
    } else {
        q
    }
}

/// One move per distinct value pair `{a, b}` realizable at two distinct
/// indices of `alpha`. Empty when `alpha` has a single part.
pub fn join_moves(alpha: &Partition) -> Vec<JoinMove> {
    let counts = alpha.value_counts();
    let mut out = Vec::new();
    for (i, &(a, ca)) in counts.iter().enumerate() {
        for &(b, _) in &counts[i..] {
            if a == b && ca < 2 {
                continue;
            }
            let mut parts = alpha.without(a).expect("a is a part");
            let idx = parts.iter().position(|&p| p == b).expect("b is a part");
            parts.remove(idx);
            parts.push(a + b);
            let theta = Partition::from_parts_unchecked(parts);
            let sum = u64::from(a + b);
            let weight = halved_if(a == b, sum * u64::from(theta.multiplicity(a + b)));
            out.push(JoinMove { theta, merged_pair: (a, b), weight });
        }
    }
    out
}

/// One move per distinct part value `v` and `1 <= rho <= v / 2`.
pub fn cut_moves(alpha: &Partition) -> Vec<CutMove> {
    let mut out = Vec::new();
    for (v, _) in alpha.value_counts() {
        for rho in 1..=v / 2 {
            let rest = v - rho;
            let mut parts = alpha.without(v).expect("v is a part");
            parts.push(rho);
            parts.push(rest);
            let omega = Partition::from_parts_unchecked(parts);
            let base = u64::from(rho) * u64::from(rest);
            let weight = if rho == rest {
                let c = u64::from(omega.multiplicity(rho));
                halved_if(true, base * c * (c - 1))
            } else {
                let c = u64::from(omega.multiplicity(rho)) * u64::from(omega.multiplicity(rest));
                halved_if(false, base * c)
            };
            out.push(CutMove { omega, cut_value: v, rho, weight });
        }
    }
    out
}

/// All classes of distributions of `alpha` minus one `cut_value` over two
/// components, the first receiving `rho` and the second `cut_value - rho`.
///
/// Classes are distinguished by the multiset sent to the first component, so
/// there are `prod (c + 1)` of them over the multiplicities `c` of the
/// remaining values.
pub fn split_classes(alpha: &Partition, cut_value: u32, rho: u32) -> Result<Vec<SplitClass>> {
    let rest = alpha
        .without(cut_value)
        .ok_or_else(|| Error::InvalidMove(format!("{cut_value} is not a part of ({alpha})")))?;
    if rho == 0 || rho > cut_value / 2 {
        return Err(Error::InvalidMove(format!("rho = {rho} outside 1..={} for cut value {cut_value}", cut_value / 2)));
    }
    let other = cut_value - rho;

    let mut counts: Vec<(u32, u32)> = Vec::new();
    for &p in rest.iter().rev() {
        match counts.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => counts.push((p, 1)),
        }
    }

    let mut out = Vec::new();
    let mut chosen = vec![0u32; counts.len()];
    loop {
        let mut first = vec![rho];
        let mut second = vec![other];
        for (&(v, c), &t) in counts.iter().zip(&chosen) {
            first.extend(std::iter::repeat_n(v, t as usize));
            second.extend(std::iter::repeat_n(v, (c - t) as usize));
        }
        let part1 = Partition::from_parts_unchecked(first);
        let part2 = Partition::from_parts_unchecked(second);
        let n = u64::from(rho)
            * u64::from(other)
            * u64::from(part1.multiplicity(rho))
            * u64::from(part2.multiplicity(other));
        let weight = halved_if(rho == other, n);
        debug_assert!(!weight.is_zero());
        out.push(SplitClass { rho, part1, part2, weight });

        // Odometer over 0..=c for each remaining value.
        let mut i = 0;
        loop {
            if i == counts.len() {
                return Ok(out);
            }
            if chosen[i] < counts[i].1 {
                chosen[i] += 1;
                break;
            }
            chosen[i] = 0;
            i += 1;
        }
    }
}
