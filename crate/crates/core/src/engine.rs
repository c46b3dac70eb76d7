//! Memoized evaluation of the cut-and-join recursion.
//!
//! A value `mu(h, g, alpha)` counts connected almost simple coverings of a
//! genus-`h` surface by a genus-`g` surface with profile `alpha` over the
//! special point, weighted by automorphisms. Riemann–Hurwitz forces exactly
//! `r = k + m - 2kh - 2 + 2g` simple branch points. The recursion removes one
//! of them, so every child key has branch count `r - 1` (split terms share
//! `r - 1` between their two components), and evaluation terminates at
//! keys with `r = 0`.
//!
//! Those keys are base cases. For `h = 0` the only one is the identity cover
//! `(0, 0, (1))`. For `h > 0`, degree one gives the identity cover of the
//! base, and everything else comes from a [`BaseCaseProvider`].

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::moves::{cut_moves, join_moves, split_classes};
use crate::partition::Partition;
use crate::rational::{binomial, Rational};

/// Number of simple branch points forced by Riemann–Hurwitz. Negative
/// values mean the key admits no covering.
pub fn simple_branch_count(h: u32, g: u32, k: u32, m: u32) -> i64 {
    let (h, g, k, m) = (i64::from(h), i64::from(g), i64::from(k), i64::from(m));
    k + m - 2 * k * h - 2 + 2 * g
}

/// `(h, g, alpha)`: base genus, cover genus and ramification profile.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HurwitzKey {
    pub base_genus: u32,
    pub cover_genus: u32,
    pub alpha: Partition,
}

impl HurwitzKey {
    pub fn new(base_genus: u32, cover_genus: u32, alpha: Partition) -> Self {
        HurwitzKey { base_genus, cover_genus, alpha }
    }

    pub fn degree(&self) -> u32 {
        self.alpha.degree()
    }

    pub fn num_parts(&self) -> u32 {
        self.alpha.num_parts()
    }

    pub fn branch_count(&self) -> i64 {
        simple_branch_count(self.base_genus, self.cover_genus, self.degree(), self.num_parts())
    }
}

impl fmt::Display for HurwitzKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(h={}, g={}, alpha={})", self.base_genus, self.cover_genus, self.alpha)
    }
}

/// Supplies values for keys with no simple branch points that the engine
/// cannot evaluate itself (base genus at least one, degree at least two).
pub trait BaseCaseProvider: Send + Sync {
    /// `None` means the value is unavailable.
    fn base_value(&self, key: &HurwitzKey) -> Option<Rational>;

    fn describe(&self) -> String;
}

/// Knows only the identity covers; every other base case is unavailable.
#[derive(Clone, Copy, Debug, Default)]
pub struct StrictProvider;

impl BaseCaseProvider for StrictProvider {
    fn base_value(&self, key: &HurwitzKey) -> Option<Rational> {
        known_base_value(key)
    }

    fn describe(&self) -> String {
        "strict".into()
    }
}

/// Base values that hold for every base genus: a degree-one cover is the
/// identity, present exactly when `g = h` (so `r = 0`).
pub fn known_base_value(key: &HurwitzKey) -> Option<Rational> {
    if key.degree() != 1 {
        return None;
    }
    Some(if key.cover_genus == key.base_genus { Rational::one() } else { Rational::zero() })
}

/// Shared memo: insert-if-absent map from keys to values with counters.
#[derive(Default, Debug)]
pub struct MemoStore {
    map: DashMap<HurwitzKey, Rational>,
    expansions: AtomicU64,
    hits: AtomicU64,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &HurwitzKey) -> Option<Rational> {
        self.map.get(key).map(|v| v.value().clone())
    }

    /// Inserts `value` unless `key` is already present. Returns the stored
    /// value. A conflicting existing value is an error.
    pub fn insert(&self, key: HurwitzKey, value: Rational) -> Result<Rational, (HurwitzKey, Rational)> {
        let entry = self.map.entry(key.clone()).or_insert_with(|| value.clone());
        if *entry.value() != value {
            return Err((key, entry.value().clone()));
        }
        Ok(value)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// All entries, sorted by key.
    pub fn entries(&self) -> Vec<(HurwitzKey, Rational)> {
        let mut v: Vec<_> = self.map.iter().map(|e| (e.key().clone(), e.value().clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// Number of keys evaluated by applying the recursion (not served from
    /// the memo and not a base case).
    pub fn expansions(&self) -> u64 {
        self.expansions.load(Ordering::Relaxed)
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn reset_counters(&self) {
        self.expansions.store(0, Ordering::Relaxed);
        self.hits.store(0, Ordering::Relaxed);
    }
}

/// A summand `weight * mu(child)` of a linear term.
#[derive(Clone, Debug)]
pub struct LinearTerm {
    pub child: HurwitzKey,
    pub weight: Rational,
}

/// A summand `binomial * weight * mu(left) * mu(right)` of the split term.
#[derive(Clone, Debug)]
pub struct SplitTerm {
    pub left: HurwitzKey,
    pub right: HurwitzKey,
    pub binomial: BigInt,
    pub weight: Rational,
}

/// One step of the recursion: every child a key with `r >= 1` depends on.
#[derive(Clone, Debug, Default)]
pub struct Expansion {
    pub joins: Vec<LinearTerm>,
    pub cuts: Vec<LinearTerm>,
    pub splits: Vec<SplitTerm>,
}

/// Children of `key` under one application of the recursion.
///
/// Split terms whose components would have a negative branch count are
/// omitted; they contribute zero.
pub fn expand(key: &HurwitzKey) -> Expansion {
    let h = key.base_genus;
    let g = key.cover_genus;
    let r = key.branch_count();
    let alpha = &key.alpha;
    let mut out = Expansion::default();

    for j in join_moves(alpha) {
        out.joins.push(LinearTerm { child: HurwitzKey::new(h, g, j.theta), weight: j.weight });
    }
    let cuts = cut_moves(alpha);
    if g > 0 {
        for c in &cuts {
            out.cuts.push(LinearTerm { child: HurwitzKey::new(h, g - 1, c.omega.clone()), weight: c.weight.clone() });
        }
    }
    for c in &cuts {
        let classes = split_classes(alpha, c.cut_value, c.rho).expect("cut move is valid");
        for s in classes {
            for g1 in 0..=g {
                let left = HurwitzKey::new(h, g1, s.part1.clone());
                let right = HurwitzKey::new(h, g - g1, s.part2.clone());
                let (r1, r2) = (left.branch_count(), right.branch_count());
                if r1 < 0 || r2 < 0 {
                    continue;
                }
                debug_assert_eq!(r1 + r2, r - 1);
                out.splits.push(SplitTerm {
                    left,
                    right,
                    binomial: BigInt::from(binomial(r - 1, r1)),
                    weight: s.weight.clone(),
                });
            }
        }
    }
    out
}

/// `mu(key)`, memoized in `memo`, with base cases from `bases`.
pub fn hurwitz(key: &HurwitzKey, memo: &MemoStore, bases: &dyn BaseCaseProvider) -> Result<Rational> {
    let r = key.branch_count();
    if r < 0 {
        return Ok(Rational::zero());
    }
    if let Some(v) = memo.get(key) {
        memo.hits.fetch_add(1, Ordering::Relaxed);
        return Ok(v);
    }
    let value = if r == 0 {
        let v = if key.base_genus == 0 {
            // For h = 0, r = 0 forces k = m = 1 and g = 0.
            known_base_value(key)
        } else {
            known_base_value(key).or_else(|| bases.base_value(key))
        };
        v.ok_or_else(|| Error::BaseCaseUnavailable(key.clone()))?
    } else {
        memo.expansions.fetch_add(1, Ordering::Relaxed);
        evaluate(&expand(key), memo, bases)?
    };
    match memo.insert(key.clone(), value) {
        Ok(v) => Ok(v),
        Err((k, old)) => panic!("memo conflict at {k}: {old} already stored"),
    }
}

fn evaluate(e: &Expansion, memo: &MemoStore, bases: &dyn BaseCaseProvider) -> Result<Rational> {
    let mut total = Rational::zero();
    for t in e.joins.iter().chain(&e.cuts) {
        let v = hurwitz(&t.child, memo, bases)?;
        if !v.is_zero() {
            total += v * &t.weight;
        }
    }
    for t in &e.splits {
        let a = hurwitz(&t.left, memo, bases)?;
        if a.is_zero() {
            continue;
        }
        let b = hurwitz(&t.right, memo, bases)?;
        total += a * b * &t.weight * Rational::from_integer(t.binomial.clone());
    }
    Ok(total)
}

/// Evaluates `keys` against a shared memo. Results are in input order and
/// identical to sequential evaluation; the first error aborts the batch.
pub fn hurwitz_batch(
    keys: &[HurwitzKey],
    memo: &MemoStore,
    bases: &dyn BaseCaseProvider,
    parallelism: usize,
) -> Result<Vec<Rational>> {
    let workers = parallelism.max(1).min(keys.len().max(1));
    if workers == 1 {
        return keys.iter().map(|k| hurwitz(k, memo, bases)).collect();
    }

    let next = AtomicUsize::new(0);
    let failed = AtomicBool::new(false);
    let mut slots: Vec<Option<Result<Rational>>> = (0..keys.len()).map(|_| None).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    while !failed.load(Ordering::Relaxed) {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= keys.len() {
                            break;
                        }
                        let res = hurwitz(&keys[i], memo, bases);
                        if res.is_err() {
                            failed.store(true, Ordering::Relaxed);
                        }
                        done.push((i, res));
                    }
                    done
                })
            })
            .collect();
        for h in handles {
            for (i, res) in h.join().expect("worker panicked") {
                slots[i] = Some(res);
            }
        }
    });

    let mut out = Vec::with_capacity(keys.len());
    for slot in slots {
        match slot {
            Some(res) => out.push(res?),
            None => unreachable!("batch aborted without a recorded error"),
        }
    }
    Ok(out)
}

/// A memo paired with a base-case provider.
pub struct Engine {
    memo: MemoStore,
    bases: Box<dyn BaseCaseProvider>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Box::new(StrictProvider))
    }
}

impl Engine {
    pub fn new(bases: Box<dyn BaseCaseProvider>) -> Self {
        Engine { memo: MemoStore::new(), bases }
    }

    /// An engine for base genus zero, where no provider is ever consulted.
    pub fn genus_zero() -> Self {
        Self::default()
    }

    pub fn memo(&self) -> &MemoStore {
        &self.memo
    }

    pub fn provider(&self) -> &dyn BaseCaseProvider {
        self.bases.as_ref()
    }

    pub fn value(&self, key: &HurwitzKey) -> Result<Rational> {
        hurwitz(key, &self.memo, self.bases.as_ref())
    }

    /// Convenience wrapper over [`Engine::value`].
    pub fn mu(&self, h: u32, g: u32, alpha: &Partition) -> Result<Rational> {
        self.value(&HurwitzKey::new(h, g, alpha.clone()))
    }

    pub fn batch(&self, keys: &[HurwitzKey], parallelism: usize) -> Result<Vec<Rational>> {
        hurwitz_batch(keys, &self.memo, self.bases.as_ref(), parallelism)
    }
}
