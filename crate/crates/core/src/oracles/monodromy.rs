//! Brute-force Hurwitz numbers from monodromy tuples.
//!
//! A connected almost simple covering of degree `k` of a genus-`h` surface is
//! encoded by a tuple `(a_1, b_1, .., a_h, b_h, tau_1, .., tau_r, sigma)` of
//! permutations of `{0..k}` with
//!
//! * each `tau_j` a transposition and `sigma` of cycle type `alpha`,
//! * `[a_1,b_1] ... [a_h,b_h] tau_1 ... tau_r sigma = 1`, composed left to
//!   right as in [`super::perm`],
//! * the generated subgroup transitive on `{0..k}`.
//!
//! The Hurwitz number is the number `N` of such tuples divided by `k!`, which
//! weights each covering by the inverse order of its automorphism group.
//!
//! Since `sigma` is fixed by the rest of the tuple, the search enumerates the
//! handle pairs and then runs a depth-first search over transpositions with a
//! running product, testing the cycle type at the leaves. Component labels of
//! the moved points prune branches that can no longer become transitive.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::engine::{known_base_value, simple_branch_count, BaseCaseProvider, HurwitzKey};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{factorial, Rational};

use super::perm::{cycle_lengths, Perm};

/// Hard ceiling on the degree the enumerator accepts, independent of limits.
pub const MAX_DEGREE: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonodromyLimits {
    /// Search nodes (handle tuples plus transposition prefixes) allowed
    /// before giving up.
    pub node_limit: u64,
    pub max_degree: u32,
}

impl Default for MonodromyLimits {
    fn default() -> Self {
        MonodromyLimits { node_limit: 100_000_000, max_degree: 6 }
    }
}

const W: usize = MAX_DEGREE as usize;

#[derive(Clone, Copy)]
struct State {
    prod: [u8; W],
    inv: [u8; W],
    comp: [u8; W],
    components: u32,
}

impl State {
    fn from_perm(p: &Perm, comp: [u8; W], components: u32) -> Self {
        let mut prod = [0u8; W];
        let mut inv = [0u8; W];
        for (x, &y) in p.images().iter().enumerate() {
            prod[x] = y;
            inv[y as usize] = x as u8;
        }
        State { prod, inv, comp, components }
    }

    /// Right-multiplies the running product by the transposition `(a b)`.
    fn apply(&mut self, a: u8, b: u8, k: usize) {
        let (x, y) = (self.inv[a as usize], self.inv[b as usize]);
        self.prod[x as usize] = b;
        self.prod[y as usize] = a;
        self.inv[a as usize] = y;
        self.inv[b as usize] = x;
        let (ca, cb) = (self.comp[a as usize], self.comp[b as usize]);
        if ca != cb {
            for c in self.comp[..k].iter_mut() {
                if *c == cb {
                    *c = ca;
                }
            }
            self.components -= 1;
        }
    }
}

enum Target {
    CycleType(Vec<u32>),
    Exact([u8; W]),
}

struct Search {
    k: usize,
    transpositions: Vec<(u8, u8)>,
    target: Target,
    node_limit: u64,
    visited: u64,
    found: u64,
}

impl Search {
    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.node_limit {
            return Err(Error::BoundExceeded { visited: self.visited, limit: self.node_limit });
        }
        Ok(())
    }

    fn leaf(&mut self, s: &State) {
        if s.components != 1 {
            return;
        }
        let hit = match &self.target {
            Target::CycleType(parts) => {
                let mut lens = cycle_lengths(&s.prod[..self.k]);
                lens.sort_unstable_by(|a, b| b.cmp(a));
                lens == *parts
            }
            Target::Exact(p) => p[..self.k] == s.prod[..self.k],
        };
        if hit {
            self.found += 1;
        }
    }

    fn dfs(&mut self, s: &mut State, remaining: u32) -> Result<()> {
        self.tick()?;
        if remaining == 0 {
            self.leaf(s);
            return Ok(());
        }
        if s.components - 1 > remaining {
            return Ok(());
        }
        for i in 0..self.transpositions.len() {
            let (a, b) = self.transpositions[i];
            let saved = *s;
            s.apply(a, b, self.k);
            self.dfs(s, remaining - 1)?;
            *s = saved;
        }
        Ok(())
    }
}

fn handle_tuples(
    k: usize,
    h: u32,
    search: &mut Search,
    mut visit: impl FnMut(&mut Search, &Perm, [u8; W], u32) -> Result<()>,
) -> Result<()> {
    let perms = Perm::all(k);
    let slots = 2 * h as usize;
    let mut idx = vec![0usize; slots];
    loop {
        search.tick()?;
        let mut prod = Perm::identity(k);
        let mut label: Vec<usize> = (0..k).collect();
        for pair in idx.chunks(2) {
            let (a, b) = (&perms[pair[0]], &perms[pair[1]]);
            prod = prod.then(a).then(b).then(&a.inverse()).then(&b.inverse());
            for g in [a, b] {
                for x in 0..k {
                    let (lx, ly) = (label[x], label[g.image(x)]);
                    if lx != ly {
                        for l in label.iter_mut() {
                            if *l == ly {
                                *l = lx;
                            }
                        }
                    }
                }
            }
        }
        let mut comp = [0u8; W];
        let mut distinct = Vec::new();
        for x in 0..k {
            comp[x] = label[x] as u8;
            if !distinct.contains(&label[x]) {
                distinct.push(label[x]);
            }
        }
        visit(search, &prod, comp, distinct.len() as u32)?;

        let mut i = 0;
        loop {
            if i == slots {
                return Ok(());
            }
            idx[i] += 1;
            if idx[i] < perms.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn count_tuples(h: u32, k: u32, r: u32, target: Target, limits: &MonodromyLimits) -> Result<u64> {
    if k > limits.max_degree.min(MAX_DEGREE) {
        return Err(Error::DegreeTooLarge { degree: k, ceiling: limits.max_degree.min(MAX_DEGREE) });
    }
    let k = k as usize;
    let mut transpositions = Vec::new();
    for a in 0..k as u8 {
        for b in a + 1..k as u8 {
            transpositions.push((a, b));
        }
    }
    let mut search = Search { k, transpositions, target, node_limit: limits.node_limit, visited: 0, found: 0 };
    handle_tuples(k, h, &mut search, |search, prod, comp, components| {
        let mut state = State::from_perm(prod, comp, components);
        search.dfs(&mut state, r)
    })?;
    Ok(search.found)
}

fn over_factorial(n: u64, k: u32) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(factorial(k)))
}

/// `N / k!` for the tuples described in the module docs. Keys with a
/// negative branch count have no tuples and give zero.
pub fn monodromy_count(h: u32, g: u32, alpha: &Partition, limits: &MonodromyLimits) -> Result<Rational> {
    let r = simple_branch_count(h, g, alpha.degree(), alpha.num_parts());
    if r < 0 {
        return Ok(Rational::zero());
    }
    let n = count_tuples(h, alpha.degree(), r as u32, Target::CycleType(alpha.parts().to_vec()), limits)?;
    Ok(over_factorial(n, alpha.degree()))
}

/// Same count with `sigma` pinned to [`Perm::standard_of_type`], multiplied
/// back by the class size. Agrees with [`monodromy_count`] because the
/// count is invariant under simultaneous conjugation.
pub fn monodromy_count_fixed_sigma(h: u32, g: u32, alpha: &Partition, limits: &MonodromyLimits) -> Result<Rational> {
    let r = simple_branch_count(h, g, alpha.degree(), alpha.num_parts());
    if r < 0 {
        return Ok(Rational::zero());
    }
    // The running product must equal sigma^-1.
    let want = Perm::standard_of_type(alpha).inverse();
    let mut exact = [0u8; W];
    exact[..want.degree()].copy_from_slice(want.images());
    let n = count_tuples(h, alpha.degree(), r as u32, Target::Exact(exact), limits)?;
    let class = BigInt::from(alpha.conjugacy_class_size());
    Ok(over_factorial(n, alpha.degree()) * Rational::from_integer(class))
}

/// Answers base cases by enumeration, within `limits`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MonodromyProvider {
    pub limits: MonodromyLimits,
}

impl MonodromyProvider {
    pub fn new(limits: MonodromyLimits) -> Self {
        MonodromyProvider { limits }
    }
}

impl BaseCaseProvider for MonodromyProvider {
    fn base_value(&self, key: &HurwitzKey) -> Option<Rational> {
        known_base_value(key)
            .or_else(|| monodromy_count(key.base_genus, key.cover_genus, &key.alpha, &self.limits).ok())
    }

    fn describe(&self) -> String {
        format!("monodromy (degree ceiling {}, node limit {})", self.limits.max_degree, self.limits.node_limit)
    }
}
