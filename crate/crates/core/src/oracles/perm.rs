//! Permutations of `{0..k}` and monodromy words built from them.
//!
//! Composition is left to right: `p.then(q)` sends `x` to `q(p(x))`. A
//! monodromy word `[a_1,b_1] ... [a_h,b_h] tau_1 ... tau_r sigma` uses the
//! same order, with the commutator `[a, b] = a b a^-1 b^-1`.

use std::fmt;

use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(k: usize) -> Self {
        Perm((0..k as u8).collect())
    }

    /// `None` unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(images))
    }

    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(k);
        p.0.swap(a, b);
        p
    }

    /// `(0 1 .. a_1-1)(a_1 .. a_1+a_2-1)...`, a fixed permutation of cycle
    /// type `alpha`.
    pub fn standard_of_type(alpha: &Partition) -> Self {
        let mut images = Vec::with_capacity(alpha.degree() as usize);
        let mut start = 0u8;
        for &len in alpha.parts() {
            let len = len as u8;
            for j in 0..len {
                images.push(start + (j + 1) % len);
            }
            start += len;
        }
        Perm(images)
    }

    /// All `k!` permutations of `{0..k}`.
    pub fn all(k: usize) -> Vec<Perm> {
        let mut out = vec![Vec::with_capacity(k)];
        for n in 0..k as u8 {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u8>| {
                    (0..=p.len()).map(move |pos| {
                        let mut q = p.clone();
                        q.insert(pos, n);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(Perm).collect()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    pub fn is_transposition(&self) -> bool {
        self.0.iter().enumerate().filter(|&(x, &y)| x != y as usize).count() == 2
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(cycle_lengths(&self.0)).expect("nonempty permutation")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.0.len();
        let mut seen = vec![false; k];
        let mut wrote = false;
        for start in 0..k {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x] as usize;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Cycle lengths of the permutation given by `images`, unsorted.
pub(crate) fn cycle_lengths(images: &[u8]) -> Vec<u32> {
    let k = images.len();
    let mut seen = [false; 256];
    let mut out = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    /// First element of a handle pair; must be followed by [`Role::HandleB`].
    HandleA,
    HandleB,
    Transposition,
    Ramification,
}

/// A tuple of permutations describing a covering through its monodromy.
#[derive(Clone, Debug)]
pub struct PermWord {
    pub degree: usize,
    pub entries: Vec<(Role, Perm)>,
}

impl PermWord {
    pub fn new(degree: usize) -> Self {
        PermWord { degree, entries: Vec::new() }
    }

    pub fn push(&mut self, role: Role, p: Perm) -> &mut Self {
        assert_eq!(p.degree(), self.degree);
        self.entries.push((role, p));
        self
    }

    /// Left-to-right product with each handle pair replaced by its
    /// commutator.
    pub fn relation_product(&self) -> Perm {
        let mut acc = Perm::identity(self.degree);
        let mut i = 0;
        while i < self.entries.len() {
            let (role, p) = &self.entries[i];
            if *role == Role::HandleA {
                let (_, q) = &self.entries[i + 1];
                acc = acc.then(p).then(q).then(&p.inverse()).then(&q.inverse());
                i += 2;
            } else {
                acc = acc.then(p);
                i += 1;
            }
        }
        acc
    }

    /// True when the entries generate a transitive subgroup.
    pub fn is_transitive(&self) -> bool {
        let mut label: Vec<usize> = (0..self.degree).collect();
        fn find(label: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while label[r] != r {
                r = label[r];
            }
            label[x] = r;
            r
        }
        for (_, p) in &self.entries {
            for x in 0..self.degree {
                let (a, b) = (find(&mut label, x), find(&mut label, p.image(x)));
                label[a] = b;
            }
        }
        let root = find(&mut label, 0);
        (0..self.degree).all(|x| find(&mut label, x) == root)
    }

    /// Checks every condition for the word to describe a connected almost
    /// simple covering with profile `alpha` over the special point.
    pub fn is_covering_of_type(&self, alpha: &Partition) -> bool {
        let roles_ok = self.entries.iter().enumerate().all(|(i, (role, p))| match role {
            Role::HandleA => matches!(self.entries.get(i + 1), Some((Role::HandleB, _))),
            Role::HandleB => i > 0 && self.entries[i - 1].0 == Role::HandleA,
            Role::Transposition => p.is_transposition(),
            Role::Ramification => p.cycle_type() == *alpha,
        });
        let sigmas = self.entries.iter().filter(|(r, _)| *r == Role::Ramification).count();
        roles_ok && sigmas == 1 && self.relation_product().is_identity() && self.is_transitive()
    }
}
