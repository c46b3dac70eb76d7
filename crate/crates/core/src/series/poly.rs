//! Sparse truncated polynomials in `u, x, z, p_1, .., p_K` with exact
//! rational coefficients.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::rational::{fraction_string, integer, Rational};

/// Degree bounds: `x` up to `max_x` (also the largest `p` index), `z` up to
/// `max_z`, `u` up to `max_u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_x: u32,
    pub max_z: u32,
    pub max_u: u32,
}

impl Bounds {
    pub fn new(max_x: u32, max_z: u32, max_u: u32) -> Self {
        Bounds { max_x, max_z, max_u }
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        m.u <= self.max_u && m.x <= self.max_x && m.z <= self.max_z && m.p.len() <= self.max_x as usize
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Bounds) -> Bounds {
        Bounds {
            max_x: self.max_x.min(other.max_x),
            max_z: self.max_z.min(other.max_z),
            max_u: self.max_u.min(other.max_u),
        }
    }
}

/// `u^u x^x z^z prod p_i^{p[i-1]}`. The `p` vector never has trailing
/// zeros, so equal monomials have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    pub u: u32,
    pub x: u32,
    pub z: u32,
    p: Vec<u32>,
}

impl Monomial {
    pub fn new(u: u32, x: u32, z: u32, p_exponents: Vec<u32>) -> Self {
        let mut m = Monomial { u, x, z, p: p_exponents };
        m.trim();
        m
    }

    /// `u^u x^x z^z p_{parts[0]} p_{parts[1]} ...`
    pub fn from_parts(u: u32, x: u32, z: u32, parts: &[u32]) -> Self {
        let mut p = Vec::new();
        for &i in parts {
            let i = i as usize;
            if p.len() < i {
                p.resize(i, 0);
            }
            p[i - 1] += 1;
        }
        Monomial::new(u, x, z, p)
    }

    fn trim(&mut self) {
        while self.p.last() == Some(&0) {
            self.p.pop();
        }
    }

    /// Exponent of `p_i`, `i >= 1`.
    pub fn p_exponent(&self, i: u32) -> u32 {
        self.p.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// `p` indices with repetition, ascending.
    pub fn p_parts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &e) in self.p.iter().enumerate() {
            out.extend(std::iter::repeat_n(i as u32 + 1, e as usize));
        }
        out
    }

    /// `sum i * e_i` over the `p` exponents.
    pub fn p_weight(&self) -> u32 {
        self.p.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
    }

    pub fn p_degree(&self) -> u32 {
        self.p.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.p.len().max(other.p.len());
        let p = (0..n).map(|i| self.p.get(i).copied().unwrap_or(0) + other.p.get(i).copied().unwrap_or(0)).collect();
        Monomial::new(self.u + other.u, self.x + other.x, self.z + other.z, p)
    }

    fn with_p_shift(&self, i: u32, delta: i32) -> Option<Monomial> {
        let idx = i as usize - 1;
        let mut p = self.p.clone();
        if p.len() <= idx {
            p.resize(idx + 1, 0);
        }
        let e = p[idx] as i64 + delta as i64;
        if e < 0 {
            return None;
        }
        p[idx] = e as u32;
        Some(Monomial::new(self.u, self.x, self.z, p))
    }

    fn render(&self) -> String {
        let mut s = format!("u^{} x^{} z^{}", self.u, self.x, self.z);
        for i in self.p_parts() {
            let _ = write!(s, " p_{i}");
        }
        s
    }
}

/// A polynomial whose stored monomials all satisfy its bounds. Products and
/// shifts drop anything that would leave them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly {
    bounds: Bounds,
    terms: BTreeMap<Monomial, Rational>,
}

impl TruncatedPoly {
    pub fn zero(bounds: Bounds) -> Self {
        TruncatedPoly { bounds, terms: BTreeMap::new() }
    }

    pub fn monomial(bounds: Bounds, m: Monomial, c: Rational) -> Self {
        let mut out = Self::zero(bounds);
        out.add_term(m, c);
        out
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * m`; out-of-bounds monomials are discarded, zero sums removed.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || !self.bounds.admits(&m) {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &TruncatedPoly) -> TruncatedPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TruncatedPoly {
        let mut out = Self::zero(self.bounds);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        let mut out = Self::zero(self.bounds.meet(&other.bounds));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multiplies by `u^du x^dx z^dz p_{parts..}`.
    pub fn shift(&self, by: &Monomial) -> TruncatedPoly {
        let mut out = Self::zero(self.bounds);
        for (m, c) in &self.terms {
            out.add_term(m.mul(by), c.clone());
        }
        out
    }

    pub fn mul_p(&self, i: u32) -> TruncatedPoly {
        self.shift(&Monomial::from_parts(0, 0, 0, &[i]))
    }

    pub fn mul_z(&self) -> TruncatedPoly {
        self.shift(&Monomial::new(0, 0, 1, vec![]))
    }

    pub fn d_u(&self) -> TruncatedPoly {
        let mut out = Self::zero(self.bounds);
        for (m, c) in &self.terms {
            if m.u > 0 {
                let mut n = m.clone();
                n.u -= 1;
                out.add_term(n, c * integer(m.u));
            }
        }
        out
    }

    pub fn d_p(&self, i: u32) -> TruncatedPoly {
        let mut out = Self::zero(self.bounds);
        for (m, c) in &self.terms {
            let e = m.p_exponent(i);
            if e > 0 {
                let n = m.with_p_shift(i, -1).expect("positive exponent");
                out.add_term(n, c * integer(e));
            }
        }
        out
    }

    /// Keeps only the monomials admitted by `bounds`.
    pub fn truncate(&self, bounds: Bounds) -> TruncatedPoly {
        let b = self.bounds.meet(&bounds);
        TruncatedPoly {
            bounds: b,
            terms: self.terms.iter().filter(|(m, _)| b.admits(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// One line per monomial, `coeff num/den u^a x^b z^c p_i1 p_i2 ...`,
    /// lines sorted as strings.
    pub fn dump(&self) -> String {
        let mut lines: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("coeff {} {}", fraction_string(c), m.render())).collect();
        lines.sort();
        let mut out = lines.join("\n");
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}
