use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::engine::{simple_branch_count, Engine, HurwitzKey};
use crate::error::Result;
use crate::partition::partitions_of;
use crate::rational::{factorial, half, integer, Rational};

use super::poly::{Bounds, Monomial, TruncatedPoly};

/// How the degree `k` enters the generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum XScaling {
    /// `x^k`.
    #[default]
    Ordinary,
    /// `x^k / k!`.
    Exponential,
}

/// Anything that can supply `mu(h, g, alpha)`.
pub trait CoefficientSource {
    fn coefficient(&self, key: &HurwitzKey) -> Result<Rational>;
}

impl CoefficientSource for Engine {
    fn coefficient(&self, key: &HurwitzKey) -> Result<Rational> {
        self.value(key)
    }
}

/// Wraps a source and overrides a single value.
pub struct FaultInjected<'a, S: CoefficientSource + ?Sized> {
    pub inner: &'a S,
    pub key: HurwitzKey,
    pub value: Rational,
}

impl<S: CoefficientSource + ?Sized> CoefficientSource for FaultInjected<'_, S> {
    fn coefficient(&self, key: &HurwitzKey) -> Result<Rational> {
        if *key == self.key {
            Ok(self.value.clone())
        } else {
            self.inner.coefficient(key)
        }
    }
}

fn inverse_factorial(n: u32) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(factorial(n)))
}

/// Truncation of `Phi_h` to `k <= max_x`, `g <= max_z` and
/// `0 <= r <= max_u`.
pub fn assemble_phi(
    h: u32,
    bounds: Bounds,
    source: &(impl CoefficientSource + ?Sized),
    scaling: XScaling,
) -> Result<TruncatedPoly> {
    let mut phi = TruncatedPoly::zero(bounds);
    for k in 1..=bounds.max_x {
        for alpha in partitions_of(k) {
            for g in 0..=bounds.max_z {
                let r = simple_branch_count(h, g, k, alpha.num_parts());
                if r < 0 || r > i64::from(bounds.max_u) {
                    continue;
                }
                let r = r as u32;
                let mu = source.coefficient(&HurwitzKey::new(h, g, alpha.clone()))?;
                if mu.is_zero() {
                    continue;
                }
                let mut c = mu * inverse_factorial(r);
                if scaling == XScaling::Exponential {
                    c *= inverse_factorial(k);
                }
                phi.add_term(Monomial::from_parts(r, k, g, alpha.parts()), c);
            }
        }
    }
    for (m, _) in phi.terms() {
        let r = simple_branch_count(h, m.z, m.x, m.p_degree());
        assert_eq!(i64::from(m.u), r, "u-degree out of step with (h, g, k, m) at {m}");
        assert_eq!(m.p_weight(), m.x, "p-weight differs from x-degree at {m}");
    }
    Ok(phi)
}

/// Right-hand side of the cut-and-join equation applied to `phi`, truncated
/// to `phi`'s bounds.
pub fn apply_cut_join_rhs(phi: &TruncatedPoly) -> TruncatedPoly {
    let bounds = phi.bounds();
    let kmax = bounds.max_x;
    let first: Vec<TruncatedPoly> = (1..=kmax).map(|i| phi.d_p(i)).collect();
    let d = |i: u32| &first[i as usize - 1];

    let mut total = TruncatedPoly::zero(bounds);
    for i in 1..kmax {
        for j in 1..=kmax - i {
            let ij = integer(i * j);
            let cut = d(i).d_p(j).mul_z().mul_p(i + j).scale(&ij);
            let merge = d(i).mul(d(j)).mul_p(i + j).scale(&ij);
            let join = d(i + j).mul_p(i).mul_p(j).scale(&integer(i + j));
            total = total.add(&cut).add(&merge).add(&join);
        }
    }
    total.scale(&half())
}

/// A monomial where the two sides of the equation differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub monomial: Monomial,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, Default)]
pub struct PdeResidualReport {
    pub violations: Vec<Residual>,
    /// Distinct monomials compared, nonzero on at least one side.
    pub checked: usize,
}

impl PdeResidualReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the cut-and-join equation for `Phi_h` with `x^k` scaling.
pub fn check_pde(h: u32, bounds: Bounds, source: &(impl CoefficientSource + ?Sized)) -> Result<PdeResidualReport> {
    check_pde_with(h, bounds, source, XScaling::Ordinary)
}

/// Compares `dPhi/du` with the right-hand side on every monomial of
/// `u`-degree below `bounds.max_u`, where both are fully determined by the
/// truncation.
pub fn check_pde_with(
    h: u32,
    bounds: Bounds,
    source: &(impl CoefficientSource + ?Sized),
    scaling: XScaling,
) -> Result<PdeResidualReport> {
    let phi = assemble_phi(h, bounds, source, scaling)?;
    let inner = Bounds { max_u: bounds.max_u.saturating_sub(1), ..bounds };
    let lhs = phi.d_u().truncate(inner);
    let rhs = apply_cut_join_rhs(&phi).truncate(inner);
    if bounds.max_u == 0 {
        return Ok(PdeResidualReport::default());
    }

    let monomials: BTreeSet<&Monomial> = lhs.terms().chain(rhs.terms()).map(|(m, _)| m).collect();
    let mut report = PdeResidualReport { violations: Vec::new(), checked: monomials.len() };
    for m in monomials {
        let (l, r) = (lhs.coefficient(m), rhs.coefficient(m));
        if l != r {
            report.violations.push(Residual { monomial: m.clone(), lhs: l, rhs: r });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::rational::ratio;

    fn key(h: u32, g: u32, alpha: &[u32]) -> HurwitzKey {
        HurwitzKey::new(h, g, Partition::new(alpha.to_vec()).unwrap())
    }

    #[test]
    fn assembled_coefficients() {
        let e = Engine::genus_zero();
        let phi = assemble_phi(0, Bounds::new(1, 0, 0), &e, XScaling::Exponential).unwrap();
        assert_eq!(phi.coefficient(&Monomial::from_parts(0, 1, 0, &[1])), ratio(1, 1));

        let phi = assemble_phi(0, Bounds::new(3, 0, 10), &e, XScaling::Exponential).unwrap();
        assert_eq!(phi.coefficient(&Monomial::from_parts(3, 3, 0, &[1, 2])), ratio(1, 9));

        let phi = assemble_phi(0, Bounds::new(2, 1, 10), &e, XScaling::Exponential).unwrap();
        assert_eq!(phi.coefficient(&Monomial::from_parts(3, 2, 1, &[2])), ratio(1, 24));

        let phi = assemble_phi(0, Bounds::new(2, 1, 10), &e, XScaling::Ordinary).unwrap();
        assert_eq!(phi.coefficient(&Monomial::from_parts(3, 2, 1, &[2])), ratio(1, 12));
    }

    #[test]
    fn rhs_of_zero_is_zero() {
        let b = Bounds::new(4, 2, 6);
        assert!(apply_cut_join_rhs(&TruncatedPoly::zero(b)).is_zero());
    }

    #[test]
    fn rhs_on_single_monomial() {
        let b = Bounds::new(3, 2, 6);
        let phi = TruncatedPoly::monomial(b, Monomial::from_parts(0, 1, 0, &[1]), ratio(1, 1));
        let rhs = apply_cut_join_rhs(&phi);
        // Only the quadratic term survives: 1/2 p_2 (dPhi/dp_1)^2 = 1/2 p_2 x^2.
        assert_eq!(rhs.len(), 1);
        assert_eq!(rhs.coefficient(&Monomial::from_parts(0, 2, 0, &[2])), ratio(1, 2));
    }

    #[test]
    fn rhs_join_term_on_p2() {
        // Phi = p_2: the (1,1) join term gives 1/2 * 2 * p_1^2 * 1 = p_1^2.
        let b = Bounds::new(2, 1, 2);
        let phi = TruncatedPoly::monomial(b, Monomial::from_parts(0, 0, 0, &[2]), ratio(1, 1));
        let rhs = apply_cut_join_rhs(&phi);
        assert_eq!(rhs.len(), 1);
        assert_eq!(rhs.coefficient(&Monomial::from_parts(0, 0, 0, &[1, 1])), ratio(1, 1));
    }

    #[test]
    fn rhs_cut_term_on_p1_squared() {
        // Phi = p_1^2: the cut term gives 1/2 * p_2 z * 2 = z p_2.
        let b = Bounds::new(2, 1, 2);
        let phi = TruncatedPoly::monomial(b, Monomial::from_parts(0, 0, 0, &[1, 1]), ratio(1, 1));
        let rhs = apply_cut_join_rhs(&phi);
        assert_eq!(rhs.coefficient(&Monomial::from_parts(0, 0, 1, &[2])), ratio(1, 1));
        // plus the merge term 1/2 p_2 (2 p_1)^2 = 2 p_1^2 p_2
        assert_eq!(rhs.coefficient(&Monomial::from_parts(0, 0, 0, &[1, 1, 2])), ratio(2, 1));
    }

    #[test]
    fn pde_holds_for_genus_zero_base() {
        let e = Engine::genus_zero();
        let report = check_pde(0, Bounds::new(4, 2, 10), &e).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert!(report.checked > 20);
        let trivial = check_pde(0, Bounds::new(1, 2, 10), &e).unwrap();
        assert!(trivial.passed());
    }

    #[test]
    fn pde_detects_a_corrupted_value() {
        let e = Engine::genus_zero();
        let bad = FaultInjected { inner: &e, key: key(0, 0, &[1, 2]), value: ratio(5, 1) };
        let report = check_pde(0, Bounds::new(4, 2, 10), &bad).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn exponential_x_scaling_fails_the_quadratic_term() {
        let e = Engine::genus_zero();
        let report = check_pde_with(0, Bounds::new(2, 0, 2), &e, XScaling::Exponential).unwrap();
        // mu(0,0,(2)) = 1/2: lhs x^2 p_2 / 2! * 1/2 = 1/4, rhs 1/2 (x p_1 derivative)^2 = 1/2.
        let m = Monomial::from_parts(0, 2, 0, &[2]);
        let v = report.violations.iter().find(|r| r.monomial == m).expect("violation at x^2 p_2");
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (ratio(1, 4), ratio(1, 2)));
    }

    #[test]
    fn larger_bounds_truncate_to_smaller() {
        let e = Engine::genus_zero();
        let big = Bounds::new(5, 3, 12);
        let phi_big = assemble_phi(0, big, &e, XScaling::Ordinary).unwrap();
        let rhs_big = apply_cut_join_rhs(&phi_big);
        for small in [Bounds::new(3, 1, 6), Bounds::new(4, 2, 10), Bounds::new(5, 0, 4), Bounds::new(2, 3, 12)] {
            let phi = assemble_phi(0, small, &e, XScaling::Ordinary).unwrap();
            assert_eq!(phi_big.truncate(small), phi);
            assert_eq!(rhs_big.truncate(small), apply_cut_join_rhs(&phi));
        }
    }
}
