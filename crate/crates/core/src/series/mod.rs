//! The generating function of Hurwitz numbers and the cut-and-join equation.
//!
//! For a fixed base genus `h`,
//!
//! ```text
//! Phi_h = sum mu(h, g, alpha) u^r / r! * X_k * z^g p_alpha,   r = k + m - 2kh - 2 + 2g
//! ```
//!
//! summed over partitions `alpha` of `k`. The operator
//!
//! ```text
//! dPhi/du = 1/2 sum_{i,j>=1} ( ij p_{i+j} z d2Phi/dp_i dp_j
//!                            + ij p_{i+j} dPhi/dp_i dPhi/dp_j
//!                            + (i+j) p_i p_j dPhi/dp_{i+j} )
//! ```
//!
//! is checked coefficient by coefficient on truncations. The `x` weight
//! `X_k` is selected by [`XScaling`]. With `X_k = x^k` the equation holds
//! exactly. With `X_k = x^k / k!` the quadratic term picks up a spurious
//! factor `binomial(k, k1)` when two components of degrees `k1, k2` merge, so
//! the check fails; [`check_pde_with`] can demonstrate that.

mod phi;
mod poly;

pub use phi::{
    apply_cut_join_rhs, assemble_phi, check_pde, check_pde_with, CoefficientSource, FaultInjected, PdeResidualReport,
    Residual, XScaling,
};
pub use poly::{Bounds, Monomial, TruncatedPoly};
