//! Independent routes to the same numbers the recursion produces.
//!
//! [`closed_form`] evaluates the known genus-zero and genus-one formulas over
//! the sphere; [`monodromy`] counts permutation tuples directly. Neither
//! shares code with [`crate::engine`] beyond [`crate::partition`] and the
//! rational helpers.

pub mod closed_form;
pub mod monodromy;
pub mod perm;

pub use closed_form::{closed_form_g0, closed_form_g1};
pub use monodromy::{monodromy_count, monodromy_count_fixed_sigma, MonodromyLimits, MonodromyProvider};
pub use perm::{Perm, PermWord, Role};
