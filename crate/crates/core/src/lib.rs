//! Exact Hurwitz numbers of almost simple branched coverings.
//!
//! [`engine`] evaluates the cut-and-join recursion over the move sets in
//! [`moves`]. [`oracles`] computes the same numbers independently, from
//! closed forms and by enumerating monodromy tuples in the symmetric group.
//! [`series`] assembles the generating function and checks the cut-and-join
//! differential equation coefficient by coefficient.
//!
//! ```
//! use hurwitz::{rational::integer, Engine, Partition};
//!
//! let engine = Engine::genus_zero();
//! let alpha: Partition = "1,2".parse().unwrap();
//! assert_eq!(engine.mu(0, 2, &alpha).unwrap(), integer(364));
//! ```

pub mod cache;
pub mod engine;
pub mod error;
pub mod moves;
pub mod oracles;
pub mod partition;
pub mod rational;
pub mod series;

pub use engine::{
    hurwitz, hurwitz_batch, simple_branch_count, BaseCaseProvider, Engine, HurwitzKey, MemoStore, StrictProvider,
};
pub use error::{Error, Result};
pub use partition::{partitions_of, Partition};
pub use rational::Rational;
