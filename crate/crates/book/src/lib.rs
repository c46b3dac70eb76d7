//! The chapters of the guide in `book/`, compiled as doctests so every Rust
//! snippet in the book is checked by `cargo test`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}
#[doc = include_str!("../../../book/src/recursion.md")]
pub mod recursion {}
#[doc = include_str!("../../../book/src/oracles.md")]
pub mod oracles {}
#[doc = include_str!("../../../book/src/generating-function.md")]
pub mod generating_function {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../book/src/cache-format.md")]
pub mod cache_format {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
