//! Runs every code block of the book in `book/src` as a doc-test. One module
//! per chapter, so a failure names its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}
#[doc = include_str!("../../../book/src/semimodules.md")]
pub mod semimodules {}
#[doc = include_str!("../../../book/src/semilinear.md")]
pub mod semilinear {}
#[doc = include_str!("../../../book/src/eigen.md")]
pub mod eigen {}
#[doc = include_str!("../../../book/src/geometry.md")]
pub mod geometry {}
#[doc = include_str!("../../../book/src/derived.md")]
pub mod derived {}
#[doc = include_str!("../../../book/src/semialgebra.md")]
pub mod semialgebra {}
#[doc = include_str!("../../../book/src/fuzzy.md")]
pub mod fuzzy {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
