//! The guide under `book/`, compiled so its snippets run as doc-tests.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/mixed_graphs.md")]
pub mod mixed_graphs {}
#[doc = include_str!("../../../book/src/matrices.md")]
pub mod matrices {}
#[doc = include_str!("../../../book/src/spectra.md")]
pub mod spectra {}
#[doc = include_str!("../../../book/src/elementary.md")]
pub mod elementary {}
#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}
#[doc = include_str!("../../../book/src/trees.md")]
pub mod trees {}
#[doc = include_str!("../../../book/src/file_format.md")]
pub mod file_format {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
