//! The user guide, rendered with mdbook from the `book/` directory at the
//! repository root. Each chapter is also compiled into this module, so
//! every code example in the book runs as a documentation test and cannot
//! drift out of sync with the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/data-model.md")]
pub mod data_model {}

#[doc = include_str!("../../../book/src/denoising.md")]
pub mod denoising {}

#[doc = include_str!("../../../book/src/differentiation.md")]
pub mod differentiation {}

#[doc = include_str!("../../../book/src/regression.md")]
pub mod regression {}

#[doc = include_str!("../../../book/src/selection.md")]
pub mod selection {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
