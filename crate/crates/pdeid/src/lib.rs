//! Identification of partial differential equations from noisy grid data.
//!
//! The pipeline: denoise the samples with moving least squares, build
//! spatial and temporal derivatives with smoothing interleaved between
//! successive differentiations, assemble a monomial feature dictionary,
//! solve for sparse coefficients with Subspace Pursuit, and pick the
//! sparsity level either by evolving candidates forward in time or by
//! cross-validation.

pub mod cli;
pub mod differentiation;
pub mod dictionary;
pub mod error;
pub mod grid;
pub mod guide;
pub mod identify;
pub mod metrics;
pub mod rng;
pub mod simulate;
pub mod smoothing;
pub mod sparse;

pub use error::{Error, Result};
