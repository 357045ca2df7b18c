//! Exact homology computations for square-tiled surfaces and their affine groups.

// Index loops over matrix entries read more clearly than iterator chains here.
#![allow(clippy::needless_range_loop)]

pub mod affine_action;
pub mod error;
pub mod homology;
pub mod invariants;
pub mod linalg;
pub mod origami_core;
pub mod par;
pub mod structure_analysis;

pub use error::{Error, Result};
pub use origami_core::*;
