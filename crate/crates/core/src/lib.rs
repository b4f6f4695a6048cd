//! Exact computer algebra for strongly Z-graded rings.
//!
//! The crate covers graded ring arithmetic for four ring families, bounded chain
//! complexes over the Laurent ring and its graded subrings, lifting of complexes
//! along the subring inclusions, twisted endomorphisms and their nilpotency,
//! module triples on the projective line, and K0-level exact sequences.

pub mod algebra;
pub mod error;
pub mod homology;
pub mod k_zero;
pub mod lifting;
pub mod projective_line;
pub mod ring_kernel;
pub mod twisted_nil;

pub use error::{Error, Result};
