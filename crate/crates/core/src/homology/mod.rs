//! Bounded free chain complexes over `R_0`, `R_{>=0}`, `R_{<=0}` and `R`, with
//! homology computed by Smith reduction.
//!
//! Complexes carry the coefficient ring as a [`LaurentRing`](crate::algebra::LaurentRing);
//! support `Zero` gives the base field or the integers. The half rings are Euclidean
//! only over a field.

pub mod base_change;
pub mod complex;
pub mod constructions;
pub mod domination;
#[allow(clippy::module_inception)]
pub mod homology;

pub use base_change::{base_change, base_change_map, RingMap};
pub use complex::{ChainComplex, ChainMap, Mat, Violation};
pub use constructions::{mapping_cone, mapping_cylinder, stabilize, Cylinder, Stabilization};
pub use domination::{r0_finite_domination, Domination, DEFAULT_WITNESS_CAP};
pub use homology::{homology, is_acyclic, is_quasi_iso, ring_name, DegreeHomology, Homology};
