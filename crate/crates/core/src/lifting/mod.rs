//! Lifting complexes over `R` to the half rings `R_{<=0}` and `R_{>=0}`.
//!
//! Every lift carries an exact chain isomorphism between its base change and the
//! (possibly stabilized) input, checked when the lift is built.

pub mod acyclic;
pub mod truncation;

pub use acyclic::{lift_acyclic, split_acyclic, standard_complex, AcyclicDecomposition, AcyclicLift};
pub use truncation::{degree_truncation_factor, make_induced, InducedLift, PadPolicy, Truncation};
