//! Arithmetic in the supported strongly graded ring families.
//!
//! Families: Laurent polynomials, skew Laurent rings over `base^n` twisted by a
//! permutation, Leavitt path algebras of finite sink-free graphs, and the
//! commutative ring `base[A,B,C,D]/(AB + CD - 1)`. Elements are kept in normal
//! form; see [`element::Monomial`] for the per-family shapes.

pub mod confluence;
pub mod element;
pub mod parse;
pub mod spec;
pub mod witness;

pub use confluence::{confluence_probe, ConfluenceReport};
pub use element::{GradedElement, Monomial};
pub use parse::{normalize, parse_element, parse_raw, RawExpr};
pub use spec::{Family, GradedRingSpec, Graph};
pub use witness::{strong_grading_witness, StrongGradingWitness};
