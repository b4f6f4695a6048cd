//! Exact scalar rings, dense matrices and Smith reduction.

pub mod base;
pub mod integers;
pub mod laurent;
pub mod matrix;
pub mod ring;
pub mod smith;

pub use base::BaseRing;
pub use integers::Integers;
pub use laurent::{Laurent, LaurentRing, Support};
pub use matrix::Matrix;
pub use ring::{EuclideanRing, Ring};
pub use smith::Smith;
