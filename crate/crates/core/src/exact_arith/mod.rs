//! Exact arithmetic in F, L = F(√t) and the local rings at 0 and ∞.

pub mod lelem;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod snf;

pub use lelem::{HalfInt, LElem, Place};
pub use matrix::Mat3;
pub use poly::Poly;
pub use scalar::{Field, Scalar};
pub use snf::{snf_local, DivisorTriple};
