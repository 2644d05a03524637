//! Exact computations with SU₃ over F[√t], its subgroups, and their actions
//! on the Bruhat–Tits trees at the places 0 and ∞.

pub mod amalgam;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod group_core;
pub mod homology_h1;
pub mod report;
pub mod tree;

pub use error::{Error, Result};
