//! The Bruhat–Tits trees at 0 and ∞, vertex equality and reduction to
//! fundamental domains.

pub mod domain;
pub mod reduce;
pub mod vertex;

pub use domain::{dot_segment, DomainPoint, DomainTag};
pub use reduce::{reduce_vertex, reduce_with_letters, stabilizer_check, Reduction};
pub use vertex::{
    distance, distance_snf, horocyclic, shift, translate, unif_inv, vertex_eq, Horo, Vertex,
};
