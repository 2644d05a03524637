//! The unitary group SU₃ for the form xz̄ + yȳ + zx̄ and its named subgroups.

pub mod elem;
pub mod member;
pub mod psi;
pub mod sample;
pub mod stab;

pub use crate::exact_arith::Mat3;
pub use elem::{
    atilde, commutator, det_one, elt_s, elt_sj, is_isometry, mk_atilde, mk_u2a, mk_ua, mk_uma,
    split_borel, ua, ua_params, uma, GroupElem, HermPair,
};
pub use member::{member, member_mat, SubgroupTag};
pub use psi::{bruhat_soq, ev0, g_label, psi_inv, psi_pgl2, sl2_embed, u0, Bruhat, Mat2, P1};
pub use stab::{factor_stabilizer, StabBranch, StabFactor};
