//! Random factor and edge elements for each decomposition.

use rand::Rng;

use crate::exact_arith::{Field, LElem};
use crate::group_core::sample::{self as gs};
use crate::group_core::{g_label, mk_u2a, sl2_embed, ua, uma, GroupElem};

use super::{AmalgamId, Factor, Letter, Word};

pub fn factor_elem<R: Rng>(rng: &mut R, f: Field, id: AmalgamId, factor: &Factor) -> GroupElem {
    use AmalgamId::*;
    match (id, factor) {
        (GammaNagao, Factor::L) => gs::soq(rng, f),
        (GammaNagao, Factor::R) => ua(&gs::herm_s(rng, f)).mul(&gs::torus_f(rng, f)),
        (HatGammaDec, Factor::L) => sl2_embed(&gs::sl2(rng, f)).expect("det one"),
        (HatGammaDec, Factor::R) => ua(&gs::herm_s_jinv(rng, f)).mul(&gs::torus_f(rng, f)),
        (Gamma0Hecke, Factor::L) => ua(&gs::herm_s(rng, f)).mul(&gs::torus_f(rng, f)),
        (Gamma0Hecke, Factor::R) => uma(&gs::herm_j(rng, f)).mul(&gs::torus_f(rng, f)),
        (TildeGammaDec, Factor::L) => gs::word(rng, f, 2, gs::gamma_gen),
        (TildeGammaDec, Factor::R) => gs::word(rng, f, 2, gs::hat_gamma_gen),
        (GammaTFree, Factor::Label(x)) => ua(&gs::herm_j(rng, f)).conj_by(&g_label(f, x)),
        _ => panic!("factor {factor} does not belong to {id}"),
    }
}

pub fn edge_elem<R: Rng>(rng: &mut R, f: Field, id: AmalgamId) -> GroupElem {
    use AmalgamId::*;
    match id {
        GammaNagao => crate::group_core::u0(&gs::scalar(rng, f)).mul(&gs::torus_f(rng, f)),
        HatGammaDec => {
            let z = LElem::r_pow(f, -1).scale(&gs::scalar(rng, f));
            mk_u2a(z).expect("odd").mul(&gs::torus_f(rng, f))
        }
        Gamma0Hecke => gs::torus_f(rng, f),
        TildeGammaDec => gs::word(rng, f, 2, gs::gamma0_gen),
        GammaTFree => GroupElem::identity(f),
    }
}

/// An alternating word of the given length.
pub fn word<R: Rng>(rng: &mut R, f: Field, id: AmalgamId, len: usize) -> Word {
    let mut out = Vec::with_capacity(len);
    let mut prev: Option<Factor> = None;
    for i in 0..len {
        let factor = match id {
            AmalgamId::GammaTFree => loop {
                let x = Factor::Label(gs::p1(rng, f));
                if prev.as_ref() != Some(&x) {
                    break x;
                }
            },
            _ => {
                if (i + usize::from(rng.gen_bool(0.5) && i == 0)) % 2 == 0 {
                    Factor::L
                } else {
                    Factor::R
                }
            }
        };
        let g = factor_elem(rng, f, id, &factor);
        prev = Some(factor.clone());
        out.push(Letter { factor, g });
    }
    out
}

/// The same product with edge elements c·c⁻¹ inserted between letters
/// (and, for the free product, letters split in two).
pub fn rebracket<R: Rng>(rng: &mut R, f: Field, id: AmalgamId, w: &Word) -> Word {
    let mut out: Word = Vec::new();
    let mut carry = GroupElem::identity(f);
    for l in w {
        if id == AmalgamId::GammaTFree {
            let piece = factor_elem(rng, f, id, &l.factor);
            out.push(Letter { factor: l.factor.clone(), g: piece.clone() });
            out.push(Letter { factor: l.factor.clone(), g: piece.inv().mul(&l.g) });
            continue;
        }
        let c = edge_elem(rng, f, id);
        out.push(Letter {
            factor: l.factor.clone(),
            g: carry.mul(&l.g).mul(&c),
        });
        carry = c.inv();
    }
    if let Some(last) = out.last_mut() {
        last.g = last.g.mul(&carry);
    }
    out
}
