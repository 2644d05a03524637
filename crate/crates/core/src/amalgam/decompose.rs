//! Words in the factors whose product is a given matrix.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_arith::{LElem, Place};
use crate::group_core::{
    bruhat_soq, elt_s, elt_sj, ev0, g_label, member, mk_u2a, u0, Bruhat, GroupElem, SubgroupTag,
    P1,
};
use crate::tree::{horocyclic, reduce_with_letters, Vertex};

use super::{AmalgamId, Factor, Letter, Word};

fn classified(id: AmalgamId, g: GroupElem) -> Result<Letter> {
    let factor = id
        .classify(&g)
        .ok_or_else(|| Error::Descent(format!("{id}: letter in neither factor\n{g}")))?;
    Ok(Letter { factor, g })
}

/// Reduces g·vₙ at ∞; g = ℓ₁⁻¹⋯ℓₖ⁻¹·σ with σ fixing vₙ.
fn via_tree(id: AmalgamId, tag: SubgroupTag, g: &GroupElem, n: i64, max_degree: usize) -> Result<Word> {
    let r = reduce_with_letters(tag, &Vertex::new(Place::Infinity, g.clone(), n), max_degree)?;
    if r.point.n != n {
        return Err(Error::Descent(format!("{id}: reduced to index {} instead of {n}", r.point.n)));
    }
    let mut out = Vec::new();
    for l in &r.letters {
        out.push(classified(id, l.inv())?);
    }
    out.push(classified(id, r.gamma.mul(g))?);
    Ok(out)
}

/// Alternating descent on the tree at 0: σ ∈ Γ fixes v₀ and turns the
/// path from v₀ towards v₁; η ∈ Γ̂ fixes v₁ and turns it back through v₀.
fn tilde_descent(g: &GroupElem, max_degree: usize) -> Result<Word> {
    let f = g.field();
    let mut gamma = GroupElem::identity(f);
    let mut out = Vec::new();
    let mut last = None;
    loop {
        let cur = gamma.mul(g);
        let h = horocyclic(Place::Zero, &cur, 0);
        let d = h.dist_to(0);
        if let Some(prev) = last {
            if d >= prev {
                return Err(Error::Descent(format!("distance to v0 stuck at {d}")));
            }
        }
        last = Some(d);
        if d == 0 {
            break;
        }
        let sigma = match h.j0() {
            j if j >= 1 => None,
            0 => Some(elt_s(f).mul(&u0(&h.pair.x.coeff_at_zero(0).neg()))),
            _ => Some(elt_s(f)),
        };
        if let Some(s) = sigma {
            gamma = s.mul(&gamma);
            out.push(Letter { factor: Factor::L, g: s.inv() });
        }
        let h = horocyclic(Place::Zero, &gamma.mul(g), 0);
        let eta = match h.j0() {
            j if j >= 2 => Some(elt_sj(f)),
            1 => {
                let c = h.pair.y.coeff_at_zero(-1);
                Some(mk_u2a(LElem::r_pow(f, -1).scale(&c).neg())?)
            }
            _ => None,
        };
        if let Some(e) = eta {
            gamma = e.mul(&gamma);
            out.push(Letter { factor: Factor::R, g: e.inv() });
        }
        gamma.check_degree(max_degree)?;
    }
    let last = gamma.mul(g);
    if !member(SubgroupTag::Gamma, &last) {
        return Err(Error::Descent("final letter is not in Γ".into()));
    }
    out.push(Letter { factor: Factor::L, g: last });
    Ok(out)
}

/// Γ(t) = Γ(t)-part of the Nagao word: each letter a = n·σ with σ = ev0(a),
/// and g = Π Pᵢ·nᵢ·Pᵢ⁻¹ with Pᵢ = σ₁⋯σᵢ₋₁.
fn free_descent(g: &GroupElem, max_degree: usize) -> Result<Word> {
    let f = g.field();
    let nagao = via_tree(AmalgamId::GammaNagao, SubgroupTag::Gamma, g, 0, max_degree)?;
    let mut prefix = GroupElem::identity(f);
    let mut out = Vec::new();
    for l in nagao {
        let sigma = ev0(&l.g)?;
        let n = l.g.mul(&sigma.inv());
        if !n.is_identity() {
            let (label, b) = match bruhat_soq(&prefix)? {
                Bruhat::InBorel(b) => (P1::Inf, b),
                Bruhat::BigCell { x, b } => (P1::Fin(x), b),
            };
            let u = n.conj_by(&b);
            debug_assert!(member(SubgroupTag::UJ, &u));
            out.push(Letter {
                factor: Factor::Label(label.clone()),
                g: u.conj_by(&g_label(f, &label)),
            });
        }
        prefix = prefix.mul(&sigma);
    }
    if !prefix.is_identity() {
        return Err(Error::NotMember("GammaT".into()));
    }
    Ok(out)
}

/// A word in the factors of `id` whose product is g.
pub fn decompose_matrix(id: AmalgamId, g: &GroupElem, max_degree: usize) -> Result<Word> {
    if !id.group(g) {
        return Err(Error::NotMember(id.to_string()));
    }
    match id {
        AmalgamId::GammaNagao => via_tree(id, SubgroupTag::Gamma, g, 0, max_degree),
        AmalgamId::HatGammaDec => via_tree(id, SubgroupTag::HatGamma, g, -1, max_degree),
        AmalgamId::Gamma0Hecke => via_tree(id, SubgroupTag::Gamma0, g, 0, max_degree),
        AmalgamId::TildeGammaDec => tilde_descent(g, max_degree),
        AmalgamId::GammaTFree => free_descent(g, max_degree),
    }
}

/// Sums a map of per-label contributions, dropping zeros.
pub fn add_into(map: &mut BTreeMap<P1, LElem>, k: P1, v: &LElem) {
    let e = map.entry(k).or_insert_with(|| LElem::zero(v.field()));
    *e = e.add(v);
}
