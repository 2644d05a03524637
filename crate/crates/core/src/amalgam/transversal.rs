//! Right coset representatives of the edge group in each factor.

use crate::error::{Error, Result};
use crate::exact_arith::{LElem, Place};
use crate::group_core::{
    atilde, elt_s, elt_sj, mk_u2a, sl2_embed, u0, ua_params, GroupElem, Mat2,
};
use crate::tree::horocyclic;

use super::{AmalgamId, Factor};

/// ã(b₁₁)⁻¹·b.
fn strip_torus(b: &GroupElem) -> GroupElem {
    atilde(b.get(0, 0)).inv().mul(b)
}

/// B₀\SO(q)(F): 1, or s·u₀(x) with x fixed by the last row.
fn rep_soq(a: &GroupElem) -> GroupElem {
    let f = a.field();
    let (a31, a32) = (a.get(2, 0), a.get(2, 1));
    if a31.is_zero() {
        return GroupElem::identity(f);
    }
    let x = a32.div(a31).neg().as_scalar().expect("scalar entries");
    elt_s(f).mul(&u0(&x))
}

/// B₀\B: uₐ(x, y) with x free of constant term.
fn rep_b(a: &GroupElem) -> GroupElem {
    let u = strip_torus(a);
    let x = &ua_params(&u).expect("unipotent").x;
    let c0 = x.part_at_infinity(0).coeff_at_zero(0);
    u0(&c0).inv().mul(&u)
}

/// B(F)\SL₂(F) inside Ĝ₋₁: 1, or the image of [[0, −1], [1, d/c]].
fn rep_sl2(a: &GroupElem) -> GroupElem {
    let f = a.field();
    let c = a.get(2, 0).mul(&LElem::r_pow(f, -1)).as_scalar().expect("scalar");
    let d = a.get(2, 2).as_scalar().expect("scalar");
    if c.is_zero() {
        return GroupElem::identity(f);
    }
    sl2_embed(&Mat2::new(f.zero(), f.int(-1), f.one(), d.div(&c))).expect("det one")
}

/// B(F)\B̂: uₐ(x, y) with no √t⁻¹ term in y.
fn rep_bhat(a: &GroupElem) -> GroupElem {
    let f = a.field();
    let u = strip_torus(a);
    let y = &ua_params(&u).expect("unipotent").y;
    let c = y.laurent_coeff(-1);
    let z = LElem::r_pow(f, -1).scale(&c);
    mk_u2a(z).expect("odd").inv().mul(&u)
}

/// Γ₀\Γ, by the neighbour γ⁻¹·v₁ of v₀ in the tree at 0.
fn rep_gamma(a: &GroupElem) -> GroupElem {
    let f = a.field();
    let h = horocyclic(Place::Zero, &a.inv(), 1);
    match h.j0() {
        j if j >= 1 => GroupElem::identity(f),
        0 => {
            let x0 = h.pair.x.coeff_at_zero(0);
            elt_s(f).mul(&u0(&x0.neg()))
        }
        _ => elt_s(f),
    }
}

/// Γ₀\Γ̂, by the neighbour γ⁻¹·v₀ of v₁ in the tree at 0.
fn rep_hat_gamma(a: &GroupElem) -> GroupElem {
    let f = a.field();
    let h = horocyclic(Place::Zero, &a.inv(), 0);
    match h.j0() {
        j if j >= 2 => elt_sj(f),
        1 => {
            let c = h.pair.y.coeff_at_zero(-1);
            mk_u2a(LElem::r_pow(f, -1).scale(&c).neg()).expect("odd")
        }
        _ => GroupElem::identity(f),
    }
}

/// Splits a factor element as a = c·r with c in the edge group and r the
/// chosen representative of the coset of a.
pub fn coset_rep(id: AmalgamId, factor: &Factor, a: &GroupElem) -> Result<(GroupElem, GroupElem)> {
    use AmalgamId::*;
    let f = a.field();
    let r = match (id, factor) {
        (GammaTFree, Factor::Label(_)) => return Ok((GroupElem::identity(f), a.clone())),
        (GammaNagao, Factor::L) => rep_soq(a),
        (GammaNagao, Factor::R) => rep_b(a),
        (HatGammaDec, Factor::L) => rep_sl2(a),
        (HatGammaDec, Factor::R) => rep_bhat(a),
        (Gamma0Hecke, _) => strip_torus(a),
        (TildeGammaDec, Factor::L) => rep_gamma(a),
        (TildeGammaDec, Factor::R) => rep_hat_gamma(a),
        _ => return Err(Error::Usage(format!("factor {factor} does not belong to {id}"))),
    };
    let c = a.mul(&r.inv());
    if !id.in_edge(&c) {
        return Err(Error::Descent(format!("{id}: coset representative left\n{c}\noutside the edge group")));
    }
    Ok((c, r))
}

