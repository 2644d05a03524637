//! Abelian invariants read off from decompositions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_arith::{LElem, Scalar};
use crate::group_core::{g_label, member, ua_params, GroupElem, SubgroupTag, P1};

use super::decompose::{add_into, decompose_matrix};
use super::{is_lower_borel, normal_form, AmalgamId, Factor};

/// λ for b = uₐ(x, y)·ã(λ) in B, B̂ or B₀, or b = u₋ₐ(u, v)·ã(λ).
pub fn torus_part(b: &GroupElem) -> Result<Scalar> {
    let upper = member(SubgroupTag::B, b) || member(SubgroupTag::Bhat, b);
    if !upper && !is_lower_borel(b) {
        return Err(Error::NotMember("B".into()));
    }
    Ok(b.get(0, 0).as_scalar().expect("scalar torus part"))
}

/// uₐ(x, y) ↦ x on U_J.
pub fn ab_uj(u: &GroupElem) -> Result<LElem> {
    if !member(SubgroupTag::UJ, u) {
        return Err(Error::NotMember("UJ".into()));
    }
    Ok(ua_params(u).expect("unipotent").x)
}

/// Sum of ab_uj over the letters of each label in the free decomposition.
pub fn ab_gamma_t(g: &GroupElem, max_degree: usize) -> Result<BTreeMap<P1, LElem>> {
    let w = decompose_matrix(AmalgamId::GammaTFree, g, max_degree)?;
    let nf = normal_form(AmalgamId::GammaTFree, &w)?;
    let mut out = BTreeMap::new();
    for l in &nf.letters {
        let Factor::Label(x) = &l.factor else {
            unreachable!()
        };
        let gx = g_label(g.field(), x);
        add_into(&mut out, x.clone(), &ab_uj(&l.g.conj_by(&gx.inv()))?);
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Product of the torus parts of the letters of the normal form in B ∗_{F*} B⁻.
pub fn h1_class_gamma0(g: &GroupElem, max_degree: usize) -> Result<Scalar> {
    let w = decompose_matrix(AmalgamId::Gamma0Hecke, g, max_degree)?;
    let nf = normal_form(AmalgamId::Gamma0Hecke, &w)?;
    let mut acc = torus_part(&nf.prefix)?;
    for l in &nf.letters {
        acc = acc.mul(&torus_part(&l.g)?);
    }
    Ok(acc)
}
