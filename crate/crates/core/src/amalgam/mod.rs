//! The five amalgam decompositions: factors, transversals, normal forms
//! and decomposition of explicit matrices.

pub mod abelian;
pub mod decompose;
pub mod sample;
pub mod transversal;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::Field;
use crate::group_core::{g_label, member, GroupElem, SubgroupTag, P1};

pub use abelian::{ab_gamma_t, ab_uj, h1_class_gamma0, torus_part};
pub use decompose::decompose_matrix;
pub use transversal::coset_rep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AmalgamId {
    /// Γ ≅ PGL₂(F) ∗_{B₀} B
    GammaNagao,
    /// Γ̂ ≅ SL₂(F) ∗_{B(F)} B̂
    HatGammaDec,
    /// Γ₀ ≅ B ∗_{F*} B⁻
    Gamma0Hecke,
    /// Γ̃ ≅ Γ ∗_{Γ₀} Γ̂
    TildeGammaDec,
    /// Γ(t) ≅ ∗_{x ∈ P¹(F)} gₓ·U_J·gₓ⁻¹
    GammaTFree,
}

pub const ALL_AMALGAMS: [AmalgamId; 5] = [
    AmalgamId::GammaNagao,
    AmalgamId::HatGammaDec,
    AmalgamId::Gamma0Hecke,
    AmalgamId::TildeGammaDec,
    AmalgamId::GammaTFree,
];

impl fmt::Display for AmalgamId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for AmalgamId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ALL_AMALGAMS
            .iter()
            .find(|a| a.to_string() == s)
            .copied()
            .ok_or_else(|| Error::Usage(format!("unknown amalgam {s}")))
    }
}

/// Which factor a letter belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    L,
    R,
    Label(P1),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::L => write!(f, "L"),
            Factor::R => write!(f, "R"),
            Factor::Label(x) => write!(f, "x={x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub factor: Factor,
    pub g: GroupElem,
}

pub type Word = Vec<Letter>;

pub fn evaluate(field: Field, w: &[Letter]) -> GroupElem {
    w.iter()
        .fold(GroupElem::identity(field), |acc, l| acc.mul(&l.g))
}

/// Edge-group element c followed by alternating nontrivial coset
/// representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub prefix: GroupElem,
    pub letters: Word,
}

impl NormalForm {
    pub fn evaluate(&self) -> GroupElem {
        self.prefix.mul(&evaluate(self.prefix.field(), &self.letters))
    }
}

impl AmalgamId {
    /// The ambient group.
    pub fn group(self, g: &GroupElem) -> bool {
        let tag = match self {
            AmalgamId::GammaNagao => SubgroupTag::Gamma,
            AmalgamId::HatGammaDec => SubgroupTag::HatGamma,
            AmalgamId::Gamma0Hecke => SubgroupTag::Gamma0,
            AmalgamId::TildeGammaDec => SubgroupTag::TildeGamma,
            AmalgamId::GammaTFree => SubgroupTag::GammaT,
        };
        member(tag, g)
    }

    pub fn in_factor(self, factor: &Factor, g: &GroupElem) -> bool {
        use AmalgamId::*;
        match (self, factor) {
            (GammaNagao, Factor::L) => member(SubgroupTag::SOq, g),
            (GammaNagao, Factor::R) => member(SubgroupTag::B, g),
            (HatGammaDec, Factor::L) => member(SubgroupTag::GhatMinus1, g),
            (HatGammaDec, Factor::R) => member(SubgroupTag::Bhat, g),
            (Gamma0Hecke, Factor::L) => member(SubgroupTag::B, g),
            (Gamma0Hecke, Factor::R) => is_lower_borel(g),
            (TildeGammaDec, Factor::L) => member(SubgroupTag::Gamma, g),
            (TildeGammaDec, Factor::R) => member(SubgroupTag::HatGamma, g),
            (GammaTFree, Factor::Label(x)) => {
                let gx = g_label(g.field(), x);
                member(SubgroupTag::UJ, &g.conj_by(&gx.inv()))
            }
            _ => false,
        }
    }

    pub fn in_edge(self, g: &GroupElem) -> bool {
        use AmalgamId::*;
        match self {
            GammaNagao => member(SubgroupTag::B0, g),
            HatGammaDec => member(SubgroupTag::GhatMinus1, g) && member(SubgroupTag::Bhat, g),
            Gamma0Hecke => is_torus_f(g),
            TildeGammaDec => member(SubgroupTag::Gamma0, g),
            GammaTFree => g.is_identity(),
        }
    }

    /// The factor containing `g`, preferring L for edge elements.
    pub fn classify(self, g: &GroupElem) -> Option<Factor> {
        if self == AmalgamId::GammaTFree {
            return None;
        }
        [Factor::L, Factor::R].into_iter().find(|f| self.in_factor(f, g))
    }

    pub fn factor_names(self) -> &'static [&'static str] {
        match self {
            AmalgamId::GammaTFree => &[],
            _ => &["L", "R"],
        }
    }
}

/// ã(λ) with λ ∈ F*.
pub fn is_torus_f(g: &GroupElem) -> bool {
    let m = g.mat();
    (0..3).all(|i| (0..3).all(|j| i == j || m.get(i, j).is_zero()))
        && m.get(0, 0).as_scalar().is_some()
        && member(SubgroupTag::SOq, g)
}

/// u₋ₐ(u, v)·ã(λ) with (u, v) ∈ H(L,K)_J and λ ∈ F*.
pub fn is_lower_borel(g: &GroupElem) -> bool {
    let m = g.mat();
    m.transpose().is_upper_triangular()
        && m.get(0, 0).as_scalar().is_some_and(|l| !l.is_zero())
        && member(SubgroupTag::Gamma0, g)
}

/// Prepends letters one at a time, right to left, keeping the form
/// c·r₁⋯rₘ with each rᵢ a transversal representative.
pub fn normal_form(id: AmalgamId, w: &[Letter]) -> Result<NormalForm> {
    let field = w.first().map(|l| l.g.field()).unwrap_or(Field::Q);
    for l in w {
        if !id.in_factor(&l.factor, &l.g) {
            return Err(Error::NotMember(format!("{id} factor {}: {}", l.factor, l.g)));
        }
    }
    let mut prefix = GroupElem::identity(field);
    let mut letters: Vec<Letter> = Vec::new();
    for l in w.iter().rev() {
        let factor = if id.in_edge(&l.g) && id != AmalgamId::GammaTFree {
            Factor::L
        } else {
            l.factor.clone()
        };
        let mut a = l.g.mul(&prefix);
        let merge = letters.first().is_some_and(|r| r.factor == factor);
        if merge {
            a = a.mul(&letters.remove(0).g);
        }
        let (c, r) = coset_rep(id, &factor, &a)?;
        if !r.is_identity() {
            letters.insert(0, Letter { factor, g: r });
        }
        prefix = c;
        if letters.len() > 4 * w.len() + 4 {
            return Err(Error::Descent("normal form rewriting does not shrink".into()));
        }
    }
    Ok(NormalForm { prefix, letters })
}
