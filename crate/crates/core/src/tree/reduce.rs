//! Reduction of vertices at ∞ into the fundamental domains of Γ, Γ̂, Γ₀
//! and Γ(t).

use crate::error::{Error, Result};
use crate::exact_arith::{Field, Place};
use crate::group_core::{
    bruhat_soq, elt_s, elt_sj, ev0, factor_stabilizer, g_label, member, ua, ua_params, Bruhat,
    GroupElem, HermPair, SubgroupTag, P1,
};

use super::domain::{DomainPoint, DomainTag};
use super::vertex::{horocyclic, Horo, Vertex};

const INF: Place = Place::Infinity;

#[derive(Clone, Debug)]
pub struct Reduction {
    /// γ with γ·V equal to the canonical vertex of `point`.
    pub gamma: GroupElem,
    /// Letters in the order applied: γ = ℓₖ⋯ℓ₁.
    pub letters: Vec<GroupElem>,
    pub point: DomainPoint,
}

impl DomainPoint {
    pub fn vertex(&self, field: Field) -> Vertex {
        let g = match &self.label {
            Some(l) => g_label(field, l),
            None => GroupElem::identity(field),
        };
        Vertex::new(INF, g, self.n)
    }
}

/// Letters uₐ(x′, −N(x′)/2)⁻¹ and u₂ₐ(z)⁻¹ that remove from (x, y) the
/// terms √t^j of x with j ≥ xlo and the odd terms of y with j ≥ zlo.
pub(crate) fn unipotent_letters(p: &HermPair, xlo: i64, zlo: i64) -> Vec<GroupElem> {
    let f = p.x.field();
    let mut out = Vec::new();
    let xp = p.x.part_at_infinity(xlo);
    let mut cur = ua(p);
    if !xp.is_zero() {
        let l = ua(&HermPair::with_odd(xp, &crate::exact_arith::LElem::zero(f))).inv();
        cur = l.mul(&cur);
        out.push(l);
    }
    let y = ua_params(&cur).expect("unipotent").y;
    let z = y.part_at_infinity(zlo).odd_part();
    if !z.is_zero() {
        out.push(ua(&HermPair {
            x: crate::exact_arith::LElem::zero(f),
            y: z.neg(),
        }));
    }
    out
}

struct Descent {
    gamma: GroupElem,
    letters: Vec<GroupElem>,
    max_degree: usize,
    last: Option<i64>,
    stalls: u32,
}

impl Descent {
    fn new(field: Field, max_degree: usize) -> Descent {
        Descent {
            gamma: GroupElem::identity(field),
            letters: Vec::new(),
            max_degree,
            last: None,
            stalls: 0,
        }
    }

    fn push(&mut self, l: GroupElem) -> Result<()> {
        self.gamma = l.mul(&self.gamma);
        self.letters.push(l);
        self.gamma.check_degree(self.max_degree)
    }

    /// Potential bookkeeping: the potential never grows and stalls for at
    /// most two consecutive steps.
    fn step(&mut self, potential: i64) -> Result<()> {
        if let Some(prev) = self.last {
            if potential > prev {
                return Err(Error::Descent(format!("potential rose from {prev} to {potential}")));
            }
            if potential == prev {
                self.stalls += 1;
                if self.stalls > 2 {
                    return Err(Error::Descent(format!("potential stuck at {potential}")));
                }
            } else {
                self.stalls = 0;
            }
        }
        self.last = Some(potential);
        Ok(())
    }
}

fn current(d: &Descent, v: &Vertex) -> Horo {
    horocyclic(INF, &d.gamma.mul(&v.g), v.n)
}

fn reduce_gamma(v: &Vertex, max_degree: usize) -> Result<Reduction> {
    let f = v.g.field();
    let mut d = Descent::new(f, max_degree);
    loop {
        let h = current(&d, v);
        d.step(h.dist_to(0))?;
        if h.on_apartment() {
            if h.m < 0 {
                d.push(elt_s(f))?;
                continue;
            }
            return Ok(finish(d, DomainPoint::new(DomainTag::RayGamma, h.m)));
        }
        if h.j0() >= 0 {
            for l in unipotent_letters(&h.pair, 0, 0) {
                d.push(l)?;
            }
        } else {
            d.push(elt_s(f))?;
        }
    }
}

fn reduce_hat_gamma(v: &Vertex, max_degree: usize) -> Result<Reduction> {
    let f = v.g.field();
    let mut d = Descent::new(f, max_degree);
    loop {
        let h = current(&d, v);
        d.step(h.dist_to(-1))?;
        if h.on_apartment() {
            if h.m < -1 {
                d.push(elt_sj(f))?;
                continue;
            }
            return Ok(finish(d, DomainPoint::new(DomainTag::RayHatGamma, h.m)));
        }
        if h.j0() >= -1 {
            for l in unipotent_letters(&h.pair, 0, -1) {
                d.push(l)?;
            }
        } else {
            d.push(elt_sj(f))?;
        }
    }
}

fn reduce_gamma0(v: &Vertex, max_degree: usize) -> Result<Reduction> {
    let f = v.g.field();
    let s = elt_s(f);
    let mut d = Descent::new(f, max_degree);
    loop {
        let h = current(&d, v);
        let pot = h.off_apartment();
        if let Some(prev) = d.last {
            if pot >= prev {
                return Err(Error::Descent(format!("distance to the apartment stuck at {pot}")));
            }
        }
        d.last = Some(pot);
        if h.on_apartment() {
            return Ok(finish(d, DomainPoint::new(DomainTag::ApartmentGamma0, h.m)));
        }
        if h.j0() >= 0 {
            for l in unipotent_letters(&h.pair, 0, 0) {
                d.push(l)?;
            }
        } else {
            let hs = horocyclic(INF, &s.mul(&d.gamma).mul(&v.g), v.n);
            for l in unipotent_letters(&hs.pair, 1, 1) {
                d.push(s.mul(&l).mul(&s))?;
            }
        }
    }
}

fn reduce_gamma_t(v: &Vertex, max_degree: usize) -> Result<Reduction> {
    let r = reduce_gamma(v, max_degree)?;
    let sigma = ev0(&r.gamma)?;
    let si = sigma.inv();
    let gamma = si.mul(&r.gamma);
    let m = r.point.n;
    let label = if m == 0 {
        P1::Inf
    } else {
        match bruhat_soq(&si)? {
            Bruhat::InBorel(_) => P1::Inf,
            Bruhat::BigCell { x, .. } => P1::Fin(x),
        }
    };
    Ok(Reduction {
        letters: vec![gamma.clone()],
        gamma,
        point: DomainPoint {
            tag: DomainTag::BouquetGammaT,
            n: m,
            label: Some(label),
        },
    })
}

fn finish(d: Descent, point: DomainPoint) -> Reduction {
    Reduction {
        gamma: d.gamma,
        letters: d.letters,
        point,
    }
}

/// Reduces a vertex at ∞ into the fundamental domain of the tagged group,
/// keeping the letters used.
pub fn reduce_with_letters(tag: SubgroupTag, v: &Vertex, max_degree: usize) -> Result<Reduction> {
    if v.place != INF {
        return Err(Error::Usage("reduction is implemented at infinity".into()));
    }
    match tag {
        SubgroupTag::Gamma => reduce_gamma(v, max_degree),
        SubgroupTag::HatGamma => reduce_hat_gamma(v, max_degree),
        SubgroupTag::Gamma0 => reduce_gamma0(v, max_degree),
        SubgroupTag::GammaT => reduce_gamma_t(v, max_degree),
        other => Err(Error::Usage(format!("no fundamental domain for {other}"))),
    }
}

pub fn reduce_vertex(
    tag: SubgroupTag,
    v: &Vertex,
    max_degree: usize,
) -> Result<(GroupElem, DomainPoint)> {
    let r = reduce_with_letters(tag, v, max_degree)?;
    Ok((r.gamma, r.point))
}

/// Whether factor_stabilizer at vₙ agrees with the closed-form stabilizer
/// predicate for the tagged group.
pub fn stabilizer_check(tag: SubgroupTag, n: i64, g: &GroupElem) -> bool {
    let pred = match (tag, n) {
        (SubgroupTag::Gamma, n) if n >= 0 => SubgroupTag::Gn(n as u32),
        (SubgroupTag::HatGamma, -1) => SubgroupTag::GhatMinus1,
        (SubgroupTag::HatGamma, n) if n >= 0 => SubgroupTag::Ghatn(n as u32),
        _ => return false,
    };
    factor_stabilizer(INF, g, n).is_some() == member(pred, g)
}
