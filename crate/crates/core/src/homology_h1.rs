//! First homology of the amalgams: a small catalog of abelian groups,
//! cokernels of edge maps, and sampled checks of every map used.

use std::collections::BTreeSet;
use std::fmt;

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::amalgam::{
    ab_gamma_t, decompose_matrix, h1_class_gamma0, is_lower_borel, normal_form, torus_part,
    AmalgamId, Factor,
};
use crate::error::{Error, Result};
use crate::exact_arith::{Field, LElem, Scalar};
use crate::group_core::sample as gs;
use crate::group_core::{
    atilde, commutator, member, mk_u2a, mk_ua, psi_inv, psi_pgl2, sl2_embed, split_borel, u0,
    ua, ua_params, uma, GroupElem, Mat2, SubgroupTag,
};
use crate::report::{rng_for, Report};

/// Degree guard used by the decomposition-based checks.
const MAX_DEGREE: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AbGroupExpr {
    Trivial,
    UnitsF,
    UnitsModSquares,
    ModuleS,
    ModuleJ,
    DirectSumOverP1(Box<AbGroupExpr>),
    Sum(Vec<AbGroupExpr>),
}

impl fmt::Display for AbGroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbGroupExpr::Trivial => write!(f, "Trivial"),
            AbGroupExpr::UnitsF => write!(f, "UnitsF"),
            AbGroupExpr::UnitsModSquares => write!(f, "UnitsModSquares"),
            AbGroupExpr::ModuleS => write!(f, "S"),
            AbGroupExpr::ModuleJ => write!(f, "J"),
            AbGroupExpr::DirectSumOverP1(a) => write!(f, "DirectSumOverP1({a})"),
            AbGroupExpr::Sum(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join(" + "))
            }
        }
    }
}

/// Named homomorphisms between catalog groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Hom {
    Identity,
    /// c ↦ −c, written c ↦ c⁻¹ for unit groups.
    Negation,
    Diagonal,
    Antidiagonal,
    Square,
    /// F* → F*/F*².
    ModSquares,
    Inclusion,
    Zero,
    ProductFold,
}

impl Hom {
    fn is_iso(self) -> bool {
        matches!(self, Hom::Identity | Hom::Negation)
    }

    fn is_onto(self, src: &AbGroupExpr, tgt: &AbGroupExpr) -> bool {
        match self {
            Hom::Identity | Hom::Negation => src == tgt,
            Hom::ModSquares => *src == AbGroupExpr::UnitsF && *tgt == AbGroupExpr::UnitsModSquares,
            Hom::Zero => *tgt == AbGroupExpr::Trivial,
            _ => false,
        }
    }
}

fn sum_of(parts: Vec<AbGroupExpr>) -> AbGroupExpr {
    let mut parts: Vec<AbGroupExpr> =
        parts.into_iter().filter(|p| *p != AbGroupExpr::Trivial).collect();
    match parts.len() {
        0 => AbGroupExpr::Trivial,
        1 => parts.pop().unwrap(),
        _ => AbGroupExpr::Sum(parts),
    }
}

/// coker(src → ⊕ targets) for c ↦ (h₁(c), …, h_k(c)).
///
/// Two rules: a component that is an isomorphism can be solved for, leaving
/// the other targets; a single nontrivial target hit surjectively dies.
/// Anything else is left undecided.
pub fn cokernel(src: &AbGroupExpr, components: &[(AbGroupExpr, Hom)]) -> Option<AbGroupExpr> {
    if *src == AbGroupExpr::Trivial {
        return Some(sum_of(components.iter().map(|c| c.0.clone()).collect()));
    }
    if let Some(j) = components.iter().position(|(t, h)| h.is_iso() && t == src) {
        let rest = components
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, c)| c.0.clone())
            .collect();
        return Some(sum_of(rest));
    }
    let nontrivial: Vec<_> = components.iter().filter(|c| c.0 != AbGroupExpr::Trivial).collect();
    match nontrivial.as_slice() {
        [] => Some(AbGroupExpr::Trivial),
        [(t, h)] if h.is_onto(src, t) => Some(AbGroupExpr::Trivial),
        _ => None,
    }
}

/// Refuses statements that need characteristic zero.
pub fn char0_gate(f: Field, what: &str) -> Result<()> {
    match f {
        Field::Q => Ok(()),
        Field::Fp(_) => Err(Error::Char0Gate(what.to_string())),
    }
}

fn same_class(a: &Scalar, b: &Scalar) -> bool {
    a.square_class() == b.square_class()
}

/// Square class of det of the PGL₂ preimage of g ∈ SO(q)(F).
pub fn det_class(g: &GroupElem) -> Result<Scalar> {
    let b = psi_inv(g)?;
    Ok(b.det().square_class().expect("invertible"))
}

/// The class of g ∈ Γ in F*/F*², read off its normal form in PGL₂(F) ∗_{B₀} B.
pub fn class_gamma(g: &GroupElem, max_degree: usize) -> Result<Scalar> {
    let w = decompose_matrix(AmalgamId::GammaNagao, g, max_degree)?;
    let nf = normal_form(AmalgamId::GammaNagao, &w)?;
    let mut acc = torus_part(&nf.prefix)?;
    for l in &nf.letters {
        let c = match l.factor {
            Factor::L => det_class(&l.g)?,
            _ => torus_part(&l.g)?,
        };
        acc = acc.mul(&c);
    }
    Ok(acc.square_class().expect("nonzero"))
}

/// The √t-coefficient of y for uₐ(x, y) ∈ U_J; it kills [U_J, U_J].
pub fn uj_extra(u: &GroupElem) -> Result<Scalar> {
    if !member(SubgroupTag::UJ, u) {
        return Err(Error::NotMember("UJ".into()));
    }
    Ok(ua_params(u).expect("unipotent").y.coeff_at_zero(1))
}

/// J ⊕ F → J, (x, c) ↦ c√t + √t·x.
pub fn fold_j(x: &LElem, c: &Scalar) -> LElem {
    let r = LElem::r(x.field());
    r.scale(c).add(&r.mul(x))
}

/// Inverse of [`fold_j`].
pub fn unfold_j(z: &LElem) -> (LElem, Scalar) {
    let f = z.field();
    let c = z.coeff_at_zero(1);
    let rest = z.sub(&LElem::r(f).scale(&c));
    (rest.mul(&LElem::r_pow(f, -1)), c)
}

/// g₁, g₂ with [g₁, g₂] = u₂ₐ(z) for z = √t·p(t).
///
/// g₁ = uₐ(√t, t/2), g₂ = uₐ(p/2, −p²/8). Both lie in U_J only when
/// p(0) = 0: the √t-coefficient of y is additive on U_J and vanishes on
/// its commutators, so u₂ₐ(c√t) with c ≠ 0 is never a product of them.
pub fn commutator_u2a(z: &LElem) -> Result<(GroupElem, GroupElem)> {
    let f = z.field();
    if !z.add(&z.conj()).is_zero() {
        return Err(Error::Invariant(format!("trace of {z} is not 0")));
    }
    if !z.is_zero() && !z.mul(&LElem::r_pow(f, -1)).is_poly() {
        return Err(Error::Invariant(format!("{z} is not in J")));
    }
    if z.is_zero() {
        return Ok((GroupElem::identity(f), GroupElem::identity(f)));
    }
    let p = z.mul(&LElem::r_pow(f, -1));
    let half = f.ratio(1, 2);
    let g1 = mk_ua(LElem::r(f), LElem::t(f).scale(&half))?;
    let g2 = mk_ua(p.scale(&half), p.mul(&p).scale(&f.ratio(-1, 8)))?;
    let c = commutator(&g1, &g2);
    if c != mk_u2a(z.clone())? {
        return Err(Error::Invariant(format!("[g1, g2] != u2a({z})")));
    }
    Ok((g1, g2))
}

/// Checks B_{S,T}/U_T⁰ ≅ F* ⋉ S on samples for the three (S, T) pairs.
pub fn check_semidirect(f: Field, samples: usize, seed: u64) -> Report {
    let mut rep = Report::new("semidirect", f, seed, samples);
    let mut rng = rng_for(seed, "semidirect");
    type Gen = fn(&mut ChaCha8Rng, Field) -> crate::group_core::HermPair;
    let pairs: [(&str, Gen); 3] = [
        ("(F,F)", |r, f| gs::herm(r, f, 0, 0, 1, 1)),
        ("(S,S)", gs::herm_s),
        ("(S,J^-1)", gs::herm_s_jinv),
    ];
    for (name, gen) in pairs {
        for _ in 0..samples {
            let (p, q) = (gen(&mut rng, f), gen(&mut rng, f));
            let l = LElem::scalar(gs::nonzero_scalar(&mut rng, f));
            let (a, b) = (ua(&p), ua(&q));
            let ab = ua_params(&a.mul(&b)).expect("unipotent");
            rep.check(&format!("{name} projection is additive"), ab.x == p.x.add(&q.x), || {
                format!("{a} ; {b}")
            });
            let z = q.y.odd_part();
            let k = mk_u2a(z.clone()).expect("odd");
            rep.check(
                &format!("{name} u2a lies in the kernel"),
                ua_params(&k).is_some_and(|h| h.x.is_zero()),
                || format!("u2a({z})"),
            );
            // b = uₐ(x,y)ã(λ) ↦ (λ, x) is multiplicative for (λ,x)(μ,u) = (λμ, x + λu)
            let mu = LElem::scalar(gs::nonzero_scalar(&mut rng, f));
            let (ta, tb) = (atilde(&l), atilde(&mu));
            let prod = a.mul(&ta).mul(&b).mul(&tb);
            let ok = split_borel(&prod).is_some_and(|(h, lam)| {
                lam == l.mul(&mu) && h.x == p.x.add(&l.mul(&q.x))
            });
            rep.check(&format!("{name} torus section splits with action λ·x"), ok, || {
                format!("{a} ; {ta} ; {b} ; {tb}")
            });
            let c = ua_params(&b.conj_by(&ta)).expect("unipotent");
            rep.check(
                &format!("{name} conjugation acts by λ·x"),
                c.x == l.mul(&q.x),
                || format!("{b} ; {ta}"),
            );
        }
    }
    rep.finish()
}

/// The catalog value of H₁ and the relation it is computed from.
#[derive(Clone, Debug, Serialize)]
pub struct H1Value {
    pub value: AbGroupExpr,
    pub edge: AbGroupExpr,
    pub components: Vec<(AbGroupExpr, Hom)>,
}

fn relation(id: AmalgamId) -> (AbGroupExpr, Vec<(AbGroupExpr, Hom)>) {
    use AbGroupExpr::*;
    match id {
        AmalgamId::GammaNagao => (UnitsF, vec![(UnitsModSquares, Hom::ModSquares), (UnitsF, Hom::Negation)]),
        AmalgamId::HatGammaDec => (UnitsF, vec![(Trivial, Hom::Zero), (UnitsF, Hom::Negation)]),
        AmalgamId::Gamma0Hecke => (UnitsF, vec![(UnitsF, Hom::Identity), (UnitsF, Hom::Negation)]),
        AmalgamId::TildeGammaDec => {
            let g = h1_value(AmalgamId::GammaNagao).value;
            let hat = h1_value(AmalgamId::HatGammaDec).value;
            let edge = h1_value(AmalgamId::Gamma0Hecke).value;
            (edge, vec![(g, Hom::ModSquares), (hat, Hom::Zero)])
        }
        AmalgamId::GammaTFree => (Trivial, vec![(DirectSumOverP1(Box::new(ModuleJ)), Hom::Zero)]),
    }
}

/// The symbolic H₁ value, without sampled checks.
pub fn h1_value(id: AmalgamId) -> H1Value {
    let (edge, components) = relation(id);
    let value = cokernel(&edge, &components).expect("every relation in the catalog is decided");
    H1Value { value, edge, components }
}

/// H₁ of the amalgam together with the sampled sub-claims behind it.
pub fn h1_of_amalgam(id: AmalgamId, f: Field, samples: usize, seed: u64) -> Result<(AbGroupExpr, Report)> {
    char0_gate(f, "h1")?;
    let suite = format!("h1:{id}");
    let mut rep = Report::new(&suite, f, seed, samples);
    let mut rng = rng_for(seed, &suite);
    let heavy = (samples / 4).max(10);
    match id {
        AmalgamId::GammaNagao => claims_gamma(&mut rep, &mut rng, f, samples, heavy),
        AmalgamId::HatGammaDec => claims_hat_gamma(&mut rep, &mut rng, f, samples),
        AmalgamId::Gamma0Hecke => claims_gamma0(&mut rep, &mut rng, f, samples, heavy),
        AmalgamId::TildeGammaDec => claims_tilde(&mut rep, &mut rng, f, samples, heavy),
        AmalgamId::GammaTFree => claims_free(&mut rep, &mut rng, f, samples, heavy),
    }
    Ok((h1_value(id).value, rep.finish()))
}

fn b_elem(rng: &mut ChaCha8Rng, f: Field) -> GroupElem {
    ua(&gs::herm_s(rng, f)).mul(&gs::torus_f(rng, f))
}

fn bhat_elem(rng: &mut ChaCha8Rng, f: Field) -> GroupElem {
    ua(&gs::herm_s_jinv(rng, f)).mul(&gs::torus_f(rng, f))
}

fn bminus_elem(rng: &mut ChaCha8Rng, f: Field) -> GroupElem {
    uma(&gs::herm_j(rng, f)).mul(&gs::torus_f(rng, f))
}

/// torus_part is multiplicative and kills commutators on a Borel-type factor.
fn torus_claims(
    rep: &mut Report,
    rng: &mut ChaCha8Rng,
    f: Field,
    samples: usize,
    name: &str,
    gen: fn(&mut ChaCha8Rng, Field) -> GroupElem,
) {
    for _ in 0..samples {
        let (a, b) = (gen(rng, f), gen(rng, f));
        let ok = match (torus_part(&a), torus_part(&b), torus_part(&a.mul(&b))) {
            (Ok(x), Ok(y), Ok(z)) => z == x.mul(&y),
            _ => false,
        };
        rep.check(&format!("torus part is a homomorphism on {name}"), ok, || format!("{a} ; {b}"));
        let c = commutator(&a, &b);
        rep.check(
            &format!("torus part kills commutators of {name}"),
            torus_part(&c).is_ok_and(|l| l.is_one()),
            || format!("{a} ; {b}"),
        );
    }
}

fn claims_gamma(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize, heavy: usize) {
    for _ in 0..samples {
        let (a, b) = (gs::soq(rng, f), gs::soq(rng, f));
        let ok = match (det_class(&a), det_class(&b), det_class(&a.mul(&b))) {
            (Ok(x), Ok(y), Ok(z)) => same_class(&z, &x.mul(&y)),
            _ => false,
        };
        rep.check("det class is a homomorphism on PGL2(F)", ok, || format!("{a} ; {b}"));
        rep.check(
            "det class kills commutators of PGL2(F)",
            det_class(&commutator(&a, &b)).is_ok_and(|c| c.is_one()),
            || format!("{a} ; {b}"),
        );
        let l = gs::nonzero_scalar(rng, f);
        let d = psi_pgl2(&Mat2::new(l.clone(), f.zero(), f.zero(), f.one())).expect("invertible");
        rep.check(
            "det class is onto F*/F*^2",
            d == atilde(&LElem::scalar(l.clone())) && det_class(&d).is_ok_and(|c| same_class(&c, &l)),
            || format!("{l}"),
        );
        // edge map B₀ → PGL₂ᵃᵇ ⊕ Bᵃᵇ is c ↦ (λ mod squares, λ)
        let c = u0(&gs::scalar(rng, f)).mul(&gs::torus_f(rng, f));
        let ok = match (det_class(&c), torus_part(&c)) {
            (Ok(x), Ok(l)) => same_class(&x, &l) && same_class(&x.mul(&l.inv()), &f.one()),
            _ => false,
        };
        rep.check("edge map is (λ mod squares, λ) and the fold kills it", ok, || format!("{c}"));
    }
    torus_claims(rep, rng, f, samples, "B", b_elem);
    for _ in 0..heavy {
        let g = gs::word(rng, f, 4, gs::gamma_gen);
        let h = gs::word(rng, f, 4, gs::gamma_gen);
        let ok = match (
            class_gamma(&g, MAX_DEGREE),
            class_gamma(&h, MAX_DEGREE),
            class_gamma(&g.mul(&h), MAX_DEGREE),
        ) {
            (Ok(x), Ok(y), Ok(z)) => same_class(&z, &x.mul(&y)),
            _ => false,
        };
        rep.check("class on Γ is a homomorphism", ok, || format!("{g} ; {h}"));
        rep.check(
            "class on Γ kills commutators",
            class_gamma(&commutator(&g, &h), MAX_DEGREE).is_ok_and(|c| c.is_one()),
            || format!("{g} ; {h}"),
        );
        let l = gs::nonzero_scalar(rng, f);
        rep.check(
            "class on Γ is onto",
            class_gamma(&atilde(&LElem::scalar(l.clone())), MAX_DEGREE)
                .is_ok_and(|c| same_class(&c, &l)),
            || format!("at({l})"),
        );
    }
}

fn elementary(f: Field, b: &Scalar, upper: bool) -> Mat2 {
    if upper {
        Mat2::new(f.one(), b.clone(), f.zero(), f.one())
    } else {
        Mat2::new(f.one(), f.zero(), b.clone(), f.one())
    }
}

/// Writes g ∈ SL₂(F) as a product of elementary matrices.
fn elementary_factors(g: &Mat2) -> Vec<Mat2> {
    let f = g.field();
    let [[a, _], [c, d]] = &g.0;
    if c.is_zero() {
        // g = L(1)·g' with g' having lower-left entry a
        let lower = elementary(f, &f.one(), false);
        let rest = elementary(f, &f.int(-1), false).mul(g);
        let mut out = vec![lower];
        out.extend(elementary_factors(&rest));
        return out;
    }
    vec![
        elementary(f, &a.sub(&f.one()).div(c), true),
        elementary(f, c, false),
        elementary(f, &d.sub(&f.one()).div(c), true),
    ]
}

fn claims_hat_gamma(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize) {
    let two = f.int(2);
    let d = Mat2::new(two.clone(), f.zero(), f.zero(), two.inv());
    for _ in 0..samples {
        let g = gs::sl2(rng, f);
        let parts = elementary_factors(&g);
        let prod = parts.iter().fold(Mat2::identity(f), |acc, m| acc.mul(m));
        rep.check("SL2(F) is generated by elementary matrices", prod == g, || format!("{g:?}"));
        // e(b) = [d, e(b/3)] and e⁻(b) = [d⁻¹, e⁻(b/3)] for d = diag(2, 1/2), pushed into Γ̂
        let b = gs::scalar(rng, f);
        let mut ok = true;
        for upper in [true, false] {
            let e = sl2_embed(&elementary(f, &b, upper)).expect("det one");
            let x = sl2_embed(&if upper { d.clone() } else { d.inv().expect("invertible") });
            let y = sl2_embed(&elementary(f, &b.div(&f.int(3)), upper)).expect("det one");
            ok &= x.is_ok_and(|x| commutator(&x, &y) == e);
        }
        rep.check("elementary matrices are commutators, so SL2(F)^ab = 0", ok, || format!("{b}"));
        let l = gs::nonzero_scalar(rng, f);
        let c = ua(&gs::herm(rng, f, 0, 0, -1, -1)).mul(&atilde(&LElem::scalar(l.clone())));
        rep.check(
            "edge map B(F) → B̂^ab is onto",
            member(SubgroupTag::Bhat, &c) && torus_part(&c).is_ok_and(|x| x == l),
            || format!("{c}"),
        );
    }
    torus_claims(rep, rng, f, samples, "B̂", bhat_elem);
}

fn claims_gamma0(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize, heavy: usize) {
    torus_claims(rep, rng, f, samples, "B", b_elem);
    torus_claims(rep, rng, f, samples, "B⁻", bminus_elem);
    for _ in 0..samples {
        let l = gs::nonzero_scalar(rng, f);
        let c = atilde(&LElem::scalar(l.clone()));
        let ok = is_lower_borel(&c)
            && torus_part(&c).is_ok_and(|x| x == l && x.mul(&x.inv()).is_one());
        rep.check("edge map is (λ, λ⁻¹) and the product fold kills it", ok, || format!("{c}"));
    }
    let (mut sampled, mut hit) = (BTreeSet::new(), BTreeSet::new());
    for _ in 0..heavy {
        let g = gs::word(rng, f, 4, gs::gamma0_gen);
        let h = gs::word(rng, f, 4, gs::gamma0_gen);
        let ok = match (
            h1_class_gamma0(&g, MAX_DEGREE),
            h1_class_gamma0(&h, MAX_DEGREE),
            h1_class_gamma0(&g.mul(&h), MAX_DEGREE),
        ) {
            (Ok(x), Ok(y), Ok(z)) => z == x.mul(&y),
            _ => false,
        };
        rep.check("class on Γ₀ is a homomorphism", ok, || format!("{g} ; {h}"));
        rep.check(
            "class on Γ₀ kills commutators",
            h1_class_gamma0(&commutator(&g, &h), MAX_DEGREE).is_ok_and(|c| c.is_one()),
            || format!("{g} ; {h}"),
        );
        // a B-letter with torus part λ₁ times a B⁻-letter with torus part λ/λ₁
        let l = gs::nonzero_scalar(rng, f);
        let b = b_elem(rng, f);
        let l2 = l.div(&torus_part(&b).expect("borel"));
        let w = b.mul(&uma(&gs::herm_j(rng, f))).mul(&atilde(&LElem::scalar(l2)));
        let ok = h1_class_gamma0(&w, MAX_DEGREE).is_ok_and(|c| c == l);
        rep.check("class on Γ₀ is onto", ok, || format!("{w}"));
        sampled.insert(l.clone());
        if ok {
            hit.insert(l);
        }
    }
    rep.check("class on Γ₀ hits every sampled unit", hit == sampled, || {
        format!("{} of {} hit", hit.len(), sampled.len())
    });
}

fn claims_tilde(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize, heavy: usize) {
    let parts = [AmalgamId::GammaNagao, AmalgamId::HatGammaDec, AmalgamId::Gamma0Hecke];
    let vals: Vec<AbGroupExpr> = parts.iter().map(|&id| h1_value(id).value).collect();
    rep.check(
        "factor and edge abelianizations",
        vals == [AbGroupExpr::UnitsModSquares, AbGroupExpr::Trivial, AbGroupExpr::UnitsF],
        || format!("{vals:?}"),
    );
    for _ in 0..heavy {
        // θ: Γ₀ᵃᵇ → Γᵃᵇ is λ ↦ λ mod squares, computed through two decompositions
        let g = gs::word(rng, f, 4, gs::gamma0_gen);
        let ok = match (h1_class_gamma0(&g, MAX_DEGREE), class_gamma(&g, MAX_DEGREE)) {
            (Ok(l), Ok(c)) => same_class(&l, &c),
            _ => false,
        };
        rep.check("θ(λ) ≡ λ mod squares", ok, || format!("{g}"));
    }
    for _ in 0..samples {
        let l = gs::nonzero_scalar(rng, f);
        let a = atilde(&LElem::scalar(l.clone()));
        let ok = member(SubgroupTag::Gamma0, &a) && torus_part(&a).is_ok_and(|x| x == l);
        rep.check("every class of F*/F*^2 comes from Γ₀", ok, || format!("{a}"));
    }
}

fn claims_free(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize, heavy: usize) {
    for _ in 0..samples {
        let (p, q) = (gs::herm_j(rng, f), gs::herm_j(rng, f));
        let (a, b) = (ua(&p), ua(&q));
        let ab = a.mul(&b);
        let x_ok = ua_params(&ab).is_some_and(|h| h.x == p.x.add(&q.x));
        rep.check("x is additive on U_J", x_ok, || format!("{a} ; {b}"));
        let e_ok = match (uj_extra(&a), uj_extra(&b), uj_extra(&ab)) {
            (Ok(x), Ok(y), Ok(z)) => z == x.add(&y),
            _ => false,
        };
        rep.check("√t-coefficient of y is additive on U_J", e_ok, || format!("{a} ; {b}"));
        let c = commutator(&a, &b);
        let ok = ua_params(&c).is_some_and(|h| h.x.is_zero()) && uj_extra(&c).is_ok_and(|e| e.is_zero());
        rep.check("both invariants kill [U_J, U_J]", ok, || format!("{a} ; {b}"));
        // the common kernel is u₂ₐ(t√t·F[t]), and it is made of commutators
        let z = gs::odd(rng, f, 3, 7);
        let ok = commutator_u2a(&z).is_ok_and(|(g1, g2)| {
            member(SubgroupTag::UJ, &g1) && member(SubgroupTag::UJ, &g2)
        });
        rep.check("u2a(t√t·F[t]) lies in [U_J, U_J]", ok, || format!("u2a({z})"));
        let cst = gs::nonzero_scalar(rng, f);
        let w = mk_u2a(LElem::r(f).scale(&cst)).expect("odd");
        rep.check(
            "u2a(c√t) survives in U_J^ab",
            uj_extra(&w).is_ok_and(|e| e == cst),
            || format!("u2a({cst}*rt)"),
        );
        let x = gs::lelem(rng, f, 1, 4);
        let (x2, c2) = unfold_j(&fold_j(&x, &cst));
        let z = fold_j(&x, &cst);
        let in_j = z.mul(&LElem::r_pow(f, -1)).is_poly();
        rep.check("J ⊕ F ≅ J through (x, c) ↦ c√t + √t·x", in_j && x2 == x && c2 == cst, || {
            format!("{x} ; {cst}")
        });
    }
    for _ in 0..heavy {
        let g = gs::word(rng, f, 3, gs::gamma_t_gen);
        let h = gs::word(rng, f, 3, gs::gamma_t_gen);
        let ok = match (
            ab_gamma_t(&g, MAX_DEGREE),
            ab_gamma_t(&h, MAX_DEGREE),
            ab_gamma_t(&g.mul(&h), MAX_DEGREE),
        ) {
            (Ok(mut x), Ok(y), Ok(z)) => {
                for (k, v) in y {
                    crate::amalgam::decompose::add_into(&mut x, k, &v);
                }
                x.retain(|_, v| !v.is_zero());
                x == z
            }
            _ => false,
        };
        rep.check("abelianization of Γ(t) is a homomorphism", ok, || format!("{g} ; {h}"));
    }
}

/// Number of real embeddings and of conjugate pairs of complex embeddings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureInput {
    pub r: u64,
    pub s: u64,
}

/// (first n with injectivity, first n with bijectivity).
pub fn vanishing_bound(sig: SignatureInput) -> (u64, u64) {
    let base = 2 * sig.r + 3 * sig.s;
    (base + 1, base + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_values() {
        use AbGroupExpr::*;
        assert_eq!(h1_value(AmalgamId::GammaNagao).value, UnitsModSquares);
        assert_eq!(h1_value(AmalgamId::HatGammaDec).value, Trivial);
        assert_eq!(h1_value(AmalgamId::Gamma0Hecke).value, UnitsF);
        assert_eq!(h1_value(AmalgamId::TildeGammaDec).value, Trivial);
        assert_eq!(h1_value(AmalgamId::GammaTFree).value, DirectSumOverP1(Box::new(ModuleJ)));
    }

    #[test]
    fn undecided_cokernel() {
        let c = [(AbGroupExpr::UnitsF, Hom::Square), (AbGroupExpr::ModuleJ, Hom::Zero)];
        assert_eq!(cokernel(&AbGroupExpr::UnitsF, &c), None);
    }

    #[test]
    fn commutator_witnesses() {
        let f = Field::Q;
        let z = LElem::r(f).scale(&f.int(2));
        let (g1, g2) = commutator_u2a(&z).unwrap();
        assert_eq!(g1, mk_ua(LElem::r(f), LElem::t(f).scale(&f.ratio(1, 2))).unwrap());
        assert_eq!(g2, mk_ua(LElem::one(f), LElem::scalar(f.ratio(-1, 2))).unwrap());
        let (a, b) = commutator_u2a(&LElem::zero(f)).unwrap();
        assert!(a.is_identity() && b.is_identity());
        assert!(commutator_u2a(&LElem::t(f)).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(vanishing_bound(SignatureInput { r: 1, s: 0 }), (3, 4));
        assert_eq!(vanishing_bound(SignatureInput { r: 0, s: 1 }), (4, 5));
        assert_eq!(vanishing_bound(SignatureInput { r: 0, s: 0 }), (1, 2));
    }

    #[test]
    fn gate_refuses_prime_fields() {
        assert!(matches!(h1_of_amalgam(AmalgamId::GammaNagao, Field::Fp(5), 1, 0), Err(Error::Char0Gate(_))));
    }
}
