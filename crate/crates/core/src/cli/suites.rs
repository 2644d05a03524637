//! The verification suites behind `su3 verify`.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::amalgam::{
    self, ab_gamma_t, ab_uj, decompose::add_into, h1_class_gamma0, normal_form, torus_part,
    ALL_AMALGAMS,
};
use crate::error::{Error, Result};
use crate::exact_arith::{Field, LElem, Place};
use crate::group_core::sample as gs;
use crate::group_core::{
    atilde, commutator, det_one, elt_s, elt_sj, factor_stabilizer, g_label, is_isometry, member,
    mk_u2a, mk_ua, psi_inv, psi_pgl2, sl2_embed, u0, ua, ua_params, uma, GroupElem, HermPair,
    Mat2, SubgroupTag,
};
use crate::homology_h1::{
    char0_gate, check_semidirect, commutator_u2a, h1_of_amalgam, vanishing_bound, AbGroupExpr,
    SignatureInput,
};
use crate::report::{rng_for, Report};
use crate::tree::{reduce_vertex, stabilizer_check, translate, vertex_eq, Vertex};

pub const SUITES: [&str; 9] = [
    "identities",
    "unitarity",
    "psi",
    "stabilizer",
    "domains",
    "amalgam",
    "abelian",
    "h1",
    "bound",
];

const MAX_DEGREE: usize = 64;
const INF: Place = Place::Infinity;

pub fn run_suite(name: &str, f: Field, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new(name, f, seed, samples);
    let mut rng = rng_for(seed, name);
    match name {
        "identities" => identities(&mut rep, &mut rng, f, samples),
        "unitarity" => unitarity(&mut rep, &mut rng, f, samples),
        "psi" => psi(&mut rep, &mut rng, f, samples),
        "stabilizer" => stabilizer(&mut rep, &mut rng, f, samples),
        "domains" => domains(&mut rep, &mut rng, f, samples),
        "amalgam" => amalgams(&mut rep, &mut rng, f, samples),
        "abelian" => {
            char0_gate(f, "abelian")?;
            abelian(&mut rep, &mut rng, f, samples)
        }
        "h1" => {
            char0_gate(f, "h1")?;
            h1(&mut rep, f, samples, seed)?
        }
        "bound" => {
            char0_gate(f, "bound")?;
            bound(&mut rep)
        }
        "all" => {
            for s in SUITES {
                rep.merge(run_suite(s, f, samples, seed)?);
            }
        }
        other => return Err(Error::Usage(format!("unknown suite {other}"))),
    }
    Ok(rep.finish())
}

fn ua_str(p: &HermPair) -> String {
    format!("ua({}; {})", p.x, p.y)
}

fn identities(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize) {
    for _ in 0..samples {
        let (p, q) = (gs::herm_l(rng, f), gs::herm_l(rng, f));
        let (a, b) = (ua(&p), ua(&q));
        let want = mk_ua(p.x.add(&q.x), p.y.add(&q.y).sub(&p.x.conj().mul(&q.x)));
        rep.check("product law", want.is_ok_and(|w| w == a.mul(&b)), || {
            format!("{} * {}", ua_str(&p), ua_str(&q))
        });

        let l = LElem::scalar(gs::nonzero_scalar(rng, f));
        let t = atilde(&l);
        let want = mk_ua(l.mul(&p.x), l.mul(&l).mul(&p.y));
        rep.check("torus conjugation of ua", want.is_ok_and(|w| w == a.conj_by(&t)), || {
            format!("{t} ; {}", ua_str(&p))
        });
        let v = p.y.odd_part();
        let u2 = mk_u2a(v.clone()).expect("odd");
        let want = mk_u2a(l.mul(&l).mul(&v)).expect("odd");
        rep.check("torus conjugation of u2a", u2.conj_by(&t) == want, || format!("{t} ; u2a({v})"));

        let lam = loop {
            let x = gs::lelem(rng, f, -2, 2);
            if !x.is_zero() {
                break x;
            }
        };
        let c = ua_params(&a.conj_by(&atilde(&lam)));
        let want = lam.conj().mul(&lam.conj()).div(&lam).mul(&p.x);
        rep.check("general torus conjugation", c.is_some_and(|c| c.x == want), || {
            format!("at({lam}) ; {}", ua_str(&p))
        });

        let z = p.x.mul(&q.x.conj()).sub(&p.x.conj().mul(&q.x));
        let ok = mk_u2a(z).is_ok_and(|w| commutator(&a, &b) == w);
        rep.check("commutator", ok, || format!("{} ; {}", ua_str(&p), ua_str(&q)));

        let ok = mk_ua(p.x.neg(), p.y.conj()).is_ok_and(|w| w == a.inv());
        rep.check("inverse law", ok, || ua_str(&p));
    }
}

fn any_gen(rng: &mut ChaCha8Rng, f: Field) -> GroupElem {
    match rng.gen_range(0..6) {
        0 => gs::gamma_gen(rng, f),
        1 => gs::hat_gamma_gen(rng, f),
        2 => gs::gamma0_gen(rng, f),
        3 => gs::gamma_t_gen(rng, f),
        4 => ua(&gs::herm_l(rng, f)),
        _ => uma(&gs::herm_s(rng, f)),
    }
}

fn unitary(g: &GroupElem) -> bool {
    is_isometry(g.mat()) && det_one(g.mat())
}

fn unitarity(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize) {
    for _ in 0..samples {
        let p = gs::herm_l(rng, f);
        let z = gs::odd(rng, f, -3, 3);
        let lam = gs::nonzero_lelem(rng, f, -2, 2);
        let x = gs::scalar(rng, f);
        let label = gs::p1(rng, f);
        let cs: Vec<(&str, GroupElem)> = vec![
            ("ua", ua(&p)),
            ("u2a", mk_u2a(z).expect("odd")),
            ("uma", uma(&p)),
            ("at", atilde(&lam)),
            ("s", elt_s(f)),
            ("sj", elt_sj(f)),
            ("psi", psi_pgl2(&gs::gl2(rng, f)).expect("invertible")),
            ("sl2_embed", sl2_embed(&gs::sl2(rng, f)).expect("det one")),
            ("u0", u0(&x)),
            ("g_label", g_label(f, &label)),
        ];
        for (name, g) in cs {
            rep.check(&format!("{name} is unitary"), unitary(&g), || g.to_string());
        }
        let w = gs::word(rng, f, 10, any_gen);
        rep.check("random word is unitary", unitary(&w), || w.to_string());
    }
}

fn psi(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize) {
    for _ in 0..samples {
        let (a, b) = (gs::gl2(rng, f), gs::gl2(rng, f));
        let (pa, pb) = (psi_pgl2(&a).unwrap(), psi_pgl2(&b).unwrap());
        let pab = psi_pgl2(&a.mul(&b)).unwrap();
        rep.check("psi is a homomorphism", pab == pa.mul(&pb), || format!("{a} ; {b}"));
        rep.check(
            "psi lands in SO(q) ∩ SL3(F)",
            member(SubgroupTag::SOq, &pa) && unitary(&pa),
            || format!("{a}"),
        );
        let up = Mat2::new(gs::nonzero_scalar(rng, f), gs::scalar(rng, f), f.zero(), gs::nonzero_scalar(rng, f));
        let pu = psi_pgl2(&up).unwrap();
        rep.check("psi of upper triangular lies in B0", member(SubgroupTag::B0, &pu), || format!("{up}"));
        let l = gs::nonzero_scalar(rng, f);
        let d = psi_pgl2(&Mat2::new(l.clone(), f.zero(), f.zero(), f.one())).unwrap();
        rep.check("psi(diag(λ, 1)) = at(λ)", d == atilde(&LElem::scalar(l.clone())), || {
            format!("{l}")
        });
        let back = psi_inv(&pa);
        rep.check("psi_inv round trip", back.is_ok_and(|m| m.same_class(&a)), || pa.to_string());
    }
}

/// An element of Gₙ (or Ĝₙ when `hat`) when `miss` is false; otherwise y
/// gets an odd term of degree n+1 or n+2, so the element is not in it.
fn stab_sample(rng: &mut ChaCha8Rng, f: Field, n: i64, miss: bool, hat: bool) -> GroupElem {
    let zlo = if hat { -1 } else { 1 };
    let x = gs::lelem(rng, f, 0, n / 2);
    let mut z = if n >= zlo { gs::odd(rng, f, zlo, n) } else { LElem::zero(f) };
    if miss {
        let e = if n % 2 == 0 { n + 1 } else { n + 2 };
        z = z.add(&LElem::r_pow(f, e).scale(&gs::nonzero_scalar(rng, f)));
    }
    let g = ua(&HermPair::with_odd(x, &z)).mul(&gs::torus_f(rng, f));
    if n == 0 && !hat && rng.gen_bool(0.5) {
        return gs::soq(rng, f).mul(&g);
    }
    g
}

fn stabilizer(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize) {
    for n in 0..=6 {
        let mut fixed = [0usize; 2];
        for i in 0..samples {
            for (hat, tag) in [(false, SubgroupTag::Gamma), (true, SubgroupTag::HatGamma)] {
                let g = match (i % 2, hat) {
                    (0, _) => stab_sample(rng, f, n, i % 4 == 2, hat),
                    (_, false) => gs::word(rng, f, 6, gs::gamma_gen),
                    (_, true) => gs::word(rng, f, 6, gs::hat_gamma_gen),
                };
                if factor_stabilizer(INF, &g, n).is_some() {
                    fixed[usize::from(hat)] += 1;
                }
                rep.check(&format!("{tag} stabilizer agreement at v_{n}"), stabilizer_check(tag, n, &g), || {
                    g.to_string()
                });
            }
        }
        // samples 0 and 2 are a member and a non-member
        for (k, name) in ["Gamma", "HatGamma"].iter().enumerate().filter(|_| samples >= 3) {
            let ok = fixed[k] > 0 && fixed[k] < samples;
            rep.check(&format!("{name} samples at v_{n} include members and non-members"), ok, || {
                format!("{} of {samples} fixed", fixed[k])
            });
        }
    }
    for i in 0..samples {
        let g = if i % 2 == 0 {
            sl2_embed(&gs::sl2(rng, f)).expect("det one")
        } else {
            gs::word(rng, f, 6, gs::hat_gamma_gen)
        };
        rep.check("Ĝ_-1 agreement", stabilizer_check(SubgroupTag::HatGamma, -1, &g), || g.to_string());
        if i % 2 == 0 {
            let ok = factor_stabilizer(INF, &g, -1).is_some() && member(SubgroupTag::GhatMinus1, &g);
            rep.check("SL2(F) fixes v_-1", ok, || g.to_string());
        }
    }
}

type Gen = fn(&mut ChaCha8Rng, Field) -> GroupElem;

fn domains(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize) {
    let cases: [(SubgroupTag, Gen); 4] = [
        (SubgroupTag::Gamma, gs::gamma_gen),
        (SubgroupTag::HatGamma, gs::hat_gamma_gen),
        (SubgroupTag::Gamma0, gs::gamma0_gen),
        (SubgroupTag::GammaT, gs::gamma_t_gen),
    ];
    for (tag, gen) in cases {
        for _ in 0..samples {
            let n = rng.gen_range(-4..5);
            let base = gs::word(rng, f, 8, gs::tilde_gamma_gen);
            let v = Vertex::new(INF, base.clone(), n);
            let w = gs::word(rng, f, 8, gen);
            let tv = translate(&w, &v);
            let exhibit = || format!("{tag}: {base}@{n} ; {w}");
            let Some((g0, d0)) = rep.check_result("reduction succeeds", reduce_vertex(tag, &v, MAX_DEGREE), exhibit)
            else {
                continue;
            };
            let Some((g1, d1)) = rep.check_result("reduction succeeds", reduce_vertex(tag, &tv, MAX_DEGREE), exhibit)
            else {
                continue;
            };
            let ok = d0.is_valid()
                && member(tag, &g0)
                && vertex_eq(&translate(&g0, &v), &d0.vertex(f));
            rep.check(&format!("{tag} lands in its domain"), ok, exhibit);
            rep.check(&format!("{tag} reduction is orbit-unique"), d0 == d1 && member(tag, &g1), exhibit);
        }
    }
    for n in -6..=6 {
        let v = Vertex::apartment(INF, f, n);
        let ok = vertex_eq(&translate(&elt_sj(f), &v), &Vertex::apartment(INF, f, -n - 2));
        rep.check("sj maps v_n to v_-n-2", ok, || format!("n={n}"));
    }
}

fn amalgams(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize) {
    let rebrackets = samples * 2 / 3;
    for id in ALL_AMALGAMS {
        for i in 0..samples {
            let w = amalgam::sample::word(rng, f, id, 6);
            let g = amalgam::evaluate(f, &w);
            let exhibit = || format!("{id}: {g}");
            let Some(d) = rep.check_result("decomposition succeeds", amalgam::decompose_matrix(id, &g, MAX_DEGREE), exhibit)
            else {
                continue;
            };
            rep.check(&format!("{id} round trip"), amalgam::evaluate(f, &d) == g, exhibit);
            let (Ok(n1), Ok(n2)) = (normal_form(id, &w), normal_form(id, &d)) else {
                rep.check(&format!("{id} normal form"), false, exhibit);
                continue;
            };
            rep.check(&format!("{id} normal form evaluates"), n1.evaluate() == g, exhibit);
            rep.check(&format!("{id} normal form is unique"), n1 == n2, exhibit);
            let alt = n1.letters.windows(2).all(|p| p[0].factor != p[1].factor);
            rep.check(&format!("{id} normal form alternates"), alt, exhibit);
            if id == amalgam::AmalgamId::Gamma0Hecke {
                let c = &n1.prefix;
                rep.check("Gamma0Hecke edge letter is diagonal", *c == atilde(c.get(0, 0)), || c.to_string());
            }
            if i < rebrackets {
                let rb = amalgam::sample::rebracket(rng, f, id, &w);
                let ok = normal_form(id, &rb).is_ok_and(|n| n == n1);
                rep.check(&format!("{id} rebracketing keeps the normal form"), ok, exhibit);
            }
        }
    }
}

fn abelian(rep: &mut Report, rng: &mut ChaCha8Rng, f: Field, samples: usize) {
    let z = gs::odd(rng, f, 1, 5);
    rep.check("ab_UJ kills u2a", ab_uj(&mk_u2a(z.clone()).unwrap()).is_ok_and(|x| x.is_zero()), || {
        format!("u2a({z})")
    });
    let g = mk_ua(LElem::r(f), LElem::t(f).scale(&f.ratio(1, 2))).unwrap();
    rep.check("ab_UJ reads x", ab_uj(&g).is_ok_and(|x| x == LElem::r(f)), || g.to_string());
    for _ in 0..samples {
        let (p, q) = (gs::herm_j(rng, f), gs::herm_j(rng, f));
        let (a, b) = (ua(&p), ua(&q));
        let ok = match (ab_uj(&a), ab_uj(&b), ab_uj(&a.mul(&b))) {
            (Ok(x), Ok(y), Ok(s)) => s == x.add(&y),
            _ => false,
        };
        rep.check("ab_UJ is a homomorphism", ok, || format!("{a} ; {b}"));

        let g = gs::word(rng, f, 3, gs::gamma_t_gen);
        let h = gs::word(rng, f, 3, gs::gamma_t_gen);
        let ok = match (
            ab_gamma_t(&g, MAX_DEGREE),
            ab_gamma_t(&h, MAX_DEGREE),
            ab_gamma_t(&g.mul(&h), MAX_DEGREE),
        ) {
            (Ok(mut x), Ok(y), Ok(s)) => {
                for (k, v) in y {
                    add_into(&mut x, k, &v);
                }
                x.retain(|_, v| !v.is_zero());
                x == s
            }
            _ => false,
        };
        rep.check("ab_gammaT is a homomorphism", ok, || format!("{g} ; {h}"));

        let b1 = ua(&gs::herm_s(rng, f)).mul(&gs::torus_f(rng, f));
        let b2 = ua(&gs::herm_s(rng, f)).mul(&gs::torus_f(rng, f));
        let ok = match (torus_part(&b1), torus_part(&b2), torus_part(&b1.mul(&b2))) {
            (Ok(x), Ok(y), Ok(s)) => s == x.mul(&y),
            _ => false,
        };
        rep.check("torus_part is multiplicative", ok, || format!("{b1} ; {b2}"));
    }
    for _ in 0..samples / 2 {
        let z = gs::odd(rng, f, 1, 7);
        let r = commutator_u2a(&z);
        let ok = r.as_ref().is_ok_and(|(g1, g2)| {
            mk_u2a(z.clone()).is_ok_and(|w| commutator(g1, g2) == w)
        });
        rep.check("commutator_u2a round trip", ok, || format!("u2a({z})"));
        // g₂ is in U_J exactly when z has no √t term
        let in_uj = r.is_ok_and(|(g1, g2)| member(SubgroupTag::UJ, &g1) && member(SubgroupTag::UJ, &g2));
        let no_linear = z.coeff_at_zero(1).is_zero();
        rep.check("commutator_u2a lies in U_J iff p(0) = 0", in_uj == no_linear, || format!("u2a({z})"));
    }
    for _ in 0..samples * 3 / 2 {
        let g = gs::word(rng, f, 4, gs::gamma0_gen);
        let h = gs::word(rng, f, 4, gs::gamma0_gen);
        let c = commutator(&g, &h);
        rep.check(
            "h1_class_gamma0 kills commutators",
            h1_class_gamma0(&c, MAX_DEGREE).is_ok_and(|x| x.is_one()),
            || format!("{g} ; {h}"),
        );
    }
    let mut hit = BTreeSet::new();
    let mut tries = 0;
    while hit.len() < 20 && tries < 200 {
        tries += 1;
        let l = gs::nonzero_scalar(rng, f);
        if hit.contains(&l) {
            continue;
        }
        // a B-letter and a B⁻-letter whose torus parts multiply to λ
        let b = ua(&gs::herm_s(rng, f)).mul(&gs::torus_f(rng, f));
        let l2 = l.div(&torus_part(&b).expect("borel"));
        let w = b.mul(&uma(&gs::herm_j(rng, f))).mul(&atilde(&LElem::scalar(l2)));
        let ok = h1_class_gamma0(&w, MAX_DEGREE).is_ok_and(|x| x == l);
        rep.check("h1_class_gamma0 surjectivity witness", ok, || w.to_string());
        if ok {
            hit.insert(l);
        }
    }
    rep.check("20 distinct surjectivity witnesses", hit.len() >= 20, || format!("{} found", hit.len()));
}

fn h1(rep: &mut Report, f: Field, samples: usize, seed: u64) -> Result<()> {
    use AbGroupExpr::*;
    let expected = [
        UnitsModSquares,
        Trivial,
        UnitsF,
        Trivial,
        DirectSumOverP1(Box::new(ModuleJ)),
    ];
    for (id, want) in ALL_AMALGAMS.iter().zip(expected) {
        let (v, r) = h1_of_amalgam(*id, f, samples, seed)?;
        rep.check(&format!("H1 of {id} is {want}"), v == want, || format!("got {v}"));
        rep.merge(r);
    }
    rep.merge(check_semidirect(f, samples, seed));
    Ok(())
}

fn bound(rep: &mut Report) {
    for (r, s, want) in [(1, 0, (3, 4)), (0, 1, (4, 5)), (0, 0, (1, 2)), (2, 3, (14, 15))] {
        let got = vanishing_bound(SignatureInput { r, s });
        rep.check("vanishing bound", got == want, || format!("r={r} s={s} gave {got:?}"));
    }
}
