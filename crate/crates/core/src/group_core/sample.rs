//! Random elements for property checks. Degrees are kept small so that
//! products of a few letters stay cheap.

use rand::Rng;

use crate::exact_arith::{Field, LElem, Scalar};

use super::elem::{atilde, elt_s, elt_sj, ua, uma, GroupElem, HermPair};
use super::psi::{g_label, psi_pgl2, sl2_embed, Mat2, P1};

pub fn scalar<R: Rng>(rng: &mut R, f: Field) -> Scalar {
    match f {
        Field::Q => {
            let n = rng.gen_range(-5..=5);
            let d = rng.gen_range(1..=3);
            f.ratio(n, d)
        }
        Field::Fp(p) => f.int(rng.gen_range(0..p) as i64),
    }
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R, f: Field) -> Scalar {
    loop {
        let s = scalar(rng, f);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Σ c_k·√t^k over lo ≤ k ≤ hi, with k restricted to the given parity step.
fn laurent<R: Rng>(rng: &mut R, f: Field, lo: i64, hi: i64, only_odd: bool) -> LElem {
    let mut acc = LElem::zero(f);
    for k in lo..=hi {
        if only_odd && k.rem_euclid(2) == 0 {
            continue;
        }
        if rng.gen_bool(0.6) {
            acc = acc.add(&LElem::r_pow(f, k).scale(&scalar(rng, f)));
        }
    }
    acc
}

/// An element of √t^lo·F[√t] of degree ≤ hi.
pub fn lelem<R: Rng>(rng: &mut R, f: Field, lo: i64, hi: i64) -> LElem {
    laurent(rng, f, lo, hi, false)
}

/// A trace-zero element with exponents in [lo, hi].
pub fn odd<R: Rng>(rng: &mut R, f: Field, lo: i64, hi: i64) -> LElem {
    laurent(rng, f, lo, hi, true)
}

pub fn nonzero_lelem<R: Rng>(rng: &mut R, f: Field, lo: i64, hi: i64) -> LElem {
    loop {
        let x = lelem(rng, f, lo, hi);
        if !x.is_zero() {
            return x;
        }
    }
}

/// (x, y) with x of exponents in [x_lo, x_hi] and the odd part of y in [z_lo, z_hi].
pub fn herm<R: Rng>(rng: &mut R, f: Field, x_lo: i64, x_hi: i64, z_lo: i64, z_hi: i64) -> HermPair {
    let x = lelem(rng, f, x_lo, x_hi);
    let z = odd(rng, f, z_lo, z_hi);
    HermPair::with_odd(x, &z)
}

/// Pairs in H(L,K) with both entries in F[√t].
pub fn herm_s<R: Rng>(rng: &mut R, f: Field) -> HermPair {
    herm(rng, f, 0, 2, 1, 3)
}

/// Pairs with x ∈ F[√t] and y ∈ √t⁻¹F[√t].
pub fn herm_s_jinv<R: Rng>(rng: &mut R, f: Field) -> HermPair {
    herm(rng, f, 0, 2, -1, 3)
}

/// Pairs with both entries in √t·F[√t].
pub fn herm_j<R: Rng>(rng: &mut R, f: Field) -> HermPair {
    herm(rng, f, 1, 2, 1, 3)
}

/// Pairs with entries in L, used for identity checks.
pub fn herm_l<R: Rng>(rng: &mut R, f: Field) -> HermPair {
    let x = lelem(rng, f, -2, 2);
    let den = LElem::one(f).add(&LElem::r(f).scale(&nonzero_scalar(rng, f)));
    let x = if rng.gen_bool(0.3) { x.div(&den) } else { x };
    let z = odd(rng, f, -3, 3);
    HermPair::with_odd(x, &z)
}

pub fn gl2<R: Rng>(rng: &mut R, f: Field) -> Mat2 {
    loop {
        let m = Mat2::new(scalar(rng, f), scalar(rng, f), scalar(rng, f), scalar(rng, f));
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn sl2<R: Rng>(rng: &mut R, f: Field) -> Mat2 {
    let m = gl2(rng, f);
    let d = m.det().inv();
    Mat2::new(m.0[0][0].mul(&d), m.0[0][1].mul(&d), m.0[1][0].clone(), m.0[1][1].clone())
}

pub fn soq<R: Rng>(rng: &mut R, f: Field) -> GroupElem {
    psi_pgl2(&gl2(rng, f)).expect("invertible")
}

pub fn torus_f<R: Rng>(rng: &mut R, f: Field) -> GroupElem {
    atilde(&LElem::scalar(nonzero_scalar(rng, f)))
}

pub fn gamma_gen<R: Rng>(rng: &mut R, f: Field) -> GroupElem {
    match rng.gen_range(0..5) {
        0 | 1 => ua(&herm_s(rng, f)),
        2 => torus_f(rng, f),
        3 => elt_s(f),
        _ => soq(rng, f),
    }
}

pub fn hat_gamma_gen<R: Rng>(rng: &mut R, f: Field) -> GroupElem {
    match rng.gen_range(0..5) {
        0 | 1 => ua(&herm_s_jinv(rng, f)),
        2 => torus_f(rng, f),
        3 => elt_sj(f),
        _ => sl2_embed(&sl2(rng, f)).expect("det one"),
    }
}

pub fn gamma0_gen<R: Rng>(rng: &mut R, f: Field) -> GroupElem {
    match rng.gen_range(0..3) {
        0 => ua(&herm_s(rng, f)),
        1 => uma(&herm_j(rng, f)),
        _ => torus_f(rng, f),
    }
}

pub fn p1<R: Rng>(rng: &mut R, f: Field) -> P1 {
    if rng.gen_bool(0.2) {
        P1::Inf
    } else {
        P1::Fin(scalar(rng, f))
    }
}

pub fn gamma_t_gen<R: Rng>(rng: &mut R, f: Field) -> GroupElem {
    let x = p1(rng, f);
    ua(&herm_j(rng, f)).conj_by(&g_label(f, &x))
}

pub fn tilde_gamma_gen<R: Rng>(rng: &mut R, f: Field) -> GroupElem {
    if rng.gen_bool(0.5) {
        gamma_gen(rng, f)
    } else {
        hat_gamma_gen(rng, f)
    }
}

/// A product of between 1 and `max_len` generators.
pub fn word<R: Rng>(
    rng: &mut R,
    f: Field,
    max_len: usize,
    gen: impl Fn(&mut R, Field) -> GroupElem,
) -> GroupElem {
    let len = rng.gen_range(1..=max_len);
    let mut g = GroupElem::identity(f);
    for _ in 0..len {
        g = g.mul(&gen(rng, f));
    }
    g
}
