//! Vertices g·vₙ of the trees at 0 and ∞ and their horocyclic coordinates.

use crate::exact_arith::{snf_local, HalfInt, LElem, Mat3, Place};
use crate::group_core::{atilde, elt_s, GroupElem, HermPair};

/// The vertex g·vₙ of the tree at `place`.
#[derive(Clone, Debug)]
pub struct Vertex {
    pub place: Place,
    pub g: GroupElem,
    pub n: i64,
}

impl Vertex {
    pub fn new(place: Place, g: GroupElem, n: i64) -> Vertex {
        Vertex { place, g, n }
    }

    pub fn apartment(place: Place, field: crate::exact_arith::Field, n: i64) -> Vertex {
        Vertex::new(place, GroupElem::identity(field), n)
    }
}

/// An element of valuation −1/2 at the place: √t at ∞, 1/√t at 0.
pub fn unif_inv(place: Place, field: crate::exact_arith::Field) -> LElem {
    match place {
        Place::Infinity => LElem::r(field),
        Place::Zero => LElem::r_pow(field, -1),
    }
}

/// ã(λ) moves vₙ to v_{n − 4ν(λ)}; this is the power of `unif_inv` that
/// moves v₀ to v_{2k}.
pub fn shift(place: Place, field: crate::exact_arith::Field, k: i64) -> GroupElem {
    atilde(&unif_inv(place, field).pow(k))
}

pub fn translate(g: &GroupElem, v: &Vertex) -> Vertex {
    Vertex::new(v.place, g.mul(&v.g), v.n)
}

/// Index shift of ã(λ): −4ν(λ), i.e. −2 times the twice-value.
pub fn atilde_shift(place: Place, l: &LElem) -> i64 {
    -2 * l.val(place).twice().expect("nonzero torus parameter")
}

pub fn vertex_eq(a: &Vertex, b: &Vertex) -> bool {
    assert_eq!(a.place, b.place, "vertices at different places");
    if (a.n - b.n).rem_euclid(2) != 0 {
        return false;
    }
    let w = shift(a.place, a.g.field(), (b.n - a.n) / 2);
    let p = b.g.inv().mul(&a.g).mul(&w.inv());
    crate::group_core::factor_stabilizer(a.place, &p, b.n).is_some()
}

/// w = uₐ(x, y)·v_m, with the branch point v_{j₀} of w off the apartment.
#[derive(Clone, Debug)]
pub struct Horo {
    pub pair: HermPair,
    pub m: i64,
    /// −2ν(y): uₐ(x, y) fixes v_j exactly for j ≥ jstar; `None` when y = 0.
    pub jstar: Option<i64>,
}

impl Horo {
    /// Index of the projection of w onto the apartment.
    pub fn j0(&self) -> i64 {
        match self.jstar {
            Some(j) => j.max(self.m),
            None => self.m,
        }
    }

    pub fn off_apartment(&self) -> i64 {
        self.j0() - self.m
    }

    pub fn on_apartment(&self) -> bool {
        self.off_apartment() == 0
    }

    /// Distance from w to v_b.
    pub fn dist_to(&self, b: i64) -> i64 {
        self.off_apartment() + (self.j0() - b).abs()
    }
}

/// Writes g·vₙ = b·v_e with b = uₐ(x, y)·ã(λ) upper triangular.
///
/// With h = g·ã(π⁻ᵏ)·M (M ∈ {1, s, ã(π⁻¹)s} fixing v_e) and ℓ = h⁻¹e₁, the
/// factor u₋ₐ(ℓ₂/ℓ₁, ℓ₃/ℓ₁) fixes v_e whenever ν(ℓ₃/ℓ₁) ≥ e/2, and then
/// b = h·u₋ₐ(…) has λ = 1/ℓ₁, y = h₁₃/ℓ̄₁, x = h₂₃/ℓ̄₁.
pub fn horocyclic(place: Place, g: &GroupElem, n: i64) -> Horo {
    let f = g.field();
    let (k, e) = (n.div_euclid(2), n.rem_euclid(2));
    let h0 = g.mul(&shift(place, f, k));
    let candidates = [
        None,
        Some(if e == 0 {
            elt_s(f)
        } else {
            atilde(&unif_inv(place, f)).mul(&elt_s(f))
        }),
    ];
    for m in candidates {
        let h = match &m {
            None => h0.clone(),
            Some(m) => h0.mul(m),
        };
        // ℓ = Φ·h*·Φ·e₁ is the conjugate of the last row of h, reversed.
        let l1 = h.get(2, 2).conj();
        let l3 = h.get(2, 0).conj();
        let (v1, v3) = (l1.val(place), l3.val(place));
        if v1.is_infinite() || v3 < v1.add(HalfInt::from_twice(e)) {
            continue;
        }
        let lb = l1.conj();
        let pair = HermPair {
            x: h.get(1, 2).div(&lb),
            y: h.get(0, 2).div(&lb),
        };
        let m = e + 2 * v1.twice().unwrap();
        let jstar = pair.y.val(place).twice().map(|t| -t);
        return Horo { pair, m, jstar };
    }
    unreachable!("an isotropic line always meets one of the two cells")
}

/// d(v₀, g·vₙ).
pub fn distance(place: Place, g: &GroupElem, n: i64) -> i64 {
    horocyclic(place, g, n).dist_to(0)
}

/// d(v₀, g·vₙ) from the elementary divisors of a lattice basis of g·vₙ.
pub fn distance_snf(place: Place, g: &GroupElem, n: i64) -> i64 {
    let f = g.field();
    let (k, e) = (n.div_euclid(2), n.rem_euclid(2));
    let mut r = shift(place, f, k).mat().clone();
    if e == 1 {
        let pi = unif_inv(place, f).inv();
        let d = Mat3::diag(LElem::one(f), LElem::one(f), pi);
        r = r.mul(&d);
    }
    let m = g.mat().mul(&r);
    snf_local(place, &m).expect("invertible").spread()
}
