//! Group elements, hermitian pairs and the root-group generators.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::exact_arith::{Field, LElem, Mat3};

/// A pair (x, y) with N(x) + Tr(y) = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermPair {
    pub x: LElem,
    pub y: LElem,
}

impl HermPair {
    pub fn new(x: LElem, y: LElem) -> Result<HermPair> {
        if !x.norm().add(&y.trace()).is_zero() {
            return Err(Error::Invariant(format!(
                "N({x}) + Tr({y}) = {} is not zero",
                x.norm().add(&y.trace())
            )));
        }
        Ok(HermPair { x, y })
    }

    /// The pair (x, −N(x)/2 + z) for z of trace zero.
    pub fn with_odd(x: LElem, z: &LElem) -> HermPair {
        let half = x.field().ratio(-1, 2);
        let y = x.norm().scale(&half).add(z);
        debug_assert!(z.trace().is_zero());
        HermPair { x, y }
    }

    pub fn zero(field: Field) -> HermPair {
        HermPair {
            x: LElem::zero(field),
            y: LElem::zero(field),
        }
    }
}

/// An element of SU₃ for the hermitian form with Gram matrix Φ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    m: Mat3,
}

pub fn is_isometry(m: &Mat3) -> bool {
    let phi = Mat3::phi(m.field());
    m.mul(&phi).mul(&m.conj_transpose()) == phi
}

pub fn det_one(m: &Mat3) -> bool {
    m.det().is_one()
}

impl GroupElem {
    pub fn new(m: Mat3) -> Result<GroupElem> {
        if !is_isometry(&m) {
            return Err(Error::Invariant("g Φ g* ≠ Φ".into()));
        }
        if !det_one(&m) {
            return Err(Error::Invariant("det(g) ≠ 1".into()));
        }
        Ok(GroupElem { m })
    }

    /// Wraps a matrix known to satisfy the invariants.
    pub(crate) fn trusted(m: Mat3) -> GroupElem {
        GroupElem { m }
    }

    pub fn identity(field: Field) -> GroupElem {
        GroupElem {
            m: Mat3::identity(field),
        }
    }

    pub fn mat(&self) -> &Mat3 {
        &self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &LElem {
        self.m.get(i, j)
    }

    pub fn field(&self) -> Field {
        self.m.field()
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }

    pub fn mul(&self, o: &GroupElem) -> GroupElem {
        GroupElem { m: self.m.mul(&o.m) }
    }

    /// g⁻¹ = Φ·ḡᵗ·Φ.
    pub fn inv(&self) -> GroupElem {
        let phi = Mat3::phi(self.field());
        GroupElem {
            m: phi.mul(&self.m.conj_transpose()).mul(&phi),
        }
    }

    pub fn conj_by(&self, h: &GroupElem) -> GroupElem {
        h.mul(self).mul(&h.inv())
    }

    pub fn pow(&self, k: i64) -> GroupElem {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut r = GroupElem::identity(self.field());
        for _ in 0..k.unsigned_abs() {
            r = r.mul(&base);
        }
        r
    }

    pub fn check_degree(&self, limit: usize) -> Result<()> {
        self.m.check_degree(limit)
    }
}

impl Mul<&GroupElem> for &GroupElem {
    type Output = GroupElem;
    fn mul(self, o: &GroupElem) -> GroupElem {
        GroupElem::mul(self, o)
    }
}

/// Prints in the expression grammar, `mat(a; b; c; d; e; f; g; h; i)`.
impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.m.entries().map(|x| x.to_string()).collect();
        write!(f, "mat({})", e.join("; "))
    }
}

/// [a, b] = a·b·a⁻¹·b⁻¹.
pub fn commutator(a: &GroupElem, b: &GroupElem) -> GroupElem {
    a.mul(b).mul(&a.inv()).mul(&b.inv())
}

/// uₐ(x, y) = [[1, −x̄, y], [0, 1, x], [0, 0, 1]].
pub fn ua(p: &HermPair) -> GroupElem {
    let f = p.x.field();
    let (o, z) = (LElem::one(f), LElem::zero(f));
    GroupElem::trusted(Mat3::from_rows([
        [o.clone(), p.x.conj().neg(), p.y.clone()],
        [z.clone(), o.clone(), p.x.clone()],
        [z.clone(), z, o],
    ]))
}

pub fn mk_ua(x: LElem, y: LElem) -> Result<GroupElem> {
    Ok(ua(&HermPair::new(x, y)?))
}

/// u₂ₐ(v) = uₐ(0, v) for v of trace zero.
pub fn mk_u2a(v: LElem) -> Result<GroupElem> {
    if !v.trace().is_zero() {
        return Err(Error::Invariant(format!("Tr({v}) is not zero")));
    }
    Ok(ua(&HermPair {
        x: LElem::zero(v.field()),
        y: v,
    }))
}

/// u₋ₐ(u, v) = s·uₐ(u, v)·s = [[1, 0, 0], [u, 1, 0], [v, −ū, 1]].
pub fn uma(p: &HermPair) -> GroupElem {
    let f = p.x.field();
    let (o, z) = (LElem::one(f), LElem::zero(f));
    GroupElem::trusted(Mat3::from_rows([
        [o.clone(), z.clone(), z.clone()],
        [p.x.clone(), o.clone(), z],
        [p.y.clone(), p.x.conj().neg(), o],
    ]))
}

pub fn mk_uma(x: LElem, y: LElem) -> Result<GroupElem> {
    Ok(uma(&HermPair::new(x, y)?))
}

/// ã(λ) = diag(λ, λ̄/λ, 1/λ̄).
pub fn atilde(l: &LElem) -> GroupElem {
    let lb = l.conj();
    GroupElem::trusted(Mat3::diag(l.clone(), lb.div(l), lb.inv()))
}

pub fn mk_atilde(l: LElem) -> Result<GroupElem> {
    if l.is_zero() {
        return Err(Error::Invariant("ã(0) is undefined".into()));
    }
    Ok(atilde(&l))
}

pub fn elt_s(field: Field) -> GroupElem {
    let m = LElem::int(field, -1);
    GroupElem::trusted(Mat3::antidiag(m.clone(), m.clone(), m))
}

/// s_J = [[0, 0, −1/√t], [0, 1, 0], [√t, 0, 0]].
pub fn elt_sj(field: Field) -> GroupElem {
    let z = LElem::zero(field);
    GroupElem::trusted(Mat3::from_rows([
        [z.clone(), z.clone(), LElem::r_pow(field, -1).neg()],
        [z.clone(), LElem::one(field), z.clone()],
        [LElem::r(field), z.clone(), z],
    ]))
}

/// Reads (x, y) off an upper unitriangular group element.
pub fn ua_params(g: &GroupElem) -> Option<HermPair> {
    let m = g.mat();
    let unit = m.is_upper_triangular() && (0..3).all(|i| m.get(i, i).is_one());
    unit.then(|| HermPair {
        x: m.get(1, 2).clone(),
        y: m.get(0, 2).clone(),
    })
}

/// Splits an upper triangular group element as uₐ(x, y)·ã(λ).
pub fn split_borel(g: &GroupElem) -> Option<(HermPair, LElem)> {
    let m = g.mat();
    if !m.is_upper_triangular() {
        return None;
    }
    let l = m.get(0, 0).clone();
    let u = g.mul(&atilde(&l).inv());
    let p = ua_params(&u).expect("unipotent part");
    Some((p, l))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Q;

    #[test]
    fn generator_examples() {
        assert!(mk_ua(LElem::zero(Q), LElem::zero(Q)).unwrap().is_identity());
        assert!(mk_ua(LElem::one(Q), LElem::ratio(Q, -1, 2)).is_ok());
        assert!(mk_ua(LElem::r(Q), LElem::t(Q).scale(&Q.ratio(-1, 2))).is_err());
        let s = elt_s(Q);
        assert!(s.mul(&s).is_identity());
        assert!(is_isometry(s.mat()));
        assert!(is_isometry(elt_sj(Q).mat()) && det_one(elt_sj(Q).mat()));
        let d = Mat3::diag(LElem::int(Q, 2), LElem::one(Q), LElem::one(Q));
        assert!(!is_isometry(&d));
    }

    #[test]
    fn inverse_examples() {
        let g = mk_ua(LElem::one(Q), LElem::ratio(Q, -1, 2)).unwrap();
        let h = mk_ua(LElem::int(Q, -1), LElem::ratio(Q, -1, 2)).unwrap();
        assert_eq!(g.inv(), h);
        assert!(g.mul(&h).is_identity());
        let l = LElem::one(Q).add(&LElem::r(Q));
        assert_eq!(atilde(&l).inv(), atilde(&l.inv()));
    }

    #[test]
    fn sj_is_atilde_times_s() {
        let lhs = atilde(&LElem::r_pow(Q, -1)).mul(&elt_s(Q));
        assert_eq!(lhs, elt_sj(Q));
    }
}
