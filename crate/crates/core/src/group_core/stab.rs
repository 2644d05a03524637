//! Factorization of vertex stabilizers as U₋ₐ,ₙ·Uₐ,ₙ·Nₙ.

use crate::exact_arith::{HalfInt, LElem, Place};

use super::elem::{atilde, elt_s, ua, uma, GroupElem, HermPair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabBranch {
    /// m = ã(λ)
    Torus(LElem),
    /// m = ã(λ)·s
    Reflected(LElem),
}

/// p = u₋ₐ(lower)·uₐ(upper)·m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabFactor {
    pub lower: HermPair,
    pub upper: HermPair,
    pub branch: StabBranch,
}

impl StabFactor {
    pub fn n_part(&self) -> GroupElem {
        match &self.branch {
            StabBranch::Torus(l) => atilde(l),
            StabBranch::Reflected(l) => atilde(l).mul(&elt_s(l.field())),
        }
    }

    pub fn recompose(&self) -> GroupElem {
        uma(&self.lower).mul(&ua(&self.upper)).mul(&self.n_part())
    }
}

/// Splits q = u₋ₐ(u, v)·uₐ(x, y)·ã(λ) when q₁₁ ≠ 0.
fn ldu(q: &GroupElem) -> Option<(HermPair, HermPair, LElem)> {
    let l = q.get(0, 0).clone();
    if l.is_zero() {
        return None;
    }
    let lb = l.conj();
    let u = q.get(1, 0).div(&l);
    let v = q.get(2, 0).div(&l);
    let x = q.get(0, 1).mul(&l).div(&lb).neg().conj();
    let y = q.get(0, 2).mul(&lb);
    let lower = HermPair::new(u, v).ok()?;
    let upper = HermPair::new(x, y).ok()?;
    Some((lower, upper, l))
}

fn bounds_ok(place: Place, lower: &HermPair, upper: &HermPair, n: i64) -> bool {
    lower.y.val(place) >= HalfInt::from_twice(n) && upper.y.val(place) >= HalfInt::from_twice(-n)
}

/// Decides whether p fixes vₙ at the place, returning the factorization.
pub fn factor_stabilizer(place: Place, p: &GroupElem, n: i64) -> Option<StabFactor> {
    if let Some((lower, upper, l)) = ldu(p) {
        if l.val(place) == HalfInt::from_twice(0) && bounds_ok(place, &lower, &upper, n) {
            let f = StabFactor {
                lower,
                upper,
                branch: StabBranch::Torus(l),
            };
            if f.recompose() == *p {
                return Some(f);
            }
        }
    }
    let q = p.mul(&elt_s(p.field()));
    if let Some((lower, upper, l)) = ldu(&q) {
        if l.val(place) == HalfInt::from_twice(-n) && bounds_ok(place, &lower, &upper, n) {
            let f = StabFactor {
                lower,
                upper,
                branch: StabBranch::Reflected(l),
            };
            if f.recompose() == *p {
                return Some(f);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Field;

    const Q: Field = Field::Q;

    #[test]
    fn examples() {
        let id = GroupElem::identity(Q);
        for n in -3..4 {
            let f = factor_stabilizer(Place::Infinity, &id, n).unwrap();
            assert_eq!(f.branch, StabBranch::Torus(LElem::one(Q)));
        }
        let g = ua(&HermPair::new(LElem::one(Q), LElem::ratio(Q, -1, 2)).unwrap());
        let f = factor_stabilizer(Place::Infinity, &g, 1).unwrap();
        assert_eq!(f.upper.x, LElem::one(Q));
        assert_eq!(f.upper.y, LElem::ratio(Q, -1, 2));
        let f = factor_stabilizer(Place::Infinity, &elt_s(Q), 0).unwrap();
        assert_eq!(f.branch, StabBranch::Reflected(LElem::one(Q)));
        assert!(factor_stabilizer(Place::Infinity, &elt_s(Q), 1).is_none());
        assert!(factor_stabilizer(Place::Infinity, &atilde(&LElem::r(Q)), 0).is_none());
    }
}
