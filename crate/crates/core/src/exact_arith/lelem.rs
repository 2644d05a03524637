//! Elements of L = F(√t) as reduced fractions of polynomials in r = √t.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::scalar::{Field, Scalar};
use crate::error::Error;

/// One of the two places of K = F(t) considered here. Both ramify in L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Place {
    Zero,
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Zero => write!(f, "zero"),
            Place::Infinity => write!(f, "infinity"),
        }
    }
}

/// A half-integer valuation, stored doubled; `None` is +∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfInt(pub Option<i64>);

impl HalfInt {
    pub const INFINITY: HalfInt = HalfInt(None);

    pub fn from_twice(tv: i64) -> HalfInt {
        HalfInt(Some(tv))
    }

    pub fn twice(self) -> Option<i64> {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_none()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, o: HalfInt) -> HalfInt {
        match (self.0, o.0) {
            (Some(a), Some(b)) => HalfInt(Some(a + b)),
            _ => HalfInt(None),
        }
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.0, other.0) {
            (Some(a), Some(b)) => a.cmp(&b),
            (None, None) => std::cmp::Ordering::Equal,
            (None, _) => std::cmp::Ordering::Greater,
            (_, None) => std::cmp::Ordering::Less,
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "inf"),
            Some(v) if v % 2 == 0 => write!(f, "{}", v / 2),
            Some(v) => write!(f, "{v}/2"),
        }
    }
}

/// Canonical form: `den` is monic and coprime to `num`; zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LElem {
    num: Poly,
    den: Poly,
}

impl LElem {
    pub fn zero(field: Field) -> LElem {
        LElem {
            num: Poly::zero(field),
            den: Poly::one(field),
        }
    }

    pub fn one(field: Field) -> LElem {
        LElem::scalar(field.one())
    }

    pub fn scalar(s: Scalar) -> LElem {
        let field = s.field();
        LElem {
            num: Poly::constant(s),
            den: Poly::one(field),
        }
    }

    pub fn int(field: Field, n: i64) -> LElem {
        LElem::scalar(field.int(n))
    }

    pub fn ratio(field: Field, n: i64, d: i64) -> LElem {
        LElem::scalar(field.ratio(n, d))
    }

    /// √t.
    pub fn r(field: Field) -> LElem {
        LElem::r_pow(field, 1)
    }

    /// t.
    pub fn t(field: Field) -> LElem {
        LElem::r_pow(field, 2)
    }

    /// √t^k for any integer k.
    pub fn r_pow(field: Field, k: i64) -> LElem {
        let m = Poly::monomial(field.one(), k.unsigned_abs() as usize);
        if k >= 0 {
            LElem::from_poly(m)
        } else {
            LElem {
                num: Poly::one(field),
                den: m,
            }
        }
    }

    pub fn from_poly(p: Poly) -> LElem {
        let field = p.field();
        LElem {
            num: p,
            den: Poly::one(field),
        }
    }

    /// Builds `num/den` in canonical form; panics if `den` is zero.
    pub fn from_fraction(num: Poly, den: Poly) -> LElem {
        assert!(!den.is_zero(), "zero denominator");
        let field = num.field();
        if num.is_zero() {
            return LElem::zero(field);
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else if den.is_monic_monomial() {
            let k = den.ord().unwrap().min(num.ord().unwrap());
            (num.unshift(k), den.unshift(k))
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.divrem(&g).0, den.divrem(&g).0)
            }
        };
        let lc = den.lc();
        if lc.is_one() {
            LElem { num, den }
        } else {
            let inv = lc.inv();
            LElem {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn field(&self) -> Field {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True for elements of F[√t].
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// True for elements of F[√t, 1/√t].
    pub fn is_laurent(&self) -> bool {
        self.den.is_monic_monomial()
    }

    /// The constant value when the element lies in F.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(self.field().zero());
        }
        if self.den.is_one() && self.num.deg() == Some(0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Lowest exponent k with a nonzero coefficient for Laurent elements.
    pub fn laurent_ord(&self) -> Option<i64> {
        if !self.is_laurent() {
            return None;
        }
        self.num
            .ord()
            .map(|o| o as i64 - self.den.deg().unwrap() as i64)
    }

    /// Coefficient of √t^k for Laurent elements.
    pub fn laurent_coeff(&self, k: i64) -> Scalar {
        assert!(self.is_laurent(), "not a Laurent polynomial");
        let idx = k + self.den.deg().unwrap() as i64;
        if idx < 0 {
            self.field().zero()
        } else {
            self.num.coeff(idx as usize)
        }
    }

    /// Largest of the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num.deg().unwrap_or(0).max(self.den.deg().unwrap_or(0))
    }

    pub fn check_degree(&self, limit: usize) -> Result<(), Error> {
        let d = self.degree();
        if d > limit {
            Err(Error::DegreeOverflow { degree: d, limit })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, o: &LElem) -> LElem {
        if self.den == o.den {
            return LElem::from_fraction(self.num.add(&o.num), self.den.clone());
        }
        LElem::from_fraction(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> LElem {
        LElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &LElem) -> LElem {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &LElem) -> LElem {
        if self.is_zero() || o.is_zero() {
            return LElem::zero(self.field());
        }
        if self.den.is_one() && o.den.is_one() {
            return LElem::from_poly(self.num.mul(&o.num));
        }
        LElem::from_fraction(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> LElem {
        assert!(!self.is_zero(), "inverse of zero");
        LElem::from_fraction(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &LElem) -> LElem {
        self.mul(&o.inv())
    }

    pub fn scale(&self, s: &Scalar) -> LElem {
        if s.is_zero() {
            return LElem::zero(self.field());
        }
        LElem {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: i64) -> LElem {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut r = LElem::one(self.field());
        for _ in 0..k.unsigned_abs() {
            r = r.mul(&base);
        }
        r
    }

    /// The nontrivial automorphism of L over K: √t ↦ −√t.
    pub fn conj(&self) -> LElem {
        LElem::from_fraction(self.num.conj(), self.den.conj())
    }

    pub fn norm(&self) -> LElem {
        self.mul(&self.conj())
    }

    pub fn trace(&self) -> LElem {
        self.add(&self.conj())
    }

    /// True when the element lies in K = F(t).
    pub fn in_k(&self) -> bool {
        self.num.has_only_even_powers() && self.den.has_only_even_powers()
    }

    /// The K-component: (x + x̄)/2.
    pub fn even_part(&self) -> LElem {
        self.trace().scale(&self.field().ratio(1, 2))
    }

    /// The trace-zero component: (x − x̄)/2.
    pub fn odd_part(&self) -> LElem {
        self.sub(&self.conj()).scale(&self.field().ratio(1, 2))
    }

    /// Valuation at the place, in half-integers (ν(√t) = ±1/2).
    pub fn val(&self, place: Place) -> HalfInt {
        if self.is_zero() {
            return HalfInt::INFINITY;
        }
        let tv = match place {
            Place::Zero => self.num.ord().unwrap() as i64 - self.den.ord().unwrap() as i64,
            Place::Infinity => self.den.deg().unwrap() as i64 - self.num.deg().unwrap() as i64,
        };
        HalfInt::from_twice(tv)
    }

    /// The leading coefficient of the expansion in the uniformizer π at the
    /// place (π = √t at zero, π = 1/√t at infinity); zero for zero.
    pub fn residue_lead(&self, place: Place) -> Scalar {
        if self.is_zero() {
            return self.field().zero();
        }
        match place {
            Place::Zero => {
                let a = self.num.coeff(self.num.ord().unwrap());
                let b = self.den.coeff(self.den.ord().unwrap());
                a.div(&b)
            }
            Place::Infinity => self.num.lc().div(&self.den.lc()),
        }
    }

    /// Coefficient of √t^k in the expansion at zero, for elements with
    /// 2ν₀ ≥ k (so the coefficient is a residue).
    pub fn coeff_at_zero(&self, k: i64) -> Scalar {
        let y = self.mul(&LElem::r_pow(self.field(), -k));
        match y.val(Place::Zero).twice() {
            None => self.field().zero(),
            Some(v) if v > 0 => self.field().zero(),
            Some(0) => y.residue_lead(Place::Zero),
            Some(_) => panic!("coefficient below the valuation"),
        }
    }

    /// The part of the expansion at infinity made of powers √t^j with
    /// j ≥ e; the remainder x − part has 2ν∞ > −e.
    pub fn part_at_infinity(&self, e: i64) -> LElem {
        let field = self.field();
        let y = self.mul(&LElem::r_pow(field, -e));
        let (q, _) = y.num.divrem(&y.den);
        LElem::from_poly(q).mul(&LElem::r_pow(field, e))
    }
}

impl fmt::Display for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let needs_paren = |p: &Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_paren(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_paren(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

macro_rules! lelem_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&LElem> for &LElem {
            type Output = LElem;
            fn $m(self, o: &LElem) -> LElem {
                LElem::$m(self, o)
            }
        }
    };
}
lelem_binop!(Add, add);
lelem_binop!(Sub, sub);
lelem_binop!(Mul, mul);

impl Neg for &LElem {
    type Output = LElem;
    fn neg(self) -> LElem {
        LElem::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Q;

    fn rt() -> LElem {
        LElem::r(Q)
    }

    #[test]
    fn conj_examples() {
        assert_eq!(rt().conj(), rt().neg());
        assert_eq!(LElem::t(Q).conj(), LElem::t(Q));
        let x = LElem::one(Q).add(&rt().scale(&Q.int(2))).add(&LElem::t(Q));
        let y = LElem::one(Q).sub(&rt().scale(&Q.int(2))).add(&LElem::t(Q));
        assert_eq!(x.conj(), y);
    }

    #[test]
    fn norm_trace_examples() {
        assert!(rt().trace().is_zero());
        assert_eq!(rt().norm(), LElem::t(Q).neg());
        let x = LElem::one(Q).add(&rt());
        assert_eq!(x.norm(), LElem::one(Q).sub(&LElem::t(Q)));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(rt().val(Place::Zero), HalfInt::from_twice(1));
        assert_eq!(LElem::t(Q).val(Place::Infinity), HalfInt::from_twice(-2));
        assert_eq!(LElem::zero(Q).val(Place::Zero), HalfInt::INFINITY);
        assert_eq!(rt().val(Place::Infinity), HalfInt::from_twice(-1));
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = LElem::one(Q).add(&rt());
        let b = LElem::one(Q).sub(&rt());
        let x = a.mul(&b).div(&b.scale(&Q.int(3)));
        assert_eq!(x, a.scale(&Q.ratio(1, 3)));
        assert!(x.den().is_one());
    }

    #[test]
    fn parts_at_infinity() {
        // x = rt^2 + 3 + 1/rt
        let x = LElem::t(Q).add(&LElem::int(Q, 3)).add(&LElem::r_pow(Q, -1));
        assert_eq!(x.part_at_infinity(0), LElem::t(Q).add(&LElem::int(Q, 3)));
        assert_eq!(x.part_at_infinity(-1), x);
        assert_eq!(x.part_at_infinity(1), LElem::t(Q));
        assert_eq!(x.coeff_at_zero(-1), Q.one());
    }
}
