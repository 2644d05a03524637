//! The coefficient field F: the rationals or a prime field of odd characteristic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Which coefficient field is in use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    /// Builds `Fp(p)`, rejecting 2 and non-primes.
    pub fn prime(p: u64) -> Option<Field> {
        if p < 3 || p.is_multiple_of(2) || p > u32::MAX as u64 {
            return None;
        }
        let mut d = 3;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return None;
            }
            d += 2;
        }
        Some(Field::Fp(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// `n/d`; panics on `d == 0` in the field.
    pub fn ratio(self, n: i64, d: i64) -> Scalar {
        self.int(n).div(&self.int(d))
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(n.clone())),
            Field::Fp(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Fp {
                    v: r.to_u64().unwrap(),
                    p,
                }
            }
        }
    }

    pub fn from_bigratio(self, n: &BigInt, d: &BigInt) -> Option<Scalar> {
        let d = self.from_bigint(d);
        if d.is_zero() {
            return None;
        }
        Some(self.from_bigint(n).div(&d))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "q"),
            Field::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An exact element of F.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "inverse of zero");
                Scalar::Q(q.recip())
            }
            Scalar::Fp { v, p } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp {
                    v: powmod(*v, p - 2, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: (a + b) % p,
                p: *p,
            },
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: mulmod(*a, *b, *p),
                p: *p,
            },
            _ => panic!("mixed fields"),
        }
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut r = self.field().one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Canonical representative of the class of `self` in F*/F*²,
    /// `None` for zero. Over Q this is a signed squarefree integer.
    pub fn square_class(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Q(q) => {
                let n = q.numer() * q.denom();
                let sign = if n.is_negative() { -1 } else { 1 };
                let sf = squarefree_part(&n.abs());
                Some(Scalar::Q(BigRational::from_integer(sf * BigInt::from(sign))))
            }
            Scalar::Fp { v, p } => {
                let leg = powmod(*v, (p - 1) / 2, *p);
                if leg == 1 {
                    Some(Scalar::Fp { v: 1, p: *p })
                } else {
                    // the smallest non-residue
                    let mut n = 2;
                    while powmod(n, (p - 1) / 2, *p) == 1 {
                        n += 1;
                    }
                    Some(Scalar::Fp { v: n, p: *p })
                }
            }
        }
    }

    /// Integer value when the scalar is an integer of moderate size.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { v, .. } => Some(*v as i64),
        }
    }
}

fn squarefree_part(n: &BigInt) -> BigInt {
    let mut n = n.clone();
    let mut out = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &d;
        }
        d += 1;
    }
    out * n
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp(b),
            (Scalar::Fp { v: a, .. }, Scalar::Fp { v: b, .. }) => a.cmp(b),
            (Scalar::Q(_), _) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                Scalar::$m(self, o)
            }
        }
    };
}
scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.int(3);
        assert_eq!(a.mul(&a.inv()), f.one());
        assert_eq!(f.ratio(1, 2).mul(&f.int(2)), f.one());
        assert_eq!(f.int(-1), f.int(4));
    }

    #[test]
    fn rejects_char_two_and_composites() {
        assert!(Field::prime(2).is_none());
        assert!(Field::prime(9).is_none());
        assert!(Field::prime(7).is_some());
    }

    #[test]
    fn square_classes() {
        let q = Field::Q;
        assert_eq!(q.int(8).square_class(), Some(q.int(2)));
        assert_eq!(q.ratio(-3, 12).square_class(), Some(q.int(-1)));
        assert_eq!(q.ratio(2, 3).square_class(), Some(q.int(6)));
        let f = Field::Fp(5);
        assert_eq!(f.int(4).square_class(), Some(f.int(1)));
        assert_eq!(f.int(3).square_class(), f.int(2).square_class());
    }
}
