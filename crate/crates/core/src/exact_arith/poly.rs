//! Dense univariate polynomials in the symbol r (standing for √t) over F.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{Field, Scalar};

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    c: Vec<Scalar>,
}

impl Poly {
    pub fn zero(field: Field) -> Poly {
        Poly { field, c: vec![] }
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(s: Scalar) -> Poly {
        Poly::from_coeffs(s.field(), vec![s])
    }

    /// `s·r^k`.
    pub fn monomial(s: Scalar, k: usize) -> Poly {
        let field = s.field();
        let mut c = vec![field.zero(); k];
        c.push(s);
        Poly::from_coeffs(field, c)
    }

    pub fn from_coeffs(field: Field, mut c: Vec<Scalar>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { field, c }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.c.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient; `None` for zero.
    pub fn ord(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn lc(&self) -> Scalar {
        self.c.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    /// True when the polynomial is `r^k` for some k.
    pub fn is_monic_monomial(&self) -> bool {
        match (self.ord(), self.deg()) {
            (Some(a), Some(b)) => a == b && self.c[b].is_one(),
            _ => false,
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect();
        Poly::from_coeffs(self.field, c)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field,
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect();
        Poly::from_coeffs(self.field, c)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        if self.field == Field::Q {
            return mul_q(self, o);
        }
        let mut c = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::from_coeffs(self.field, c)
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::from_coeffs(self.field, self.c.iter().map(|x| x.mul(s)).collect())
    }

    /// Multiplies by `r^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.field.zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { field: self.field, c }
    }

    /// Divides by `r^k`, which must divide exactly.
    pub fn unshift(&self, k: usize) -> Poly {
        debug_assert!(self.is_zero() || self.ord().unwrap() >= k);
        Poly::from_coeffs(self.field, self.c.iter().skip(k).cloned().collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.deg().expect("division by zero polynomial");
        let inv = d.lc().inv();
        let mut r = self.c.clone();
        let n = self.c.len();
        if n <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); n - dd];
        for i in (0..n - dd).rev() {
            let coef = r[i + dd].mul(&inv);
            if coef.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[i + j] = r[i + j].sub(&coef.mul(dc));
            }
            q[i] = coef;
        }
        r.truncate(dd);
        (
            Poly::from_coeffs(self.field, q),
            Poly::from_coeffs(self.field, r),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.field == Field::Q && !self.is_zero() && !o.is_zero() {
            return gcd_q(self, o);
        }
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// r ↦ −r.
    pub fn conj(&self) -> Poly {
        Poly {
            field: self.field,
            c: self
                .c
                .iter()
                .enumerate()
                .map(|(i, x)| if i % 2 == 1 { x.neg() } else { x.clone() })
                .collect(),
        }
    }

    pub fn has_only_even_powers(&self) -> bool {
        self.c.iter().enumerate().all(|(i, x)| i % 2 == 0 || x.is_zero())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "rt")?;
                    } else {
                        write!(f, "rt^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

const CHECK_PRIME: u64 = 4_294_967_291;

/// Reduction mod `CHECK_PRIME`, `None` when a denominator vanishes there.
fn reduce_mod(a: &Poly) -> Option<Poly> {
    let f = Field::Fp(CHECK_PRIME);
    let mut c = Vec::with_capacity(a.c.len());
    for x in &a.c {
        let Scalar::Q(q) = x else { unreachable!() };
        c.push(f.from_bigratio(q.numer(), q.denom())?);
    }
    Some(Poly::from_coeffs(f, c))
}

/// Integer coefficients with content 1 and positive leading coefficient.
fn primitive_z(a: &Poly) -> Vec<BigInt> {
    let qs: Vec<&BigRational> = a
        .c
        .iter()
        .map(|x| match x {
            Scalar::Q(q) => q,
            _ => unreachable!(),
        })
        .collect();
    let l = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    primitive_part(ints)
}

fn primitive_part(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if v.last().is_some_and(|x| x.is_negative()) { -1 } else { 1 };
    let g = g * sign;
    v.into_iter().map(|x| x / &g).collect()
}

fn trim_z(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

/// a·lc(b)^k mod b over ℤ.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        r = trim_z(r);
    }
    r
}

fn gcd_q(a: &Poly, b: &Poly) -> Poly {
    if let (Some(am), Some(bm)) = (reduce_mod(a), reduce_mod(b)) {
        if am.deg() == a.deg() && bm.deg() == b.deg() && am.gcd(&bm).deg() == Some(0) {
            return Poly::one(Field::Q);
        }
    }
    let mut x = primitive_z(a);
    let mut y = primitive_z(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive_part(r) };
    }
    let c = x
        .iter()
        .map(|n| Scalar::Q(BigRational::from_integer(n.clone())))
        .collect();
    Poly::from_coeffs(Field::Q, c).monic()
}

/// Integer numerators over a common denominator.
fn common_denominator(a: &Poly) -> (Vec<BigInt>, BigInt) {
    let qs = a.c.iter().map(|x| match x {
        Scalar::Q(q) => q,
        _ => unreachable!(),
    });
    let l = qs.clone().fold(BigInt::one(), |acc, q| {
        if q.denom().is_one() {
            acc
        } else {
            acc.lcm(q.denom())
        }
    });
    let ints = qs
        .map(|q| {
            if q.denom().is_one() {
                q.numer() * &l
            } else {
                q.numer() * (&l / q.denom())
            }
        })
        .collect();
    (ints, l)
}

fn mul_q(a: &Poly, b: &Poly) -> Poly {
    let (x, dx) = common_denominator(a);
    let (y, dy) = common_denominator(b);
    let mut c = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, u) in x.iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (j, v) in y.iter().enumerate() {
            if !v.is_zero() {
                c[i + j] += u * v;
            }
        }
    }
    let d = dx * dy;
    let c = c
        .into_iter()
        .map(|n| Scalar::Q(BigRational::new(n, d.clone())))
        .collect();
    Poly::from_coeffs(Field::Q, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(Field::Q, cs.iter().map(|&x| Field::Q.int(x)).collect())
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[1, 2, 3, 4, 5]);
        let b = p(&[2, 0, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.deg().unwrap_or(0) < 2);
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        let c = p(&[3, 0, 1]);
        assert_eq!(a.mul(&c).gcd(&b.mul(&c)), c.monic());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0, 3]).to_string(), "3*rt^3 - 2*rt + 1");
        assert_eq!(p(&[0, 1]).to_string(), "rt");
    }
}
