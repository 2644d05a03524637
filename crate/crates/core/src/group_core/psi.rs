//! PGL₂(F) ≅ SO(q)(F), the SL₂ embedding, evaluation at t = 0 and the
//! Bruhat cells of SO(q)(F).

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::{Field, LElem, Mat3, Scalar};

use super::elem::{elt_s, ua, GroupElem, HermPair};

/// A 2×2 matrix over F.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[Scalar; 2]; 2]);

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Mat2 {
        Mat2([[a, b], [c, d]])
    }

    pub fn identity(f: Field) -> Mat2 {
        Mat2::new(f.one(), f.zero(), f.zero(), f.one())
    }

    pub fn field(&self) -> Field {
        self.0[0][0].field()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j])))
        }))
    }

    pub fn det(&self) -> Scalar {
        let a = &self.0;
        a[0][0].mul(&a[1][1]).sub(&a[0][1].mul(&a[1][0]))
    }

    pub fn inv(&self) -> Option<Mat2> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let di = d.inv();
        let a = &self.0;
        Some(Mat2::new(
            a[1][1].mul(&di),
            a[0][1].neg().mul(&di),
            a[1][0].neg().mul(&di),
            a[0][0].mul(&di),
        ))
    }

    pub fn scale(&self, s: &Scalar) -> Mat2 {
        Mat2(self.0.clone().map(|r| r.map(|x| x.mul(s))))
    }

    /// The representative of the projective class whose first nonzero
    /// entry (row-major) is 1.
    pub fn normalized(&self) -> Mat2 {
        let lead = self.0.iter().flatten().find(|x| !x.is_zero()).cloned();
        match lead {
            Some(l) => self.scale(&l.inv()),
            None => self.clone(),
        }
    }

    pub fn same_class(&self, o: &Mat2) -> bool {
        self.normalized() == o.normalized()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", a[0][0], a[0][1], a[1][0], a[1][1])
    }
}

/// Coordinates of the trace-zero matrix [[b, a], [c, −b]] in (e₊, h, 2e₋).
fn coords(m: &Mat2) -> [Scalar; 3] {
    let half = m.field().ratio(1, 2);
    [m.0[0][1].clone(), m.0[0][0].clone(), m.0[1][0].mul(&half)]
}

fn basis(f: Field) -> [Mat2; 3] {
    let (o, z) = (f.one(), f.zero());
    [
        Mat2::new(z.clone(), o.clone(), z.clone(), z.clone()),
        Mat2::new(o.clone(), z.clone(), z.clone(), o.neg()),
        Mat2::new(z.clone(), z.clone(), f.int(2), z),
    ]
}

/// ψ(B): the matrix of A ↦ BAB⁻¹ on trace-zero matrices.
pub fn psi_pgl2(b: &Mat2) -> Result<GroupElem> {
    let f = b.field();
    let bi = b.inv().ok_or(Error::Singular)?;
    let cols: Vec<[Scalar; 3]> = basis(f).iter().map(|e| coords(&b.mul(e).mul(&bi))).collect();
    let m = Mat3::from_fn(|i, j| LElem::scalar(cols[j][i].clone()));
    Ok(GroupElem::trusted(m))
}

/// Inverse of ψ on SO(q)(F), as a normalized class representative.
pub fn psi_inv(g: &GroupElem) -> Result<Mat2> {
    let f = g.field();
    let m = g.mat().as_scalars().ok_or(Error::NotInImage)?;
    let es = basis(f);
    // B·E_j − (Σ_i m_ij E_i)·B = 0, linear in the four entries of B.
    let mut rows: Vec<[Scalar; 4]> = Vec::new();
    for j in 0..3 {
        let mut img = Mat2([[f.zero(), f.zero()], [f.zero(), f.zero()]]);
        for (i, e) in es.iter().enumerate() {
            for a in 0..2 {
                for b in 0..2 {
                    img.0[a][b] = img.0[a][b].add(&m[i][j].mul(&e.0[a][b]));
                }
            }
        }
        let ej = &es[j];
        for a in 0..2 {
            for c in 0..2 {
                // entry (a, c) of B·E_j − img·B, as coefficients of b_{pq}
                let mut row: [Scalar; 4] = std::array::from_fn(|_| f.zero());
                for k in 0..2 {
                    row[2 * a + k] = row[2 * a + k].add(&ej.0[k][c]);
                    row[2 * k + c] = row[2 * k + c].sub(&img.0[a][k]);
                }
                rows.push(row);
            }
        }
    }
    let null = nullspace(rows, f);
    if null.len() != 1 {
        return Err(Error::NotInImage);
    }
    let v = &null[0];
    let b = Mat2::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()).normalized();
    if b.det().is_zero() || psi_pgl2(&b)? != *g {
        return Err(Error::NotInImage);
    }
    Ok(b)
}

fn nullspace(mut rows: Vec<[Scalar; 4]>, f: Field) -> Vec<[Scalar; 4]> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..4 {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        rows[r] = rows[r].clone().map(|x| x.mul(&inv));
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = rows[i][c].clone();
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x = x.sub(&k.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..4).filter(|c| !pivots.contains(c)) {
        let mut v: [Scalar; 4] = std::array::from_fn(|_| f.zero());
        v[free] = f.one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[i][free].neg();
        }
        out.push(v);
    }
    out
}

/// [[a, b], [c, d]] ↦ [[a, 0, b/√t], [0, 1, 0], [c√t, 0, d]].
pub fn sl2_embed(m: &Mat2) -> Result<GroupElem> {
    let f = m.field();
    if !m.det().is_one() {
        return Err(Error::Invariant(format!("det {m} ≠ 1")));
    }
    let a = &m.0;
    let z = LElem::zero(f);
    let rinv = LElem::r_pow(f, -1);
    let r = LElem::r(f);
    Ok(GroupElem::trusted(Mat3::from_rows([
        [LElem::scalar(a[0][0].clone()), z.clone(), LElem::scalar(a[0][1].clone()).mul(&rinv)],
        [z.clone(), LElem::one(f), z.clone()],
        [LElem::scalar(a[1][0].clone()).mul(&r), z, LElem::scalar(a[1][1].clone())],
    ])))
}

/// Evaluation √t ↦ 0 on a matrix with entries in F[√t].
pub fn ev0(g: &GroupElem) -> Result<GroupElem> {
    let mut out = Vec::with_capacity(9);
    for x in g.mat().entries() {
        if !x.is_poly() {
            return Err(Error::NonPolynomial);
        }
        out.push(LElem::scalar(x.num().coeff(0)));
    }
    Ok(GroupElem::trusted(Mat3::from_fn(|i, j| out[3 * i + j].clone())))
}

/// uₐ(x, −x²/2) for x ∈ F; equals ψ([[1, x/2], [0, 1]]).
pub fn u0(x: &Scalar) -> GroupElem {
    let f = x.field();
    let y = x.mul(x).mul(&f.ratio(-1, 2));
    ua(&HermPair {
        x: LElem::scalar(x.clone()),
        y: LElem::scalar(y),
    })
}

/// A point of P¹(F).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1 {
    Inf,
    Fin(Scalar),
}

impl fmt::Display for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1::Inf => write!(f, "inf"),
            P1::Fin(x) => write!(f, "{x}"),
        }
    }
}

/// gₓ = u₀(x)·s, and g_∞ = 1.
pub fn g_label(f: Field, x: &P1) -> GroupElem {
    match x {
        P1::Inf => GroupElem::identity(f),
        P1::Fin(x) => u0(x).mul(&elt_s(f)),
    }
}

/// Cell of an element of SO(q)(F) in B₀ ∪ U₀·s·B₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bruhat {
    InBorel(GroupElem),
    /// M = u₀(x)·s·b.
    BigCell { x: Scalar, b: GroupElem },
}

pub fn bruhat_soq(g: &GroupElem) -> Result<Bruhat> {
    if g.mat().as_scalars().is_none() {
        return Err(Error::NotMember("SOq".into()));
    }
    let f = g.field();
    let bm = psi_inv(g)?;
    let [[a, b], [c, d]] = bm.0.clone();
    if c.is_zero() {
        return Ok(Bruhat::InBorel(g.clone()));
    }
    // [[a, b], [c, d]] = [[1, y], [0, 1]]·[[0, 1], [−2, 0]]·[[p, q], [0, r]]
    let half = f.ratio(1, 2);
    let y = a.div(&c);
    let p = c.mul(&half).neg();
    let q = d.mul(&half).neg();
    let r = b.sub(&a.mul(&d).div(&c));
    let bor = psi_pgl2(&Mat2::new(p, q, f.zero(), r))?;
    let x = y.mul(&f.int(2));
    debug_assert_eq!(u0(&x).mul(&elt_s(f)).mul(&bor), *g);
    Ok(Bruhat::BigCell { x, b: bor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::elem::atilde;

    const Q: Field = Field::Q;

    #[test]
    fn psi_examples() {
        assert!(psi_pgl2(&Mat2::identity(Q)).unwrap().is_identity());
        let l = Q.int(3);
        let d = Mat2::new(l.clone(), Q.zero(), Q.zero(), Q.one());
        assert_eq!(psi_pgl2(&d).unwrap(), atilde(&LElem::scalar(l)));
        let w = Mat2::new(Q.zero(), Q.one(), Q.int(-2), Q.zero());
        assert_eq!(psi_pgl2(&w).unwrap(), elt_s(Q));
        let n = Mat2::new(Q.one(), Q.ratio(1, 2), Q.zero(), Q.one());
        assert_eq!(psi_pgl2(&n).unwrap(), u0(&Q.one()));
    }

    #[test]
    fn psi_inv_round_trip() {
        let b = Mat2::new(Q.int(2), Q.int(3), Q.int(-1), Q.int(5));
        let g = psi_pgl2(&b).unwrap();
        assert!(psi_inv(&g).unwrap().same_class(&b));
    }

    #[test]
    fn bruhat_of_s() {
        match bruhat_soq(&elt_s(Q)).unwrap() {
            Bruhat::BigCell { x, b } => {
                assert!(x.is_zero());
                assert!(b.is_identity());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sl2_embed_example() {
        let m = Mat2::new(Q.one(), Q.one(), Q.zero(), Q.one());
        let g = sl2_embed(&m).unwrap();
        assert_eq!(*g.get(0, 2), LElem::r_pow(Q, -1));
    }
}
