//! 3×3 matrices over L.

use std::fmt;

use super::lelem::LElem;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3 {
    e: [[LElem; 3]; 3],
}

impl Mat3 {
    pub fn from_rows(e: [[LElem; 3]; 3]) -> Mat3 {
        Mat3 { e }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> LElem) -> Mat3 {
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zero(field: Field) -> Mat3 {
        Mat3::from_fn(|_, _| LElem::zero(field))
    }

    pub fn identity(field: Field) -> Mat3 {
        Mat3::diag(LElem::one(field), LElem::one(field), LElem::one(field))
    }

    pub fn diag(a: LElem, b: LElem, c: LElem) -> Mat3 {
        let f = a.field();
        let d = [a, b, c];
        Mat3::from_fn(|i, j| if i == j { d[i].clone() } else { LElem::zero(f) })
    }

    /// The antidiagonal matrix with entries `a, b, c` from top-right to bottom-left.
    pub fn antidiag(a: LElem, b: LElem, c: LElem) -> Mat3 {
        let f = a.field();
        let d = [a, b, c];
        Mat3::from_fn(|i, j| if i + j == 2 { d[i].clone() } else { LElem::zero(f) })
    }

    /// Φ, the Gram matrix of the hermitian form.
    pub fn phi(field: Field) -> Mat3 {
        Mat3::antidiag(LElem::one(field), LElem::one(field), LElem::one(field))
    }

    pub fn field(&self) -> Field {
        self.e[0][0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &LElem {
        &self.e[i][j]
    }

    pub fn rows(&self) -> &[[LElem; 3]; 3] {
        &self.e
    }

    pub fn entries(&self) -> impl Iterator<Item = &LElem> {
        self.e.iter().flatten()
    }

    pub fn map(&self, f: impl Fn(&LElem) -> LElem) -> Mat3 {
        Mat3::from_fn(|i, j| f(&self.e[i][j]))
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| {
            let mut acc = LElem::zero(self.field());
            for k in 0..3 {
                if self.e[i][k].is_zero() || o.e[k][j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.e[i][k].mul(&o.e[k][j]));
            }
            acc
        })
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.e[j][i].clone())
    }

    pub fn conj(&self) -> Mat3 {
        self.map(LElem::conj)
    }

    /// ḡᵗ.
    pub fn conj_transpose(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.e[j][i].conj())
    }

    pub fn scale(&self, s: &LElem) -> Mat3 {
        self.map(|x| x.mul(s))
    }

    pub fn det(&self) -> LElem {
        let e = &self.e;
        let minor = |a: usize, b: usize, c: usize, d: usize| {
            e[1][a].mul(&e[2][b]).sub(&e[1][c].mul(&e[2][d]))
        };
        e[0][0]
            .mul(&minor(1, 2, 2, 1))
            .sub(&e[0][1].mul(&minor(0, 2, 2, 0)))
            .add(&e[0][2].mul(&minor(0, 1, 1, 0)))
    }

    pub fn inverse(&self) -> Result<Mat3> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        let di = d.inv();
        let e = &self.e;
        let cof = |i: usize, j: usize| {
            let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let m = e[r[0]][c[0]]
                .mul(&e[r[1]][c[1]])
                .sub(&e[r[0]][c[1]].mul(&e[r[1]][c[0]]));
            if (i + j).is_multiple_of(2) {
                m
            } else {
                m.neg()
            }
        };
        Ok(Mat3::from_fn(|i, j| cof(j, i).mul(&di)))
    }

    pub fn is_identity(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| if i == j { self.e[i][j].is_one() } else { self.e[i][j].is_zero() }))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.e[1][0].is_zero() && self.e[2][0].is_zero() && self.e[2][1].is_zero()
    }

    /// Entries as scalars when all lie in F.
    pub fn as_scalars(&self) -> Option<[[Scalar; 3]; 3]> {
        let mut out: [[Option<Scalar>; 3]; 3] = Default::default();
        for (o, e) in out.iter_mut().zip(&self.e) {
            for (x, y) in o.iter_mut().zip(e) {
                *x = Some(y.as_scalar()?);
            }
        }
        Some(out.map(|r| r.map(Option::unwrap)))
    }

    pub fn max_degree(&self) -> usize {
        self.entries().map(LElem::degree).max().unwrap_or(0)
    }

    pub fn check_degree(&self, limit: usize) -> Result<()> {
        for x in self.entries() {
            x.check_degree(limit)?;
        }
        Ok(())
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.e.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}; {}; {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_triangular() {
        let f = Field::Q;
        let r = LElem::r(f);
        let one = LElem::one(f);
        let z = LElem::zero(f);
        let m = Mat3::from_rows([
            [one.clone(), r.clone(), LElem::t(f)],
            [z.clone(), LElem::int(f, 2), r.clone()],
            [z.clone(), z, one],
        ]);
        let mi = m.inverse().unwrap();
        assert!(m.mul(&mi).is_identity());
        assert!(mi.mul(&m).is_identity());
        assert_eq!(m.det(), LElem::int(f, 2));
    }
}
