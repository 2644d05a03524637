//! Elementary divisors over the local ring at a place.

use std::fmt;

use super::lelem::{HalfInt, LElem, Place};
use super::matrix::Mat3;
use crate::error::{Error, Result};

/// Elementary-divisor valuations d₁ ≤ d₂ ≤ d₃.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DivisorTriple(pub [HalfInt; 3]);

impl DivisorTriple {
    /// Twice-values, all finite by construction.
    pub fn twice(&self) -> [i64; 3] {
        self.0.map(|h| h.twice().expect("finite divisor"))
    }

    /// d₃ − d₁ in twice-value units.
    pub fn spread(&self) -> i64 {
        let t = self.twice();
        t[2] - t[0]
    }
}

impl fmt::Display for DivisorTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Valuation-pivoted elimination: at each stage the entry of smallest
/// valuation is the pivot, so every elimination factor is integral.
pub fn snf_local(place: Place, m: &Mat3) -> Result<DivisorTriple> {
    let mut a: Vec<Vec<LElem>> = m.rows().iter().map(|r| r.to_vec()).collect();
    let mut rows: Vec<usize> = vec![0, 1, 2];
    let mut cols: Vec<usize> = vec![0, 1, 2];
    let mut out = Vec::with_capacity(3);
    while !rows.is_empty() {
        let mut best: Option<(usize, usize, HalfInt)> = None;
        for &i in &rows {
            for &j in &cols {
                let v = a[i][j].val(place);
                if best.is_none_or(|(_, _, b)| v < b) {
                    best = Some((i, j, v));
                }
            }
        }
        let (pi, pj, pv) = best.unwrap();
        if pv.is_infinite() {
            return Err(Error::Singular);
        }
        out.push(pv);
        let piv = a[pi][pj].clone();
        rows.retain(|&i| i != pi);
        cols.retain(|&j| j != pj);
        for &i in &rows {
            if a[i][pj].is_zero() {
                continue;
            }
            let f = a[i][pj].div(&piv);
            for &j in &cols {
                let d = f.mul(&a[pi][j]);
                a[i][j] = a[i][j].sub(&d);
            }
        }
    }
    out.sort();
    Ok(DivisorTriple([out[0], out[1], out[2]]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Field;

    #[test]
    fn examples() {
        let f = Field::Q;
        let id = Mat3::identity(f);
        assert_eq!(snf_local(Place::Zero, &id).unwrap().twice(), [0, 0, 0]);
        let d = Mat3::diag(LElem::one(f), LElem::one(f), LElem::r(f));
        assert_eq!(snf_local(Place::Zero, &d).unwrap().twice(), [0, 0, 1]);
        assert_eq!(snf_local(Place::Zero, &Mat3::zero(f)), Err(Error::Singular));
    }
}
