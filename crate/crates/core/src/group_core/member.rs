//! Membership predicates for the named subgroups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact_arith::{HalfInt, LElem, Mat3, Place};

use super::elem::{det_one, is_isometry, GroupElem};
use super::psi::ev0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubgroupTag {
    Gamma,
    TildeGamma,
    HatGamma,
    Gamma0,
    GammaT,
    B,
    B0,
    Bhat,
    UJ,
    SOq,
    Gn(u32),
    Ghatn(u32),
    GhatMinus1,
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupTag::Gn(n) => write!(f, "Gn({n})"),
            SubgroupTag::Ghatn(n) => write!(f, "Ghatn({n})"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for SubgroupTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        use SubgroupTag::*;
        let param = |pre: &str| -> Option<u32> {
            s.strip_prefix(pre)?.strip_prefix('(')?.strip_suffix(')')?.trim().parse().ok()
        };
        Ok(match s {
            "Gamma" => Gamma,
            "TildeGamma" => TildeGamma,
            "HatGamma" => HatGamma,
            "Gamma0" => Gamma0,
            "GammaT" => GammaT,
            "B" => B,
            "B0" => B0,
            "Bhat" => Bhat,
            "UJ" => UJ,
            "SOq" => SOq,
            "GhatMinus1" => GhatMinus1,
            _ => {
                if let Some(n) = param("Gn") {
                    Gn(n)
                } else if let Some(n) = param("Ghatn") {
                    Ghatn(n)
                } else {
                    return Err(Error::Usage(format!("unknown subgroup tag {s}")));
                }
            }
        })
    }
}

/// x ∈ √t^e·F[√t].
fn in_shifted_s(x: &LElem, e: i64) -> bool {
    x.is_zero() || x.mul(&LElem::r_pow(x.field(), -e)).is_poly()
}

fn in_f(x: &LElem) -> bool {
    x.as_scalar().is_some()
}

fn shape(m: &Mat3, e: [[i64; 3]; 3]) -> bool {
    (0..3).all(|i| (0..3).all(|j| in_shifted_s(m.get(i, j), e[i][j])))
}

const S_SHAPE: [[i64; 3]; 3] = [[0; 3]; 3];
const HAT_SHAPE: [[i64; 3]; 3] = [[0, 0, -1], [1, 0, 0], [1, 1, 0]];
const GAMMA0_SHAPE: [[i64; 3]; 3] = [[0, 0, 0], [1, 0, 0], [1, 1, 0]];

fn is_borel(m: &Mat3) -> bool {
    m.is_upper_triangular() && m.get(0, 0).as_scalar().is_some_and(|l| !l.is_zero())
}

fn corner_bound(m: &Mat3, n: u32) -> bool {
    m.get(0, 2).val(Place::Infinity) >= HalfInt::from_twice(-(n as i64))
}

pub fn member_mat(tag: SubgroupTag, m: &Mat3) -> bool {
    if !is_isometry(m) || !det_one(m) {
        return false;
    }
    use SubgroupTag::*;
    match tag {
        Gamma => shape(m, S_SHAPE),
        TildeGamma => m.entries().all(LElem::is_laurent),
        HatGamma => shape(m, HAT_SHAPE),
        Gamma0 => shape(m, GAMMA0_SHAPE),
        GammaT => {
            shape(m, S_SHAPE) && ev0(&GroupElem::trusted(m.clone())).is_ok_and(|e| e.is_identity())
        }
        B => is_borel(m) && shape(m, S_SHAPE),
        B0 => is_borel(m) && m.entries().all(in_f),
        Bhat => is_borel(m) && shape(m, HAT_SHAPE),
        UJ => {
            m.is_upper_triangular()
                && (0..3).all(|i| m.get(i, i).is_one())
                && [(0, 1), (0, 2), (1, 2)].iter().all(|&(i, j)| in_shifted_s(m.get(i, j), 1))
        }
        SOq => m.entries().all(in_f),
        Gn(0) => m.entries().all(in_f),
        Gn(n) => is_borel(m) && shape(m, S_SHAPE) && corner_bound(m, n),
        Ghatn(n) => is_borel(m) && shape(m, HAT_SHAPE) && corner_bound(m, n),
        GhatMinus1 => {
            let zero_at = [(0, 1), (1, 0), (1, 2), (2, 1)];
            zero_at.iter().all(|&(i, j)| m.get(i, j).is_zero())
                && m.get(1, 1).is_one()
                && in_f(m.get(0, 0))
                && in_f(m.get(2, 2))
                && in_f(&m.get(0, 2).mul(&LElem::r(m.field())))
                && in_f(&m.get(2, 0).mul(&LElem::r_pow(m.field(), -1)))
        }
    }
}

pub fn member(tag: SubgroupTag, g: &GroupElem) -> bool {
    member_mat(tag, g.mat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Field;
    use crate::group_core::elem::{atilde, elt_s, elt_sj, mk_ua};

    const Q: Field = Field::Q;

    #[test]
    fn examples() {
        assert!(member(SubgroupTag::SOq, &elt_s(Q)));
        let g = mk_ua(LElem::r(Q), LElem::t(Q).scale(&Q.ratio(1, 2))).unwrap();
        assert!(member(SubgroupTag::UJ, &g));
        assert!(member(SubgroupTag::GammaT, &g));
        assert!(member(SubgroupTag::B0, &atilde(&LElem::int(Q, 2))));
        assert!(member(SubgroupTag::HatGamma, &elt_sj(Q)));
        assert!(!member(SubgroupTag::Gamma, &elt_sj(Q)));
        assert!(member(SubgroupTag::GhatMinus1, &elt_sj(Q)));
        assert_eq!("Gn(3)".parse::<SubgroupTag>().unwrap(), SubgroupTag::Gn(3));
    }
}
