use proptest::collection::vec;
use proptest::prelude::*;
use su3::exact_arith::{snf_local, Field, HalfInt, LElem, Mat3, Place, Poly};

const Q: Field = Field::Q;
const PLACES: [Place; 2] = [Place::Zero, Place::Infinity];

fn poly(c: &[i64]) -> Poly {
    Poly::from_coeffs(Q, c.iter().map(|&x| Q.int(x)).collect())
}

/// num/den·√t^shift with small integer coefficients.
fn lelem() -> impl Strategy<Value = LElem> {
    (vec(-4i64..5, 0..5), vec(-3i64..4, 0..3), -3i64..4).prop_map(|(num, mut den, shift)| {
        den.push(1);
        LElem::from_fraction(poly(&num), poly(&den)).mul(&LElem::r_pow(Q, shift))
    })
}

fn nonzero() -> impl Strategy<Value = LElem> {
    lelem().prop_filter("nonzero", |x| !x.is_zero())
}

/// An element of the valuation ring at the place.
fn integral(place: Place) -> impl Strategy<Value = LElem> {
    vec(-3i64..4, 0..4).prop_map(move |c| {
        let p = LElem::from_poly(poly(&c));
        match place {
            Place::Zero => p,
            // p(1/√t)
            Place::Infinity => {
                let d = c.len().saturating_sub(1) as i64;
                let rev: Vec<i64> = c.iter().rev().copied().collect();
                LElem::from_poly(poly(&rev)).mul(&LElem::r_pow(Q, -d))
            }
        }
    })
}

fn elementary(i: usize, j: usize, a: &LElem) -> Mat3 {
    Mat3::from_fn(|r, c| {
        if r == c {
            LElem::one(Q)
        } else if (r, c) == (i, j) {
            a.clone()
        } else {
            LElem::zero(Q)
        }
    })
}

/// A product of elementary matrices over the valuation ring and a unit diagonal.
fn unit_matrix(place: Place) -> impl Strategy<Value = Mat3> {
    (vec((0usize..3, 0usize..3, integral(place)), 1..5), vec(1i64..5, 3)).prop_map(|(es, d)| {
        let mut m = Mat3::diag(LElem::int(Q, d[0]), LElem::int(Q, d[1]), LElem::int(Q, -d[2]));
        for (i, j, a) in es {
            if i != j {
                m = m.mul(&elementary(i, j, &a));
            }
        }
        m
    })
}

fn matrix() -> impl Strategy<Value = Mat3> {
    vec(lelem(), 9)
        .prop_map(|e| Mat3::from_fn(|i, j| e[3 * i + j].clone()))
        .prop_filter("invertible", |m| !m.det().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn valuation_is_additive_on_products(x in nonzero(), y in nonzero()) {
        for p in PLACES {
            prop_assert_eq!(x.mul(&y).val(p), x.val(p).add(y.val(p)));
        }
    }

    #[test]
    fn valuation_of_sum_is_at_least_the_min(x in lelem(), y in lelem()) {
        for p in PLACES {
            prop_assert!(x.add(&y).val(p) >= x.val(p).min(y.val(p)));
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(x in lelem(), y in lelem()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        prop_assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
        for p in PLACES {
            prop_assert_eq!(x.conj().val(p), x.val(p));
        }
    }

    #[test]
    fn norm_and_trace_lie_in_k(x in lelem()) {
        prop_assert!(x.norm().in_k());
        prop_assert!(x.trace().in_k());
        // ν(N(x)) = 2ν(x) is an integer
        for p in PLACES {
            if let Some(tv) = x.norm().val(p).twice() {
                prop_assert_eq!(tv % 2, 0);
                prop_assert_eq!(x.norm().val(p), x.val(p).add(x.val(p)));
            }
        }
    }

    #[test]
    fn canonical_form_is_idempotent(x in lelem(), y in nonzero()) {
        let again = LElem::from_fraction(x.num().clone(), x.den().clone());
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(x.mul(&y).div(&y), x.clone());
        prop_assert!(x.den().lc().is_one());
        prop_assert!(x.num().gcd(x.den()).deg() == Some(0) || x.is_zero());
    }

    #[test]
    fn even_and_odd_parts_split(x in lelem()) {
        prop_assert_eq!(x.even_part().add(&x.odd_part()), x.clone());
        prop_assert!(x.even_part().in_k());
        prop_assert_eq!(x.odd_part().conj(), x.odd_part().neg());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn elementary_divisors_ignore_unit_matrices(
        m in matrix(),
        u0 in unit_matrix(Place::Zero),
        v0 in unit_matrix(Place::Zero),
        ui in unit_matrix(Place::Infinity),
        vi in unit_matrix(Place::Infinity),
    ) {
        for (p, u, v) in [(Place::Zero, &u0, &v0), (Place::Infinity, &ui, &vi)] {
            let d = snf_local(p, &m).unwrap();
            prop_assert_eq!(snf_local(p, &u.mul(&m).mul(v)).unwrap(), d);
            // the divisors sum to the valuation of the determinant
            let s = d.0.iter().fold(HalfInt::from_twice(0), |a, b| a.add(*b));
            prop_assert_eq!(s, m.det().val(p));
        }
    }
}
