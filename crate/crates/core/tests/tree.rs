use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use su3::exact_arith::{Field, LElem, Place};
use su3::group_core::{atilde, elt_s, elt_sj, member, sample, GroupElem, SubgroupTag};
use su3::tree::*;

const Q: Field = Field::Q;
const INF: Place = Place::Infinity;

#[test]
fn apartment_distances() {
    for n in -7..8 {
        let id = GroupElem::identity(Q);
        assert_eq!(distance(INF, &id, n), n.abs());
        assert_eq!(distance_snf(INF, &id, n), n.abs());
        assert_eq!(distance(Place::Zero, &id, n), n.abs());
    }
}

#[test]
fn index_shifts() {
    for n in -6..7 {
        let v = Vertex::apartment(INF, Q, n);
        let t = translate(&atilde(&LElem::r(Q)), &v);
        assert!(vertex_eq(&t, &Vertex::apartment(INF, Q, n + 2)));
        let t = translate(&elt_s(Q), &v);
        assert!(vertex_eq(&t, &Vertex::apartment(INF, Q, -n)));
        let t = translate(&elt_sj(Q), &v);
        assert!(vertex_eq(&t, &Vertex::apartment(INF, Q, -n - 2)), "n={n}");
        assert!(!vertex_eq(&v, &Vertex::apartment(INF, Q, n + 2)));
    }
}

#[test]
fn snf_distance_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let g = sample::word(&mut rng, Q, 6, sample::tilde_gamma_gen);
        for n in -3..4 {
            assert_eq!(distance(INF, &g, n), distance_snf(INF, &g, n), "{g}\nn={n}");
        }
    }
}

#[test]
fn stabilizers_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let g = sample::word(&mut rng, Q, 6, sample::gamma_gen);
        for n in 0..7 {
            assert!(stabilizer_check(SubgroupTag::Gamma, n, &g), "{g}\nn={n}");
        }
        let g = sample::word(&mut rng, Q, 6, sample::hat_gamma_gen);
        for n in -1..7 {
            assert!(stabilizer_check(SubgroupTag::HatGamma, n, &g), "{g}\nn={n}");
        }
    }
}

#[test]
fn reductions_land() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    type Gen = fn(&mut ChaCha8Rng, Field) -> GroupElem;
    let cases: [(SubgroupTag, Gen); 4] = [
        (SubgroupTag::Gamma, sample::gamma_gen),
        (SubgroupTag::HatGamma, sample::hat_gamma_gen),
        (SubgroupTag::Gamma0, sample::gamma0_gen),
        (SubgroupTag::GammaT, sample::gamma_t_gen),
    ];
    for (tag, gen) in cases {
        for _ in 0..50 {
            let n = rand::Rng::gen_range(&mut rng, -4..5);
            let v = Vertex::apartment(INF, Q, n);
            let (g0, d0) = reduce_vertex(tag, &v, 64).unwrap();
            let w = sample::word(&mut rng, Q, 8, gen);
            let tv = translate(&w, &v);
            let (g1, d1) = reduce_vertex(tag, &tv, 64).unwrap();
            assert!(d1.is_valid(), "{tag} {d1}");
            assert_eq!(d0, d1, "{tag}");
            assert!(member(tag, &g1), "{tag}");
            assert!(vertex_eq(&translate(&g1, &tv), &d1.vertex(Q)));
            assert!(vertex_eq(&translate(&g0, &v), &d0.vertex(Q)));
        }
    }
}

#[test]
fn horocyclic_coordinates_name_the_vertex() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let g = sample::word(&mut rng, Q, 5, sample::tilde_gamma_gen);
        for place in [INF, Place::Zero] {
            for n in -3..4 {
                let h = horocyclic(place, &g, n);
                let u = su3::group_core::ua(&h.pair);
                let v = Vertex::new(place, g.clone(), n);
                assert!(vertex_eq(&v, &Vertex::new(place, u, h.m)));
            }
        }
    }
}

/// g fixes vₙ exactly when it preserves the lattice r·O³ spanned by vₙ.
fn preserves_lattice(g: &GroupElem, n: i64) -> bool {
    let (k, e) = (n.div_euclid(2), n.rem_euclid(2));
    let mut r = shift(INF, Q, k).mat().clone();
    if e == 1 {
        let pi = unif_inv(INF, Q).inv();
        r = r.mul(&su3::exact_arith::Mat3::diag(LElem::one(Q), LElem::one(Q), pi));
    }
    let h = r.inverse().unwrap().mul(g.mat()).mul(&r);
    let zero = su3::exact_arith::HalfInt::from_twice(0);
    let integral = h.entries().all(|x| x.val(INF) >= zero);
    integral
}

#[test]
fn stabilizers_match_the_lattice_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut fixed = 0;
    for i in 0..150 {
        let g = match i % 3 {
            0 => sample::word(&mut rng, Q, 4, sample::gamma_gen),
            1 => sample::word(&mut rng, Q, 4, sample::hat_gamma_gen),
            _ => {
                let p = sample::herm(&mut rng, Q, 0, 2, -1, 4);
                su3::group_core::ua(&p).mul(&sample::torus_f(&mut rng, Q))
            }
        };
        for n in -2..7 {
            let s = su3::group_core::factor_stabilizer(INF, &g, n).is_some();
            fixed += usize::from(s);
            assert_eq!(s, preserves_lattice(&g, n), "{g}\nn={n}");
        }
    }
    assert!(fixed > 50);
}
