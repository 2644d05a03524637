use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use su3::amalgam::{self, sample, ALL_AMALGAMS};
use su3::exact_arith::Field;

const Q: Field = Field::Q;

#[test]
fn round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for id in ALL_AMALGAMS {
        let t = std::time::Instant::now();
        for _ in 0..20 {
            let w = sample::word(&mut rng, Q, id, 6);
            let g = amalgam::evaluate(Q, &w);
            assert!(id.group(&g), "{id}");
            let d = amalgam::decompose_matrix(id, &g, 64).unwrap();
            assert_eq!(amalgam::evaluate(Q, &d), g, "{id}");
            let n1 = amalgam::normal_form(id, &w).unwrap();
            let n2 = amalgam::normal_form(id, &d).unwrap();
            assert_eq!(n1.evaluate(), g);
            assert_eq!(n1, n2, "{id}");
            let rb = sample::rebracket(&mut rng, Q, id, &w);
            assert_eq!(amalgam::normal_form(id, &rb).unwrap(), n1, "{id}");
            for pair in n1.letters.windows(2) {
                assert_ne!(pair[0].factor, pair[1].factor);
            }
        }
        eprintln!("{id}: {:?}", t.elapsed());
    }
}
