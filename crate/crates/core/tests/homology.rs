use su3::amalgam::ALL_AMALGAMS;
use su3::exact_arith::Field;
use su3::homology_h1::{check_semidirect, h1_of_amalgam, AbGroupExpr};

#[test]
fn semidirect_structure() {
    let r = check_semidirect(Field::Q, 30, 1);
    assert!(r.ok(), "{:?}", r.failures);
}

#[test]
fn h1_values_with_claims() {
    use AbGroupExpr::*;
    let expected = [
        UnitsModSquares,
        Trivial,
        UnitsF,
        Trivial,
        DirectSumOverP1(Box::new(ModuleJ)),
    ];
    for (id, want) in ALL_AMALGAMS.iter().zip(expected) {
        let (v, r) = h1_of_amalgam(*id, Field::Q, 40, 3).unwrap();
        println!("{}", r.summary());
        assert_eq!(v, want, "{id}");
        assert!(r.ok(), "{id}: {:?}", r.failures);
        assert!(r.passes > 0);
    }
}
