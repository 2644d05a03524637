use std::path::PathBuf;
use std::process::Command;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use su3::amalgam::{self, sample, AmalgamId};
use su3::cli::{parse_elem, parse_elem_expr, parse_word, ElemExpr, LExpr};
use su3::exact_arith::Field;

const Q: Field = Field::Q;

fn su3(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_su3")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("su3-{}-{name}", std::process::id()))
}

fn rand_scalar(rng: &mut ChaCha8Rng, depth: u32) -> LExpr {
    let b = |rng: &mut ChaCha8Rng| Box::new(rand_scalar(rng, depth - 1));
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..3) {
            0 => LExpr::Num(BigInt::from(rng.gen_range(0..20))),
            1 => LExpr::Rt,
            _ => LExpr::T,
        };
    }
    match rng.gen_range(0..6) {
        0 => LExpr::Neg(b(rng)),
        1 => LExpr::Add(b(rng), b(rng)),
        2 => LExpr::Sub(b(rng), b(rng)),
        3 => LExpr::Mul(b(rng), b(rng)),
        4 => LExpr::Div(b(rng), b(rng)),
        _ => LExpr::Pow(b(rng), rng.gen_range(-3..4)),
    }
}

fn rand_elem(rng: &mut ChaCha8Rng, depth: u32) -> ElemExpr {
    let sc = |rng: &mut ChaCha8Rng| rand_scalar(rng, 2);
    if depth == 0 || rng.gen_bool(0.4) {
        return match rng.gen_range(0..7) {
            0 => ElemExpr::Ua(sc(rng), sc(rng)),
            1 => ElemExpr::U2a(sc(rng)),
            2 => ElemExpr::Uma(sc(rng), sc(rng)),
            3 => ElemExpr::At(sc(rng)),
            4 => ElemExpr::S,
            5 => ElemExpr::Sj,
            _ => ElemExpr::Mat(Box::new(std::array::from_fn(|_| rand_scalar(rng, 1)))),
        };
    }
    if rng.gen_bool(0.3) {
        ElemExpr::Inv(Box::new(rand_elem(rng, depth - 1)))
    } else {
        let n = rng.gen_range(2..4);
        ElemExpr::Prod((0..n).map(|_| rand_elem(rng, depth - 1)).collect())
    }
}

#[test]
fn printing_then_parsing_is_the_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let e = rand_elem(&mut rng, 3);
        let s = e.to_string();
        let back = parse_elem_expr(&s).unwrap_or_else(|err| panic!("{s}: {err}"));
        assert_eq!(back, e, "{s}");
        assert_eq!(back.to_string(), s);
    }
}

#[test]
fn element_display_reparses() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let g = su3::group_core::sample::word(&mut rng, Q, 6, su3::group_core::sample::tilde_gamma_gen);
        assert_eq!(parse_elem(&g.to_string(), Q).unwrap(), g);
    }
}

#[test]
fn spec_examples() {
    assert_eq!(su3(&["bound", "--r", "1", "--s", "0"]).1, "inj_from=3 bij_from=4\n");
    assert_eq!(su3(&["bound", "--r", "0", "--s", "1"]).1, "inj_from=4 bij_from=5\n");
    assert_eq!(su3(&["member", "--group", "Gamma", "s"]).1, "true\n");
    assert_eq!(su3(&["member", "--group", "Gamma", "at(rt)"]).1, "false\n");
    let (code, _, err) = su3(&["member", "--group", "Gamma", "ua(rt; -t/2)"]);
    assert_eq!(code, 2);
    assert!(err.contains("invariant violated"), "{err}");
    let (code, _, err) = su3(&["member", "--group", "Gamma", "ua(1;"]);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error at 5"), "{err}");
    assert_eq!(su3(&["verify", "all", "--frobnicate"]).0, 2);
}

#[test]
fn char0_gate_refuses_homology_over_prime_fields() {
    for suite in ["abelian", "h1", "bound"] {
        let (code, _, err) = su3(&["verify", suite, "--field", "fp:5", "--samples", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("requires a field of characteristic 0"), "{err}");
    }
    let (code, _, err) = su3(&["h1", "--amalgam", "GammaNagao", "--field", "fp:7"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn verify_all_is_deterministic() {
    let (a, b) = (tmp("a.json"), tmp("b.json"));
    let args = |p: &PathBuf| {
        vec!["verify".to_string(), "all".into(), "--samples".into(), "6".into(), "--seed".into(), "7".into(), "--json".into(), p.display().to_string()]
    };
    for p in [&a, &b] {
        let out = Command::new(env!("CARGO_BIN_EXE_su3")).args(args(p)).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    }
    let strip = |p: &PathBuf| {
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        for k in ["suite", "field", "seed", "samples", "passes", "failures", "duration_ms"] {
            assert!(v.get(k).is_some(), "missing {k}");
        }
        v.as_object_mut().unwrap().remove("duration_ms");
        v
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(strip(&a)["failures"].as_array().unwrap().len(), 0);
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn decompose_then_normal_form_through_files() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for id in amalgam::ALL_AMALGAMS {
        let w = sample::word(&mut rng, Q, id, 4);
        let g = amalgam::evaluate(Q, &w);
        let m = tmp(&format!("{id}.mat"));
        let rows: Vec<String> = (0..3)
            .map(|i| (0..3).map(|j| g.get(i, j).to_string()).collect::<Vec<_>>().join("; "))
            .collect();
        std::fs::write(&m, format!("# {id}\n{}\n", rows.join("\n"))).unwrap();
        let (code, out, err) = su3(&["decompose", "--group", &id.to_string(), "--matrix", m.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
        let word = parse_word(&out, id, Q).unwrap();
        assert_eq!(amalgam::evaluate(Q, &word), g);

        let wf = tmp(&format!("{id}.word"));
        std::fs::write(&wf, &out).unwrap();
        let (code, nf_out, err) = su3(&["nf", "--amalgam", &id.to_string(), "--word", wf.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
        let nf_word = parse_word(&nf_out, id, Q).unwrap();
        assert_eq!(amalgam::evaluate(Q, &nf_word), g);
        let _ = std::fs::remove_file(m);
        let _ = std::fs::remove_file(wf);
    }
}

#[test]
fn word_files_reject_foreign_letters() {
    let text = "# a letter of the wrong factor\nGammaNagao.L: ua(rt; t/2)\n";
    assert!(parse_word(text, AmalgamId::GammaNagao, Q).is_err());
    let text = "GammaNagao.R: ua(rt; t/2)\nGammaNagao.L: s\n";
    assert_eq!(parse_word(text, AmalgamId::GammaNagao, Q).unwrap().len(), 2);
    let text = "GammaTFree.x=inf: ua(rt; t/2)\n";
    assert_eq!(parse_word(text, AmalgamId::GammaTFree, Q).unwrap().len(), 1);
}

#[test]
fn reduce_writes_a_dot_segment() {
    let p = tmp("seg.dot");
    let (code, out, err) = su3(&["reduce", "--group", "GammaT", "--vertex", "s*ua(rt;t/2)@3", "--dot", p.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("point: BouquetGammaT"), "{out}");
    let dot = std::fs::read_to_string(&p).unwrap();
    assert!(dot.starts_with("graph domain {") && dot.contains("x="), "{dot}");
    let _ = std::fs::remove_file(p);
}
