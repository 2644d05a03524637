//! One pass/fail line per acceptance criterion. Run with
//! `cargo test --test acceptance -- --nocapture` or plain `cargo test`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use su3::cli::suites::run_suite;
use su3::error::Error;
use su3::exact_arith::Field;

const Q: Field = Field::Q;
const F5: Field = Field::Fp(5);

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(name: &str, f: Field, samples: usize) -> Outcome {
    match run_suite(name, f, samples, 0) {
        Ok(r) => {
            let mut detail = format!(
                "{} [{}]: {} checks, {} failures, {} ms",
                name,
                r.field,
                r.passes + r.failures.len(),
                r.failures.len(),
                r.duration_ms
            );
            for fl in r.failures.iter().take(3) {
                detail.push_str(&format!("\n    {}: {}", fl.check, fl.input));
            }
            Outcome { ok: r.ok() && r.passes > 0, detail }
        }
        Err(e) => Outcome { ok: false, detail: format!("{name}: {e}") },
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    Outcome {
        ok: parts.iter().all(|o| o.ok),
        detail: parts.iter().map(|o| o.detail.as_str()).collect::<Vec<_>>().join("; "),
    }
}

fn bound_via_cli(r: &str, s: &str, want: &str) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_su3"))
        .args(["bound", "--r", r, "--s", s])
        .output()
        .expect("binary runs");
    let got = String::from_utf8_lossy(&out.stdout).trim().to_string();
    Outcome {
        ok: out.status.success() && got == want,
        detail: format!("r={r} s={s}: {got}"),
    }
}

fn refuses(name: &str) -> Outcome {
    match run_suite(name, F5, 10, 0) {
        Err(e @ Error::Char0Gate(_)) => Outcome { ok: true, detail: format!("refused: {e}") },
        Err(e) => Outcome { ok: false, detail: format!("{name}: unexpected error {e}") },
        Ok(_) => Outcome { ok: false, detail: format!("{name} ran over F_5") },
    }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: Vec<Criterion> = vec![
        ("identity suite, 1000 samples, under 30 s", Box::new(|| {
            let t = Instant::now();
            let mut o = suite("identities", Q, 1000);
            let el = t.elapsed();
            o.ok &= el < Duration::from_secs(30);
            o
        })),
        ("unitarity of constructors and words, 1000 samples", Box::new(|| suite("unitarity", Q, 1000))),
        ("psi suite, 500 samples", Box::new(|| suite("psi", Q, 500))),
        ("stabilizer agreement, 200 samples per n", Box::new(|| suite("stabilizer", Q, 200))),
        ("fundamental domains, 200 words per group", Box::new(|| suite("domains", Q, 200))),
        ("amalgam round trips (300) and rebracketings (200)", Box::new(|| suite("amalgam", Q, 300))),
        ("abelianization suite", Box::new(|| suite("abelian", Q, 200))),
        ("H1 values with verified sub-claims", Box::new(|| suite("h1", Q, 200))),
        ("vanishing bound", Box::new(|| {
            all(vec![
                bound_via_cli("1", "0", "inj_from=3 bij_from=4"),
                bound_via_cli("0", "1", "inj_from=4 bij_from=5"),
                suite("bound", Q, 1),
            ])
        })),
        ("finite-field smoke test over F_5", Box::new(|| {
            let mut parts: Vec<Outcome> = ["identities", "unitarity", "psi", "stabilizer", "domains"]
                .iter()
                .map(|s| suite(s, F5, 200))
                .collect();
            parts.extend(["abelian", "h1", "bound"].iter().map(|s| refuses(s)));
            all(parts)
        })),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        if !o.ok {
            failed += 1;
        }
        println!("criterion {:>2} {tag}: {name} ({})", i + 1, o.detail);
    }
    println!("acceptance: {} of {} criteria passed in {:.1} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
