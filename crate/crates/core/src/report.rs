//! Pass/fail bookkeeping shared by the verification suites.

use std::time::Instant;

use serde::Serialize;

use crate::exact_arith::Field;

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub field: String,
    pub seed: u64,
    pub samples: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub duration_ms: u128,
    #[serde(skip)]
    started: Option<Instant>,
}

/// Failures beyond this many are counted but not stored.
const MAX_EXHIBITS: usize = 20;

impl Report {
    pub fn new(suite: &str, field: Field, seed: u64, samples: usize) -> Report {
        Report {
            suite: suite.to_string(),
            field: field.to_string(),
            seed,
            samples,
            passes: 0,
            failures: Vec::new(),
            duration_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn check(&mut self, name: &str, ok: bool, input: impl FnOnce() -> String) {
        if ok {
            self.passes += 1;
        } else if self.failures.len() < MAX_EXHIBITS {
            self.failures.push(Failure {
                check: name.to_string(),
                input: input(),
            });
        } else {
            self.failures.push(Failure {
                check: name.to_string(),
                input: String::new(),
            });
        }
    }

    /// Records an error from a fallible step as a failure.
    pub fn check_result<T, E: std::fmt::Display>(
        &mut self,
        name: &str,
        r: std::result::Result<T, E>,
        input: impl FnOnce() -> String,
    ) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                let s = input();
                self.check(name, false, || format!("{s} ({e})"));
                None
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn finish(mut self) -> Report {
        if let Some(t) = self.started.take() {
            self.duration_ms = t.elapsed().as_millis();
        }
        self
    }

    pub fn merge(&mut self, other: Report) {
        self.passes += other.passes;
        self.failures.extend(other.failures);
    }

    pub fn summary(&self) -> String {
        format!(
            "{} [{}] seed={} samples={}: {} passed, {} failed ({} ms)",
            self.suite,
            self.field,
            self.seed,
            self.samples,
            self.passes,
            self.failures.len(),
            self.duration_ms
        )
    }
}

/// The generator for one suite: ChaCha8 keyed by the seed and the suite name.
pub fn rng_for(seed: u64, suite: &str) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    // FNV-1a keeps the stream independent of std's hasher
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in suite.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&h.to_le_bytes());
    rand_chacha::ChaCha8Rng::from_seed(key)
}
