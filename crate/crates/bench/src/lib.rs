//! Helpers shared by the benchmark targets: fixture loading and seeded
//! random polynomial generation.

use std::path::PathBuf;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use canny_core::{parse_system, system::System, Poly, VarSet};

/// Loads and validates a system from the shared fixture directory.
pub fn fixture(name: &str) -> System {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{}.sys", name));
    let source = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("fixture {} unreadable: {}", path.display(), e));
    System::validate(&parse_system(&source).unwrap()).unwrap()
}

/// Random sparse polynomial with up to `terms` monomials of total degree at
/// most `degree` and integer coefficients in [-100, 100]. Deterministic in
/// the seed so benchmark inputs are stable across runs.
pub fn random_poly(vs: &Arc<VarSet>, degree: u32, terms: usize, seed: u64) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = Poly::zero(vs);
    for _ in 0..terms {
        let mut exps = vec![0u32; vs.len()];
        let mut left = degree;
        for e in exps.iter_mut() {
            *e = rng.gen_range(0..=left);
            left -= *e;
        }
        let c = rng.gen_range(-100i64..=100);
        if c != 0 {
            p = &p + &Poly::from_int_terms(vs, &[(c, &exps)]);
        }
    }
    p
}
