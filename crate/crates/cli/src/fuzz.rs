//! Seeded random Reidemeister rewrites.

use kashaev_core::diagram::{Diagram, Kink, Pass, Sign};
use kashaev_core::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_kink<R: Rng>(d: &Diagram, rng: &mut R) -> Result<Diagram> {
    let edge = rng.gen_range(0..d.edge_count());
    let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
    let first = if rng.gen_bool(0.5) { Pass::Under } else { Pass::Over };
    d.r1_kink(edge, Kink { sign, first })
}

/// One R1 or R2 move. R2 picks an edge, then a partner sharing a region with
/// it; when there is none it falls back to R1.
pub fn random_move<R: Rng>(d: &Diagram, rng: &mut R) -> Result<Diagram> {
    if d.crossing_count() == 0 || rng.gen_bool(0.5) {
        return random_kink(d, rng);
    }
    let e = d.edge_count();
    let a = rng.gen_range(0..e);
    let mut options = Vec::new();
    for b in (0..e).filter(|&b| b != a) {
        for r in d.common_regions(a, b)? {
            options.push((b, r));
        }
    }
    if options.is_empty() {
        return random_kink(d, rng);
    }
    let (b, r) = options[rng.gen_range(0..options.len())];
    if rng.gen_bool(0.5) {
        d.r2_move_in(a, b, r)
    } else {
        d.r2_move_in(b, a, r)
    }
}

/// A chain of one to three random moves.
pub fn random_rewrite<R: Rng>(d: &Diagram, rng: &mut R) -> Result<Diagram> {
    let steps = rng.gen_range(1..=3);
    let mut out = d.clone();
    for _ in 0..steps {
        out = random_move(&out, rng)?;
    }
    Ok(out)
}

/// `count` independent rewrites of `d`, reproducible from `seed`.
pub fn variants(d: &Diagram, count: usize, seed: u64) -> Result<Vec<Diagram>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_rewrite(d, &mut rng)).collect()
}
