#![allow(dead_code)]

use grg_core::reductions::{random_game, RandomParams};
use grg_core::{GameSpec, PlayerProfile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A small random game: at most 12 vertices and `singletons + large` targets.
pub fn small_game(seed: u64, profile: PlayerProfile, singletons: usize, large: usize) -> GameSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let n = rng.gen_range(2..=12usize).max(singletons).max(2);
    let edges = rng.gen_range(n..=(3 * n).min(n * n));
    random_game(&RandomParams {
        vertices: n,
        edges,
        singletons,
        large_count: large,
        large_size: rng.gen_range(2..=3.min(n)),
        seed,
        profile,
    })
    .expect("parameters are feasible")
}

/// Like [`small_game`] with a random target mix of at most `max_targets`.
pub fn mixed_game(
    seed: u64,
    profile: PlayerProfile,
    max_targets: usize,
    max_large: usize,
) -> GameSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9));
    let large = rng.gen_range(0..=max_large.min(max_targets));
    let singletons = rng.gen_range(0..=max_targets - large);
    small_game(seed, profile, singletons, large)
}
