use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arena::{Arena, GameSpec, Player, PlayerProfile, MASK_WIDTH};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomParams {
    pub vertices: usize,
    /// Total edge count, at least one per vertex.
    pub edges: usize,
    pub singletons: usize,
    pub large_count: usize,
    pub large_size: usize,
    pub seed: u64,
    pub profile: PlayerProfile,
}

impl RandomParams {
    /// `n` vertices, `2n` edges capped at `n²`, two-player, no targets.
    pub fn new(vertices: usize, seed: u64) -> Self {
        RandomParams {
            vertices,
            edges: (2 * vertices).min(vertices * vertices),
            singletons: 0,
            large_count: 0,
            large_size: 2,
            seed,
            profile: PlayerProfile::TwoPlayer,
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.vertices;
        let fail = |msg: String| Err(Error::InfeasibleParams(msg));
        if n == 0 {
            return fail("need at least one vertex".into());
        }
        if self.edges < n || self.edges > n.saturating_mul(n) {
            return fail(format!(
                "edge count {} outside {n}..={}",
                self.edges,
                n.saturating_mul(n)
            ));
        }
        if self.singletons > n {
            return fail(format!(
                "{} singleton targets on {n} vertices",
                self.singletons
            ));
        }
        if self.large_count > 0 && (self.large_size < 2 || self.large_size > n) {
            return fail(format!(
                "large target size {} outside 2..={n}",
                self.large_size
            ));
        }
        if self.singletons + self.large_count > MASK_WIDTH {
            return fail(format!("more than {MASK_WIDTH} targets"));
        }
        Ok(())
    }
}

/// A random game, fully determined by `params` (ChaCha8 seeded with `seed`).
///
/// Every vertex first gets one uniformly chosen successor, then distinct
/// extra edges are added until there are `edges` in total. Singleton targets
/// are distinct vertices; each large set is a uniform `large_size`-subset.
pub fn random_game(params: &RandomParams) -> Result<GameSpec> {
    params.check()?;
    let n = params.vertices;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let owner: Vec<Player> = (0..n)
        .map(|_| match params.profile {
            PlayerProfile::OnlyEve => Player::Eve,
            PlayerProfile::OnlyAdam => Player::Adam,
            PlayerProfile::TwoPlayer => {
                if rng.gen_bool(0.5) {
                    Player::Eve
                } else {
                    Player::Adam
                }
            }
        })
        .collect();

    let mut succ: Vec<Vec<usize>> = (0..n).map(|_| vec![rng.gen_range(0..n)]).collect();
    let extra = params.edges - n;
    if extra > 0 {
        let mut present: HashSet<(usize, usize)> =
            succ.iter().enumerate().map(|(u, s)| (u, s[0])).collect();
        if 2 * params.edges <= n * n {
            let mut added = 0;
            while added < extra {
                let edge = (rng.gen_range(0..n), rng.gen_range(0..n));
                if present.insert(edge) {
                    succ[edge.0].push(edge.1);
                    added += 1;
                }
            }
        } else {
            let mut missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|e| !present.contains(e))
                .collect();
            missing.shuffle(&mut rng);
            for &(u, v) in &missing[..extra] {
                succ[u].push(v);
            }
        }
    }
    for s in &mut succ {
        s.sort_unstable();
    }

    let start = rng.gen_range(0..n);
    let singletons = index::sample(&mut rng, n, params.singletons).into_vec();
    let large_sets = (0..params.large_count)
        .map(|_| index::sample(&mut rng, n, params.large_size).into_vec())
        .collect();
    GameSpec::new(Arena::new(owner, succ)?, start, singletons, large_sets)
}
