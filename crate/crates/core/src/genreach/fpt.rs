use crate::arena::{GameSpec, Player};
use crate::attractor::{attract, Attraction, GameGraph};
use crate::error::{Error, Result};
use crate::product::{full_mask, FullProduct};

use super::chain::ChainAnalysis;
use super::{Algorithm, Certificate, SolveOutcome, SolverConfig, StartMask};

/// GenReach in time `O(m · |T| · 2^k)` for `k` large sets.
///
/// The singletons must be visited in increasing attractor order (anything
/// else lets Adam avoid one of them), so after the chain check the singletons
/// become checkpoints `t_1, …, t_r` along a product `V × 2^k` that remembers
/// which large sets were seen. Working backwards from the full-mask layer,
/// `A_{i+1} = Attr(D_{i+1})` and `D_i = A_{i+1} ∩ ({t_i} × 2^k)`; Eve wins iff
/// the start state lies in `A_1`. Singletons sharing an attractor are
/// interchangeable, so one representative per group is kept.
pub fn solve_fpt(game: &GameSpec, config: &SolverConfig) -> Result<SolveOutcome> {
    if game.target_count() == 0 {
        return Ok(SolveOutcome::new(
            Player::Eve,
            Algorithm::Fpt,
            Certificate::VacuousWin,
        ));
    }
    let arena = &game.arena;
    let analysis = ChainAnalysis::new(arena, &game.singletons);
    if let Some(cert) = analysis.refutation(game.start) {
        return Ok(SolveOutcome::new(Player::Adam, Algorithm::Fpt, cert));
    }
    let groups = analysis.visit_groups();
    let checkpoints: Vec<usize> = groups.iter().map(|g| game.singletons[g[0]]).collect();

    let k = game.large_sets.len();
    let n = arena.vertex_count();
    let states = if k < 48 {
        n.saturating_mul(1 << k)
    } else {
        usize::MAX
    };
    if states > config.max_product_states {
        return Err(Error::MemoryBudget {
            states,
            limit: config.max_product_states,
        });
    }
    let masks = game.large_masks()?;
    let product = FullProduct::new(arena, &masks, k);

    let full = full_mask(k);
    let mut layer: Attraction = attract(&product, (0..n).map(|v| product.id(v, full)));
    for &t in checkpoints.iter().rev() {
        let checkpoint: Vec<usize> = (0..product.mask_count() as u64)
            .map(|mask| product.id(t, mask))
            .filter(|&id| layer.contains(id))
            .collect();
        layer = attract(&product, checkpoint);
    }
    let start_mask = match config.start_mask {
        StartMask::Seeded => masks[game.start],
        StartMask::Empty => 0,
    };
    debug_assert_eq!(product.state_count(), states);
    let winner = if layer.contains(product.id(game.start, start_mask)) {
        Player::Eve
    } else {
        Player::Adam
    };
    Ok(SolveOutcome {
        product_states: Some(states),
        ..SolveOutcome::new(
            winner,
            Algorithm::Fpt,
            Certificate::FptLayers {
                visit_order: groups.into_iter().flatten().collect(),
                product_states: states,
            },
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::tests::fig1;
    use crate::arena::Arena;
    use crate::genreach::{solve_general, solve_singleton_chain};

    #[test]
    fn fig1_matches_chain_solver() {
        let g = fig1();
        let fpt = solve_fpt(&g, &SolverConfig::default()).unwrap();
        assert_eq!(fpt.winner, solve_singleton_chain(&g).unwrap().winner);
        assert_eq!(fpt.winner, Player::Adam);
    }

    #[test]
    fn one_large_example_with_fpt() {
        let arena = Arena::new(
            vec![Player::Eve; 4],
            vec![vec![1, 2], vec![3], vec![3], vec![3]],
        )
        .unwrap();
        let g = GameSpec::new(arena, 0, vec![3], vec![vec![1, 2]]).unwrap();
        let out = solve_fpt(&g, &SolverConfig::default()).unwrap();
        assert_eq!(out.winner, Player::Eve);
        assert_eq!(out.product_states, Some(8));
        assert_eq!(
            out.winner,
            solve_general(&g, &SolverConfig::default()).unwrap().winner
        );
    }

    #[test]
    fn large_sets_must_be_collected_between_checkpoints() {
        // Eve: 0 -> {1, 2}; 1 -> 3; 2 -> 3; 3 -> 3. Singleton 3, large sets {1, 4} and {2, 4}
        // where 4 is unreachable: she can only collect one of them.
        let arena = Arena::new(
            vec![Player::Eve; 5],
            vec![vec![1, 2], vec![3], vec![3], vec![3], vec![4]],
        )
        .unwrap();
        let g = GameSpec::new(arena, 0, vec![3], vec![vec![1, 4], vec![2, 4]]).unwrap();
        assert_eq!(
            solve_fpt(&g, &SolverConfig::default()).unwrap().winner,
            Player::Adam
        );
        assert_eq!(
            solve_general(&g, &SolverConfig::default()).unwrap().winner,
            Player::Adam
        );
    }

    #[test]
    fn memory_budget_is_enforced() {
        let arena = Arena::new(vec![Player::Eve; 3], vec![vec![1], vec![2], vec![0]]).unwrap();
        let g = GameSpec::new(arena, 0, vec![], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let tight = SolverConfig {
            max_product_states: 10,
            ..Default::default()
        };
        assert!(matches!(
            solve_fpt(&g, &tight),
            Err(Error::MemoryBudget { .. })
        ));
        assert_eq!(
            solve_fpt(&g, &SolverConfig::default()).unwrap().winner,
            Player::Eve
        );
    }

    #[test]
    fn empty_start_mask_ignores_start_membership() {
        let arena = Arena::new(vec![Player::Eve; 3], vec![vec![1], vec![1], vec![2]]).unwrap();
        let g = GameSpec::new(arena, 0, vec![], vec![vec![0, 2]]).unwrap();
        let empty = SolverConfig {
            start_mask: StartMask::Empty,
            ..Default::default()
        };
        assert_eq!(
            solve_fpt(&g, &SolverConfig::default()).unwrap().winner,
            Player::Eve
        );
        assert_eq!(solve_fpt(&g, &empty).unwrap().winner, Player::Adam);
    }
}
