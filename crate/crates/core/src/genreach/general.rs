use crate::arena::{GameSpec, Player};
use crate::attractor::{attract, GameGraph, UNREACHED};
use crate::error::Result;
use crate::product::{full_mask, ProductStrategy, ReachableProduct};

use super::{Algorithm, Certificate, SolveOutcome, SolverConfig, StartMask};

/// Start mask of the product over all targets (singletons first, then large sets).
pub(crate) fn start_mask(game: &GameSpec, masks: &[u64], mode: StartMask) -> u64 {
    let own = masks[game.start];
    match mode {
        StartMask::Seeded => own,
        StartMask::Empty => own & full_mask(game.singletons.len()),
    }
}

/// Baseline solver: reachability of the full mask in the product of the arena
/// with one memory bit per target set, explored forward from the start state.
/// The certificate is a positional product strategy for the winner.
pub fn solve_general(game: &GameSpec, config: &SolverConfig) -> Result<SolveOutcome> {
    let k = game.target_count();
    if k == 0 {
        return Ok(SolveOutcome::new(
            Player::Eve,
            Algorithm::Product,
            Certificate::VacuousWin,
        ));
    }
    let masks = game.target_masks()?;
    let full = full_mask(k);
    let product = ReachableProduct::explore(
        &game.arena,
        &masks,
        game.start,
        start_mask(game, &masks, config.start_mask),
        config.max_product_states,
    )?;
    let goal = (0..product.len()).filter(|&i| product.states[i].mask == full);
    let attr = attract(&product, goal);
    let winner = if attr.contains(0) {
        Player::Eve
    } else {
        Player::Adam
    };

    let mut strategy = ProductStrategy::new();
    for id in 0..product.len() {
        if product.owner(id) != winner {
            continue;
        }
        let succ = product.successors(id);
        let choice = match winner {
            Player::Eve if attr.contains(id) => {
                let r = attr.rank[id];
                if r == 0 {
                    Some(succ[0])
                } else {
                    succ.iter().copied().find(|&w| attr.rank[w] == r - 1)
                }
            }
            Player::Adam if !attr.contains(id) => {
                succ.iter().copied().find(|&w| attr.rank[w] == UNREACHED)
            }
            _ => None,
        };
        if let Some(w) = choice {
            strategy.insert(product.states[id], product.states[w]);
        }
    }
    Ok(SolveOutcome {
        product_states: Some(product.len()),
        ..SolveOutcome::new(
            winner,
            Algorithm::Product,
            Certificate::ProductStrategy(strategy),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::tests::fig1;
    use crate::arena::Arena;
    use crate::product::ProductState;

    #[test]
    fn fig1_is_lost() {
        let out = solve_general(&fig1(), &SolverConfig::default()).unwrap();
        assert_eq!(out.winner, Player::Adam);
        let Certificate::ProductStrategy(s) = out.certificate else {
            panic!()
        };
        // Adam picks one of the two loops at u.
        let at_u = s.iter().find(|(p, _)| p.vertex == 1).unwrap();
        assert!([2, 4].contains(&at_u.1.vertex));
    }

    #[test]
    fn vacuous() {
        let g = fig1().restrict(&[]);
        let out = solve_general(&g, &SolverConfig::default()).unwrap();
        assert_eq!(out.winner, Player::Eve);
        assert_eq!(out.certificate, Certificate::VacuousWin);
    }

    #[test]
    fn start_mask_conventions_differ_when_start_is_in_a_large_set() {
        // 0 -> 1 -> 1, large set {0, 2}; 2 is unreachable.
        let arena = Arena::new(vec![Player::Eve; 3], vec![vec![1], vec![1], vec![2]]).unwrap();
        let g = GameSpec::new(arena, 0, vec![], vec![vec![0, 2]]).unwrap();
        let seeded = solve_general(&g, &SolverConfig::default()).unwrap();
        assert_eq!(seeded.winner, Player::Eve);
        let empty = SolverConfig {
            start_mask: StartMask::Empty,
            ..Default::default()
        };
        assert_eq!(solve_general(&g, &empty).unwrap().winner, Player::Adam);
    }

    #[test]
    fn eve_strategy_moves_toward_goal() {
        let arena = Arena::new(vec![Player::Eve; 3], vec![vec![1, 2], vec![1], vec![2]]).unwrap();
        let g = GameSpec::new(arena, 0, vec![2], vec![]).unwrap();
        let out = solve_general(&g, &SolverConfig::default()).unwrap();
        let Certificate::ProductStrategy(s) = out.certificate else {
            panic!()
        };
        assert_eq!(s[&ProductState::new(0, 0)], ProductState::new(2, 1));
    }
}
