use crate::arena::{GameSpec, Player, PlayerProfile};
use crate::attractor::attractor;
use crate::error::{Error, Result};

use super::{wrong_class, Algorithm, Certificate, Lasso, SolveOutcome};

/// GenReach when Adam owns every vertex: Adam wins iff the start lies outside
/// the Eve-attractor of some target set, and then a simple lasso avoiding
/// that set witnesses it.
pub fn solve_one_player_adam(game: &GameSpec) -> Result<SolveOutcome> {
    if game.classify().profile != PlayerProfile::OnlyAdam {
        return Err(wrong_class("adam", "every vertex owned by Adam", game));
    }
    if game.target_count() == 0 {
        return Ok(SolveOutcome::new(
            Player::Eve,
            Algorithm::Adam,
            Certificate::VacuousWin,
        ));
    }
    for (index, set) in game.target_sets().into_iter().enumerate() {
        if !attractor(&game.arena, set).contains(game.start) {
            let lasso = lasso_witness(game, index)?;
            return Ok(SolveOutcome::new(
                Player::Adam,
                Algorithm::Adam,
                Certificate::Lasso {
                    avoided: index,
                    lasso,
                },
            ));
        }
    }
    Ok(SolveOutcome::new(
        Player::Eve,
        Algorithm::Adam,
        Certificate::ForcedVisits,
    ))
}

/// A simple lasso from the start that never touches target set `avoided`.
///
/// Outside the Eve-attractor every (Adam) vertex keeps a successor outside it,
/// so walking to the smallest such successor until a vertex repeats gives a
/// lasso of at most `|V| + 1` vertices.
pub fn lasso_witness(game: &GameSpec, avoided: usize) -> Result<Lasso> {
    if game.classify().profile != PlayerProfile::OnlyAdam {
        return Err(wrong_class(
            "lasso_witness",
            "every vertex owned by Adam",
            game,
        ));
    }
    if avoided >= game.target_count() {
        return Err(Error::NoWitness(format!("no target with index {avoided}")));
    }
    let arena = &game.arena;
    let attr = attractor(arena, game.target_set(avoided));
    if attr.contains(game.start) {
        return Err(Error::NoWitness(format!(
            "every play from {} visits target {avoided}",
            game.start
        )));
    }
    let mut position = vec![usize::MAX; arena.vertex_count()];
    let mut walk = Vec::new();
    let mut cur = game.start;
    while position[cur] == usize::MAX {
        position[cur] = walk.len();
        walk.push(cur);
        cur = arena
            .successors(cur)
            .iter()
            .copied()
            .filter(|&w| !attr.contains(w))
            .min()
            .expect("Adam vertex outside the attractor has an escape");
    }
    let knot = position[cur];
    Ok(Lasso {
        prefix: walk[..knot].to_vec(),
        cycle: walk[knot..].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::tests::fig1;
    use crate::arena::Arena;

    #[test]
    fn fig1_adam_escapes() {
        let g = fig1().with_owner(Player::Adam);
        let out = solve_one_player_adam(&g).unwrap();
        assert_eq!(out.winner, Player::Adam);
        let Certificate::Lasso { avoided, lasso } = out.certificate else {
            panic!()
        };
        assert_eq!(avoided, 0);
        let target = g.target_set(avoided);
        assert!(lasso.vertices().all(|v| !target.contains(&v)));
        assert!(lasso.play().len() <= g.arena.vertex_count() + 1);
    }

    #[test]
    fn fig1_adam_lasso_for_u1() {
        let g = fig1().with_owner(Player::Adam);
        let lasso = lasso_witness(&g, 0).unwrap();
        let play = lasso.play();
        assert_eq!(play[0], 0);
        for w in play.windows(2) {
            assert!(g.arena.has_edge(w[0], w[1]));
        }
        assert!(!play.contains(&2));
    }

    #[test]
    fn self_loop_target_is_forced() {
        let arena = Arena::new(vec![Player::Adam], vec![vec![0]]).unwrap();
        let g = GameSpec::new(arena, 0, vec![0], vec![]).unwrap();
        let out = solve_one_player_adam(&g).unwrap();
        assert_eq!(out.winner, Player::Eve);
        assert!(matches!(lasso_witness(&g, 0), Err(Error::NoWitness(_))));
    }

    #[test]
    fn loop_at_start() {
        let arena = Arena::new(vec![Player::Adam; 2], vec![vec![0], vec![1]]).unwrap();
        let g = GameSpec::new(arena, 0, vec![1], vec![]).unwrap();
        let lasso = lasso_witness(&g, 0).unwrap();
        assert!(lasso.prefix.is_empty());
        assert_eq!(lasso.cycle, vec![0]);
    }

    #[test]
    fn requires_only_adam() {
        assert!(matches!(
            solve_one_player_adam(&fig1()),
            Err(Error::WrongClass(_))
        ));
    }
}
