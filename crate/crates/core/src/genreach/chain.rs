use crate::arena::{Arena, GameSpec, Player};
use crate::attractor::{attractor, check_total_preorder, AttractorResult, PreorderCheck};
use crate::error::Result;

use super::{wrong_class, Algorithm, Certificate, SolveOutcome};

/// Attractors of the singleton targets and how they are ordered by inclusion.
#[derive(Debug, Clone)]
pub struct ChainAnalysis {
    pub attractors: Vec<AttractorResult>,
    pub check: PreorderCheck,
}

impl ChainAnalysis {
    pub fn new(arena: &Arena, singletons: &[usize]) -> Self {
        let attractors: Vec<_> = singletons.iter().map(|&t| attractor(arena, [t])).collect();
        let sets: Vec<_> = attractors.iter().map(|a| a.member.clone()).collect();
        let check = check_total_preorder(&sets);
        ChainAnalysis { attractors, check }
    }

    /// Why Eve cannot visit every singleton from `start`, if she cannot.
    pub fn refutation(&self, start: usize) -> Option<Certificate> {
        match &self.check {
            PreorderCheck::Incomparable {
                first,
                second,
                only_first,
                only_second,
            } => Some(Certificate::IncomparabilityWitness {
                first: *first,
                second: *second,
                only_first: *only_first,
                only_second: *only_second,
            }),
            PreorderCheck::TotalOrder { order, .. } => {
                let smallest = *order.last()?;
                (!self.attractors[smallest].contains(start))
                    .then_some(Certificate::StartOutsideChain { target: smallest })
            }
        }
    }

    /// Singleton indices, largest attractor first. Empty when not a chain.
    pub fn chain(&self) -> &[usize] {
        match &self.check {
            PreorderCheck::TotalOrder { order, .. } => order,
            PreorderCheck::Incomparable { .. } => &[],
        }
    }

    /// Groups of singletons with equal attractors, smallest attractor first:
    /// the order in which Eve visits them.
    pub fn visit_groups(&self) -> Vec<Vec<usize>> {
        match &self.check {
            PreorderCheck::TotalOrder { groups, .. } => groups.iter().rev().cloned().collect(),
            PreorderCheck::Incomparable { .. } => Vec::new(),
        }
    }
}

/// GenReach with singleton targets only: Eve wins iff the target attractors
/// form a chain under inclusion and the smallest one contains the start.
pub fn solve_singleton_chain(game: &GameSpec) -> Result<SolveOutcome> {
    if !game.large_sets.is_empty() {
        return Err(wrong_class("chain", "no large target sets", game));
    }
    if game.singletons.is_empty() {
        return Ok(SolveOutcome::new(
            Player::Eve,
            Algorithm::Chain,
            Certificate::VacuousWin,
        ));
    }
    let analysis = ChainAnalysis::new(&game.arena, &game.singletons);
    Ok(match analysis.refutation(game.start) {
        Some(cert) => SolveOutcome::new(Player::Adam, Algorithm::Chain, cert),
        None => SolveOutcome::new(
            Player::Eve,
            Algorithm::Chain,
            Certificate::ChainOrder {
                chain: analysis.chain().to_vec(),
                insertion: None,
            },
        ),
    })
}

/// GenReach with one large set `F0` and singletons `t_1..t_k`, ordered so that
/// `A_1 ⊇ … ⊇ A_k`. With `A_0 = V` and `t_{k+1} = s`, Eve wins iff the
/// attractors form a chain, `s ∈ A_k`, and for some `0 ≤ i ≤ k` the vertex
/// `t_{i+1}` lies in `Attr(A_i ∩ F0)`: on the way from `t_{i+1}` to `t_i` she
/// detours through `F0` without leaving `A_i`.
pub fn solve_one_large(game: &GameSpec) -> Result<SolveOutcome> {
    if game.large_sets.len() != 1 {
        return Err(wrong_class(
            "one-large",
            "exactly one large target set",
            game,
        ));
    }
    let arena = &game.arena;
    let large = &game.large_sets[0];
    let analysis = ChainAnalysis::new(arena, &game.singletons);
    if let Some(cert) = analysis.refutation(game.start) {
        return Ok(SolveOutcome::new(Player::Adam, Algorithm::OneLarge, cert));
    }
    let chain = analysis.chain();
    let k = chain.len();
    for i in 0..=k {
        let entry = if i < k {
            game.singletons[chain[i]]
        } else {
            game.start
        };
        let collect: Vec<usize> = if i == 0 {
            large.clone()
        } else {
            let region = &analysis.attractors[chain[i - 1]];
            large
                .iter()
                .copied()
                .filter(|&v| region.contains(v))
                .collect()
        };
        if attractor(arena, collect).contains(entry) {
            return Ok(SolveOutcome::new(
                Player::Eve,
                Algorithm::OneLarge,
                Certificate::ChainOrder {
                    chain: chain.to_vec(),
                    insertion: Some(i),
                },
            ));
        }
    }
    Ok(SolveOutcome::new(
        Player::Adam,
        Algorithm::OneLarge,
        Certificate::NoLargeSetInsertion {
            chain: chain.to_vec(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::tests::fig1;
    use crate::error::Error;

    fn eve_game(
        succ: Vec<Vec<usize>>,
        start: usize,
        t: Vec<usize>,
        f: Vec<Vec<usize>>,
    ) -> GameSpec {
        let n = succ.len();
        GameSpec::new(Arena::new(vec![Player::Eve; n], succ).unwrap(), start, t, f).unwrap()
    }

    #[test]
    fn fig1_chain_fails_on_incomparable_attractors() {
        let out = solve_singleton_chain(&fig1()).unwrap();
        assert_eq!(out.winner, Player::Adam);
        match out.certificate {
            Certificate::IncomparabilityWitness { first, second, .. } => {
                let g = fig1();
                let pair = [g.singletons[first], g.singletons[second]];
                assert!(pair.contains(&2) || pair.contains(&3));
                assert!(pair.contains(&4) || pair.contains(&5));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn forced_chain_orders_largest_first() {
        // s -> t1 -> t2 -> t2
        let g = eve_game(vec![vec![1], vec![2], vec![2]], 0, vec![1, 2], vec![]);
        let out = solve_singleton_chain(&g).unwrap();
        assert_eq!(out.winner, Player::Eve);
        assert_eq!(
            out.certificate,
            Certificate::ChainOrder {
                chain: vec![1, 0],
                insertion: None
            }
        );
    }

    #[test]
    fn fig1_restricted_to_v() {
        let g = fig1().restrict(&[4]);
        assert_eq!(solve_singleton_chain(&g).unwrap().winner, Player::Eve);
    }

    #[test]
    fn one_large_detour_before_first_target() {
        // s -> f1, f2; f1, f2 -> t1; t1 -> t1
        let g = eve_game(
            vec![vec![1, 2], vec![3], vec![3], vec![3]],
            0,
            vec![3],
            vec![vec![1, 2]],
        );
        let out = solve_one_large(&g).unwrap();
        assert_eq!(out.winner, Player::Eve);
        assert_eq!(
            out.certificate,
            Certificate::ChainOrder {
                chain: vec![0],
                insertion: Some(1)
            }
        );
        // f2 no longer reaches t1, but s -> f1 -> t1 still works.
        let g = eve_game(
            vec![vec![1, 2], vec![3], vec![2], vec![3]],
            0,
            vec![3],
            vec![vec![1, 2]],
        );
        assert_eq!(solve_one_large(&g).unwrap().winner, Player::Eve);
    }

    #[test]
    fn one_large_without_singletons_is_plain_reachability() {
        let g = eve_game(vec![vec![1], vec![2], vec![2]], 0, vec![], vec![vec![1, 2]]);
        let out = solve_one_large(&g).unwrap();
        assert_eq!(out.winner, Player::Eve);
        assert!(matches!(
            out.certificate,
            Certificate::ChainOrder {
                insertion: Some(0),
                ..
            }
        ));
    }

    #[test]
    fn one_large_loses_when_set_is_skipped() {
        // s -> t1 -> t1, large set {a, b} unreachable
        let g = eve_game(
            vec![vec![1], vec![1], vec![3], vec![2]],
            0,
            vec![1],
            vec![vec![2, 3]],
        );
        let out = solve_one_large(&g).unwrap();
        assert_eq!(out.winner, Player::Adam);
        assert!(matches!(
            out.certificate,
            Certificate::NoLargeSetInsertion { .. }
        ));
    }

    #[test]
    fn wrong_class_errors() {
        assert!(matches!(
            solve_one_large(&fig1()),
            Err(Error::WrongClass(_))
        ));
        let g = eve_game(vec![vec![1], vec![2], vec![2]], 0, vec![], vec![vec![1, 2]]);
        assert!(matches!(
            solve_singleton_chain(&g),
            Err(Error::WrongClass(_))
        ));
    }
}
