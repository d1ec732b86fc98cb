use std::collections::BTreeMap;

use crate::arena::{GameSpec, Player};
use crate::attractor::{attract, GameGraph};
use crate::error::Result;
use crate::genreach::SolverConfig;
use crate::product::{ProductStrategy, ReachableProduct};

use super::{ValueResult, ValueWitness};

/// MaxGenReach on the product over all target sets.
///
/// Masks only grow, so Eve guarantees at least `v` target sets from a product
/// state iff she can force reaching a state whose mask has `v` bits. Values are
/// assigned by attractors to the layers `popcount ≥ v` for `v` from high to low.
pub fn max_value_general(game: &GameSpec, config: &SolverConfig) -> Result<ValueResult> {
    let k = game.target_count();
    if k == 0 {
        return Ok(ValueResult::new(0, ValueWitness::None));
    }
    let masks = game.target_masks()?;
    let product = ReachableProduct::explore(
        &game.arena,
        &masks,
        game.start,
        masks[game.start],
        config.max_product_states,
    )?;
    let size = product.len();
    let count: Vec<usize> = product
        .states
        .iter()
        .map(|s| s.mask.count_ones() as usize)
        .collect();
    let mut value: Vec<Option<usize>> = vec![None; size];
    let mut choice: Vec<Option<usize>> = vec![None; size];

    for v in (1..=k).rev() {
        let layer = attract(&product, (0..size).filter(|&i| count[i] >= v));
        for id in layer.member.ones() {
            if value[id].is_some() {
                continue;
            }
            value[id] = Some(v);
            if product.owner(id) == Player::Eve && layer.rank[id] > 0 {
                let r = layer.rank[id];
                choice[id] = product
                    .successors(id)
                    .iter()
                    .copied()
                    .find(|&w| layer.rank[w] == r - 1);
            }
        }
    }

    let mut values = BTreeMap::new();
    let mut strategy = ProductStrategy::new();
    for id in 0..size {
        let state = product.states[id];
        values.insert(state, value[id].unwrap_or(0));
        if product.owner(id) == Player::Eve {
            let next = choice[id].unwrap_or(product.successors(id)[0]);
            strategy.insert(state, product.states[next]);
        }
    }
    Ok(ValueResult {
        value: value[0].unwrap_or(0),
        witness: ValueWitness::ProductValue { values, strategy },
        product_states: Some(size),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::tests::fig1;

    #[test]
    fn fig1_values() {
        let cfg = SolverConfig::default();
        assert_eq!(max_value_general(&fig1(), &cfg).unwrap().value, 2);
        assert_eq!(
            max_value_general(&fig1().with_owner(Player::Adam), &cfg)
                .unwrap()
                .value,
            1
        );
        assert_eq!(
            max_value_general(&fig1().restrict(&[]), &cfg)
                .unwrap()
                .value,
            0
        );
    }

    #[test]
    fn fig1_strategy_goes_to_u() {
        let out = max_value_general(&fig1(), &SolverConfig::default()).unwrap();
        let ValueWitness::ProductValue { strategy, .. } = out.witness else {
            panic!()
        };
        let first = strategy.iter().find(|(p, _)| p.vertex == 0).unwrap();
        assert_eq!(first.1.vertex, 1);
    }
}
