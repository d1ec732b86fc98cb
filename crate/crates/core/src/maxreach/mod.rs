//! Optimisation variants: how many target sets Eve can guarantee.
//!
//! *Max* counts the distinct target sets a play visits, whichever they are.
//! *Promise* makes Eve name a subset up front and visit all of it; its value
//! never exceeds the max value.

mod adam;
mod eve;
mod general;
mod promise;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::genreach::Lasso;
use crate::product::{ProductState, ProductStrategy};

pub use adam::{max_value_adam_general, max_value_adam_lasso, promise_value_adam};
pub use eve::max_value_eve_scc;
pub use general::max_value_general;
pub use promise::{promise_value_general, promise_value_singleton, TargetPreorderGraph};

/// One component on an SCC-DAG path together with the targets it contributes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SccStep {
    pub vertices: Vec<usize>,
    pub weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValueWitness {
    None,
    /// Canonical target indices Eve commits to.
    PromisedSubset(Vec<usize>),
    SccPath(Vec<SccStep>),
    /// An Adam play and the number of distinct target sets it visits.
    LassoWitness {
        lasso: Lasso,
        distinct: usize,
    },
    /// Value of every reachable product state and an Eve strategy achieving it.
    ProductValue {
        values: BTreeMap<ProductState, usize>,
        strategy: ProductStrategy,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueResult {
    pub value: usize,
    pub witness: ValueWitness,
    pub product_states: Option<usize>,
}

impl ValueResult {
    fn new(value: usize, witness: ValueWitness) -> Self {
        ValueResult {
            value,
            witness,
            product_states: None,
        }
    }
}

/// Number of distinct target sets (canonical indices) hit by a set of vertices.
pub fn targets_hit(
    game: &crate::arena::GameSpec,
    vertices: impl IntoIterator<Item = usize>,
) -> usize {
    let sets = game.target_sets();
    let mut seen = vec![false; game.arena.vertex_count()];
    for v in vertices {
        seen[v] = true;
    }
    sets.iter()
        .filter(|set| set.iter().any(|&v| seen[v]))
        .count()
}
