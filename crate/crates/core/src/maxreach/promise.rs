use itertools::Itertools;

use crate::arena::GameSpec;
use crate::arena::MASK_WIDTH;
use crate::attractor::attractor;
use crate::error::{Error, Result};
use crate::genreach::{solve, wrong_class, Algorithm, SolverConfig};
use crate::scc::{condense, SccDag};

use super::{ValueResult, ValueWitness};

/// Attractor relation between the start and the singleton targets.
///
/// Node `i < |T|` is singleton target `i`; when the start is not itself a
/// target it gets an extra node `|T|`. There is an edge `a → b` iff vertex `a`
/// lies in the Eve-attractor of vertex `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetPreorderGraph {
    /// Arena vertex behind each node.
    pub nodes: Vec<usize>,
    /// Node holding the start vertex.
    pub start_node: usize,
    pub edges: Vec<Vec<usize>>,
    /// 1 for target nodes, 0 for a start that is not a target.
    pub weights: Vec<usize>,
}

impl TargetPreorderGraph {
    pub fn new(game: &GameSpec) -> Self {
        let mut nodes = game.singletons.clone();
        let mut weights = vec![1; nodes.len()];
        let start_node = match nodes.iter().position(|&t| t == game.start) {
            Some(i) => i,
            None => {
                nodes.push(game.start);
                weights.push(0);
                nodes.len() - 1
            }
        };
        let attractors: Vec<_> = nodes.iter().map(|&t| attractor(&game.arena, [t])).collect();
        let edges = nodes
            .iter()
            .map(|&a| {
                (0..nodes.len())
                    .filter(|&j| attractors[j].contains(a))
                    .collect()
            })
            .collect();
        TargetPreorderGraph {
            nodes,
            start_node,
            edges,
            weights,
        }
    }

    pub fn condensation(&self) -> SccDag {
        condense(self.nodes.len(), |i| self.edges[i].iter().copied())
    }
}

/// MaxGenReachPromise with singleton targets only.
///
/// A set of singletons can be promised iff their attractors form a chain with
/// the start in the smallest, which is exactly a path from the start node in
/// the preorder graph. Whole SCCs come for free, so the answer is the heaviest
/// path in the condensation.
pub fn promise_value_singleton(game: &GameSpec) -> Result<ValueResult> {
    if !game.large_sets.is_empty() {
        return Err(wrong_class(
            "promise-singleton",
            "only singleton targets",
            game,
        ));
    }
    let graph = TargetPreorderGraph::new(game);
    let dag = graph.condensation();
    let count = dag.component_count();
    let weight: Vec<usize> = dag
        .components
        .iter()
        .map(|comp| comp.iter().map(|&i| graph.weights[i]).sum())
        .collect();
    let mut best = vec![0usize; count];
    let mut next = vec![None; count];
    for c in 0..count {
        let tail = dag.dag_edges[c]
            .iter()
            .map(|&d| (best[d], d))
            .max_by_key(|&(b, _)| b);
        best[c] = weight[c] + tail.map_or(0, |(b, _)| b);
        next[c] = tail.map(|(_, d)| d);
    }
    let mut promised = Vec::new();
    let mut cur = Some(dag.component_of[graph.start_node]);
    while let Some(c) = cur {
        promised.extend(
            dag.components[c]
                .iter()
                .copied()
                .filter(|&i| graph.weights[i] == 1),
        );
        cur = next[c];
    }
    promised.sort_unstable();
    debug_assert_eq!(promised.len(), best[dag.component_of[graph.start_node]]);
    Ok(ValueResult::new(
        promised.len(),
        ValueWitness::PromisedSubset(promised),
    ))
}

/// MaxGenReachPromise for arbitrary targets by guessing the promised subset.
///
/// Subsets are tried largest first, lexicographically within a size, so the
/// first win is optimal. Losing on a subset means losing on all its supersets;
/// the single targets are decided up front so that this prunes the search.
pub fn promise_value_general(game: &GameSpec, config: &SolverConfig) -> Result<ValueResult> {
    let k = game.target_count();
    if k > MASK_WIDTH {
        return Err(Error::TooManyTargets {
            count: k,
            limit: MASK_WIDTH,
        });
    }
    let eve_wins = |subset: &[usize]| -> Result<bool> {
        Ok(
            solve(&game.restrict(subset), Algorithm::Auto, config)?.winner
                == crate::arena::Player::Eve,
        )
    };
    let mut winnable = Vec::new();
    for i in 0..k {
        if eve_wins(&[i])? {
            winnable.push(i);
        }
    }
    let mut losing: Vec<u64> = Vec::new();
    let bits = |subset: &[usize]| subset.iter().fold(0u64, |m, &i| m | 1 << i);
    for size in (2..=winnable.len()).rev() {
        for subset in winnable.iter().copied().combinations(size) {
            let mask = bits(&subset);
            if losing.iter().any(|&l| l & mask == l) {
                continue;
            }
            if eve_wins(&subset)? {
                return Ok(ValueResult::new(size, ValueWitness::PromisedSubset(subset)));
            }
            losing.push(mask);
        }
    }
    let witness: Vec<usize> = winnable.into_iter().take(1).collect();
    Ok(ValueResult::new(
        witness.len(),
        ValueWitness::PromisedSubset(witness),
    ))
}
