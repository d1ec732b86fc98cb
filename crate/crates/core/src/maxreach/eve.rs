use crate::arena::{GameSpec, PlayerProfile};
use crate::error::Result;
use crate::genreach::wrong_class;
use crate::scc::scc_decompose;

use super::{SccStep, ValueResult, ValueWitness};

/// MaxGenReach when Eve owns every vertex and all targets are singletons.
///
/// Inside a strongly connected component Eve can visit every vertex, so the
/// value is the heaviest path through the SCC DAG from the start component,
/// weighting each component by the targets it contains.
pub fn max_value_eve_scc(game: &GameSpec) -> Result<ValueResult> {
    if game.classify().profile != PlayerProfile::OnlyEve || !game.large_sets.is_empty() {
        return Err(wrong_class(
            "eve-scc",
            "every vertex owned by Eve and only singleton targets",
            game,
        ));
    }
    let dag = scc_decompose(&game.arena);
    let mut weight = vec![0usize; dag.component_count()];
    for &t in &game.singletons {
        weight[dag.component_of[t]] += 1;
    }
    // Components are sinks first, so successors are settled before their sources.
    let mut best = vec![0usize; dag.component_count()];
    let mut next = vec![None; dag.component_count()];
    for c in 0..dag.component_count() {
        let tail = dag.dag_edges[c]
            .iter()
            .map(|&d| (best[d], d))
            .max_by_key(|&(b, _)| b);
        best[c] = weight[c] + tail.map_or(0, |(b, _)| b);
        next[c] = tail.map(|(_, d)| d);
    }
    let mut path = Vec::new();
    let mut cur = Some(dag.component_of[game.start]);
    while let Some(c) = cur {
        path.push(SccStep {
            vertices: dag.components[c].clone(),
            weight: weight[c],
        });
        cur = next[c];
    }
    Ok(ValueResult::new(
        best[dag.component_of[game.start]],
        ValueWitness::SccPath(path),
    ))
}
