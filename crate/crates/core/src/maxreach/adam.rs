use std::collections::VecDeque;

use crate::arena::{Arena, GameSpec, PlayerProfile};
use crate::attractor::attractor;
use crate::error::Result;
use crate::genreach::{wrong_class, Lasso, SolverConfig};
use crate::product::ReachableProduct;
use crate::scc::tarjan;

use super::{targets_hit, ValueResult, ValueWitness};

const INF: usize = usize::MAX;

/// 0-1 BFS. `cost[v]` is charged on entering `v`; `step` yields the neighbours
/// of a vertex in the direction of travel. Returns distances and parents.
fn zero_one_bfs(
    n: usize,
    source: usize,
    cost: &[usize],
    entering: impl Fn(usize, usize) -> usize,
    step: impl Fn(usize) -> Vec<usize>,
) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![INF; n];
    let mut parent = vec![usize::MAX; n];
    let mut deque = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(u) = deque.pop_front() {
        for w in step(u) {
            let c = cost[entering(u, w)];
            if dist[u] + c < dist[w] {
                dist[w] = dist[u] + c;
                parent[w] = u;
                if c == 0 {
                    deque.push_front(w);
                } else {
                    deque.push_back(w);
                }
            }
        }
    }
    (dist, parent)
}

fn forward_distances(arena: &Arena, from: usize, cost: &[usize]) -> (Vec<usize>, Vec<usize>) {
    zero_one_bfs(
        arena.vertex_count(),
        from,
        cost,
        |_, w| w,
        |u| arena.successors(u).to_vec(),
    )
}

/// Distances *to* `to`, following edges backwards; the cost of an edge is
/// still charged to its head.
fn backward_distances(arena: &Arena, to: usize, cost: &[usize]) -> (Vec<usize>, Vec<usize>) {
    zero_one_bfs(
        arena.vertex_count(),
        to,
        cost,
        |u, _| u,
        |u| arena.predecessors(u).to_vec(),
    )
}

fn only_adam(game: &GameSpec, solver: &str, singletons_only: bool) -> Result<()> {
    if game.classify().profile != PlayerProfile::OnlyAdam
        || (singletons_only && !game.large_sets.is_empty())
    {
        let needs = if singletons_only {
            "every vertex owned by Adam and only singleton targets"
        } else {
            "every vertex owned by Adam"
        };
        return Err(wrong_class(solver, needs, game));
    }
    Ok(())
}

/// MaxGenReach when Adam owns every vertex and all targets are singletons.
///
/// Adam's best play is a lasso `s → t → t`. Charging 1 for entering a target,
/// its cost is `[s ∈ T] + d(s, t) + ℓ(t) − [t ∈ T]` where `d` is the lightest
/// path and `ℓ(t)` the lightest cycle through `t`; the start is never entered
/// and the knot is entered twice. Minimised over all knots `t`.
pub fn max_value_adam_lasso(game: &GameSpec) -> Result<ValueResult> {
    only_adam(game, "adam-lasso", true)?;
    let arena = &game.arena;
    let n = arena.vertex_count();
    let mut cost = vec![0usize; n];
    for &t in &game.singletons {
        cost[t] = 1;
    }
    let (from_start, start_parent) = forward_distances(arena, game.start, &cost);

    let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
    for knot in 0..n {
        if from_start[knot] == INF {
            continue;
        }
        let (to_knot, toward) = backward_distances(arena, knot, &cost);
        let cycle = arena
            .successors(knot)
            .iter()
            .filter(|&&w| to_knot[w] != INF)
            .map(|&w| (cost[w] + to_knot[w], w))
            .min();
        let Some((loop_cost, first)) = cycle else {
            continue;
        };
        let total = cost[game.start] + from_start[knot] + loop_cost - cost[knot];
        if best.as_ref().map_or(true, |b| total < b.0) {
            best = Some((total, knot, first, toward));
        }
    }
    let (value, knot, first, toward) =
        best.expect("every vertex has a successor, so some cycle is reachable");

    let mut prefix = vec![knot];
    let mut cur = knot;
    while cur != game.start {
        cur = start_parent[cur];
        prefix.push(cur);
    }
    prefix.reverse();
    prefix.pop();
    let mut cycle = vec![knot];
    let mut cur = first;
    while cur != knot {
        cycle.push(cur);
        cur = toward[cur];
    }
    let lasso = Lasso::simple_from_walk(&prefix, &cycle);
    let distinct = targets_hit(game, lasso.vertices());
    debug_assert_eq!(distinct, value);
    Ok(ValueResult::new(
        value,
        ValueWitness::LassoWitness { lasso, distinct },
    ))
}

/// MaxGenReach when Adam owns every vertex, arbitrary target sets.
///
/// Along any play the visited-mask settles in a cycle of the product, so the
/// value is the least mask size over reachable product states that lie on a
/// product cycle.
pub fn max_value_adam_general(game: &GameSpec, config: &SolverConfig) -> Result<ValueResult> {
    only_adam(game, "adam-general", false)?;
    let masks = game.target_masks()?;
    let product = ReachableProduct::explore(
        &game.arena,
        &masks,
        game.start,
        masks[game.start],
        config.max_product_states,
    )?;
    let components = tarjan(product.len(), |v| product.successors(v).to_vec());
    let mut component_of = vec![0; product.len()];
    for (c, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v] = c;
        }
    }
    let on_cycle =
        |v: usize| components[component_of[v]].len() > 1 || product.successors(v).contains(&v);
    let settle = (0..product.len())
        .filter(|&v| on_cycle(v))
        .min_by_key(|&v| (product.states[v].mask.count_ones(), v))
        .expect("a finite product with total successors has a cycle");

    // Walk to the settling state, then around a cycle inside its component.
    let path = product.path_from_start(settle);
    let comp = component_of[settle];
    let mut parent = vec![usize::MAX; product.len()];
    let mut queue = VecDeque::new();
    for &w in product.successors(settle) {
        if component_of[w] == comp && parent[w] == usize::MAX {
            parent[w] = settle;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if v == settle {
            break;
        }
        for &w in product.successors(v) {
            if component_of[w] == comp && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut cycle = Vec::new();
    let mut cur = parent[settle];
    cycle.push(settle);
    while cur != settle {
        cycle.push(cur);
        cur = parent[cur];
    }
    cycle[1..].reverse();
    let vertex = |id: &usize| product.states[*id].vertex;
    let prefix: Vec<usize> = path[..path.len() - 1].iter().map(vertex).collect();
    let cycle: Vec<usize> = cycle.iter().map(vertex).collect();
    let lasso = Lasso::simple_from_walk(&prefix, &cycle);
    let distinct = targets_hit(game, lasso.vertices());
    let value = product.states[settle].mask.count_ones() as usize;
    debug_assert_eq!(distinct, value);
    Ok(ValueResult {
        value,
        witness: ValueWitness::LassoWitness { lasso, distinct },
        product_states: Some(product.len()),
    })
}

/// MaxGenReachPromise when Adam owns every vertex: Eve can promise exactly the
/// target sets whose Eve-attractor contains the start.
pub fn promise_value_adam(game: &GameSpec) -> Result<ValueResult> {
    only_adam(game, "adam-promise", false)?;
    let promised: Vec<usize> = game
        .target_sets()
        .into_iter()
        .enumerate()
        .filter(|(_, set)| attractor(&game.arena, set.iter().copied()).contains(game.start))
        .map(|(i, _)| i)
        .collect();
    Ok(ValueResult::new(
        promised.len(),
        ValueWitness::PromisedSubset(promised),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::tests::fig1;
    use crate::arena::Player;

    fn adam_game(
        succ: Vec<Vec<usize>>,
        start: usize,
        t: Vec<usize>,
        f: Vec<Vec<usize>>,
    ) -> GameSpec {
        let n = succ.len();
        GameSpec::new(
            Arena::new(vec![Player::Adam; n], succ).unwrap(),
            start,
            t,
            f,
        )
        .unwrap()
    }

    fn check_lasso(game: &GameSpec, out: &ValueResult) {
        let ValueWitness::LassoWitness { lasso, distinct } = &out.witness else {
            panic!()
        };
        assert_eq!(*distinct, out.value);
        let play = lasso.play();
        assert_eq!(play[0], game.start);
        for w in play.windows(2) {
            assert!(game.arena.has_edge(w[0], w[1]));
        }
        assert!(play.len() <= game.arena.vertex_count() + 1);
    }

    #[test]
    fn fig1_adam_lasso_value() {
        let g = fig1().with_owner(Player::Adam);
        let out = max_value_adam_lasso(&g).unwrap();
        assert_eq!(out.value, 1);
        check_lasso(&g, &out);
        let out = max_value_adam_general(&g, &SolverConfig::default()).unwrap();
        assert_eq!(out.value, 1);
        check_lasso(&g, &out);
    }

    #[test]
    fn target_free_lasso() {
        // 0 -> 1 -> 1, target 2 unreachable
        let g = adam_game(vec![vec![1], vec![1], vec![2]], 0, vec![2], vec![]);
        assert_eq!(max_value_adam_lasso(&g).unwrap().value, 0);
        assert_eq!(
            max_value_adam_general(&g, &SolverConfig::default())
                .unwrap()
                .value,
            0
        );
    }

    #[test]
    fn forced_cycle_through_target() {
        let g = adam_game(vec![vec![1], vec![0]], 0, vec![1], vec![]);
        let out = max_value_adam_lasso(&g).unwrap();
        assert_eq!(out.value, 1);
        check_lasso(&g, &out);
    }

    #[test]
    fn start_target_counts_once() {
        let g = adam_game(vec![vec![0]], 0, vec![0], vec![]);
        assert_eq!(max_value_adam_lasso(&g).unwrap().value, 1);
        let g = adam_game(vec![vec![1], vec![0, 1]], 0, vec![0, 1], vec![]);
        assert_eq!(max_value_adam_lasso(&g).unwrap().value, 2);
    }

    #[test]
    fn promise_examples() {
        assert_eq!(
            promise_value_adam(&fig1().with_owner(Player::Adam))
                .unwrap()
                .value,
            0
        );
        let g = adam_game(vec![vec![1], vec![2], vec![2]], 0, vec![1, 2], vec![]);
        let out = promise_value_adam(&g).unwrap();
        assert_eq!(out.value, 2);
        assert_eq!(out.witness, ValueWitness::PromisedSubset(vec![0, 1]));
    }
}
