//! Product arenas `V × 2^targets`.
//!
//! A product state pairs an arena vertex with the mask of target sets visited
//! so far. Moving to `v` ORs in the targets containing `v`, so masks only grow
//! along product edges.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::arena::{Arena, GameSpec, Player};
use crate::attractor::GameGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProductState {
    pub vertex: usize,
    pub mask: u64,
}

impl ProductState {
    pub fn new(vertex: usize, mask: u64) -> Self {
        ProductState { vertex, mask }
    }
}

/// A positional strategy on product states: state -> chosen successor state.
pub type ProductStrategy = BTreeMap<ProductState, ProductState>;

/// Mask with the low `k` bits set.
pub fn full_mask(k: usize) -> u64 {
    if k == 0 {
        0
    } else {
        u64::MAX >> (64 - k)
    }
}

/// Product states reachable from a start state, stored explicitly.
#[derive(Debug, Clone)]
pub struct ReachableProduct<'a> {
    arena: &'a Arena,
    pub states: Vec<ProductState>,
    pub index: HashMap<ProductState, usize>,
    succ_offsets: Vec<usize>,
    succ: Vec<usize>,
    pred_offsets: Vec<usize>,
    pred: Vec<usize>,
}

impl<'a> ReachableProduct<'a> {
    /// Forward exploration from `(start, start_mask)`; fails once more than
    /// `max_states` states are discovered.
    pub fn explore(
        arena: &'a Arena,
        vertex_masks: &[u64],
        start: usize,
        start_mask: u64,
        max_states: usize,
    ) -> Result<Self> {
        let first = ProductState::new(start, start_mask);
        let mut states = vec![first];
        let mut index = HashMap::from([(first, 0usize)]);
        let mut succ_offsets = vec![0];
        let mut succ = Vec::new();
        let mut cursor = 0;
        while cursor < states.len() {
            let ProductState { vertex, mask } = states[cursor];
            for &w in arena.successors(vertex) {
                let next = ProductState::new(w, mask | vertex_masks[w]);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if states.len() >= max_states {
                            return Err(Error::MemoryBudget {
                                states: states.len() + 1,
                                limit: max_states,
                            });
                        }
                        states.push(next);
                        index.insert(next, states.len() - 1);
                        states.len() - 1
                    }
                };
                succ.push(id);
            }
            succ_offsets.push(succ.len());
            cursor += 1;
        }

        let n = states.len();
        let mut in_degree = vec![0usize; n + 1];
        for &t in &succ {
            in_degree[t + 1] += 1;
        }
        for i in 0..n {
            in_degree[i + 1] += in_degree[i];
        }
        let pred_offsets = in_degree.clone();
        let mut fill = in_degree;
        let mut pred = vec![0; succ.len()];
        for v in 0..n {
            for &t in &succ[succ_offsets[v]..succ_offsets[v + 1]] {
                pred[fill[t]] = v;
                fill[t] += 1;
            }
        }
        Ok(ReachableProduct {
            arena,
            states,
            index,
            succ_offsets,
            succ,
            pred_offsets,
            pred,
        })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn successors(&self, id: usize) -> &[usize] {
        &self.succ[self.succ_offsets[id]..self.succ_offsets[id + 1]]
    }

    pub fn predecessors(&self, id: usize) -> &[usize] {
        &self.pred[self.pred_offsets[id]..self.pred_offsets[id + 1]]
    }

    /// Shortest path of state ids from the start state (id 0) to `goal`.
    pub fn path_from_start(&self, goal: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.len()];
        parent[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            if v == goal {
                break;
            }
            for &w in self.successors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![goal];
        let mut cur = goal;
        while cur != 0 {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}

impl GameGraph for ReachableProduct<'_> {
    fn state_count(&self) -> usize {
        self.states.len()
    }

    fn owner(&self, v: usize) -> Player {
        self.arena.owner(self.states[v].vertex)
    }

    fn out_degree(&self, v: usize) -> usize {
        self.succ_offsets[v + 1] - self.succ_offsets[v]
    }

    fn for_each_successor(&self, v: usize, f: impl FnMut(usize)) {
        self.successors(v).iter().copied().for_each(f)
    }

    fn for_each_predecessor(&self, v: usize, f: impl FnMut(usize)) {
        self.predecessors(v).iter().copied().for_each(f)
    }
}

/// The complete product `V × 2^k` with implicit edges; state id = `mask * n + vertex`.
#[derive(Debug, Clone, Copy)]
pub struct FullProduct<'a> {
    arena: &'a Arena,
    masks: &'a [u64],
    k: usize,
}

impl<'a> FullProduct<'a> {
    pub fn new(arena: &'a Arena, masks: &'a [u64], k: usize) -> Self {
        FullProduct { arena, masks, k }
    }

    pub fn id(&self, vertex: usize, mask: u64) -> usize {
        mask as usize * self.arena.vertex_count() + vertex
    }

    pub fn state(&self, id: usize) -> ProductState {
        let n = self.arena.vertex_count();
        ProductState::new(id % n, (id / n) as u64)
    }

    pub fn mask_count(&self) -> usize {
        1usize << self.k
    }
}

impl GameGraph for FullProduct<'_> {
    fn state_count(&self) -> usize {
        self.arena.vertex_count() << self.k
    }

    fn owner(&self, v: usize) -> Player {
        self.arena.owner(v % self.arena.vertex_count())
    }

    fn out_degree(&self, v: usize) -> usize {
        self.arena.successors(v % self.arena.vertex_count()).len()
    }

    fn for_each_successor(&self, v: usize, mut f: impl FnMut(usize)) {
        let ProductState { vertex, mask } = self.state(v);
        for &w in self.arena.successors(vertex) {
            f(self.id(w, mask | self.masks[w]));
        }
    }

    fn for_each_predecessor(&self, v: usize, mut f: impl FnMut(usize)) {
        let ProductState { vertex, mask } = self.state(v);
        let own = self.masks[vertex];
        if own & !mask != 0 {
            return;
        }
        // Source masks S with S | own == mask: the bits outside `own` are fixed,
        // the bits of `own` range over all submasks.
        let base = mask & !own;
        let mut sub = own;
        loop {
            for &u in self.arena.predecessors(vertex) {
                f(self.id(u, base | sub));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & own;
        }
    }
}

/// Builds a product strategy for Eve from a positional arena strategy, over
/// every product state reachable when Eve follows it and Adam plays anything.
pub fn positional_strategy(
    game: &GameSpec,
    choose: impl Fn(usize) -> usize,
) -> Result<ProductStrategy> {
    let masks = game.target_masks()?;
    let arena = &game.arena;
    let start = ProductState::new(game.start, masks[game.start]);
    let mut strategy = ProductStrategy::new();
    let mut seen = std::collections::HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let moves: Vec<usize> = match arena.owner(p.vertex) {
            Player::Eve => {
                let w = choose(p.vertex);
                let next = ProductState::new(w, p.mask | masks[w]);
                strategy.insert(p, next);
                vec![w]
            }
            Player::Adam => arena.successors(p.vertex).to_vec(),
        };
        for w in moves {
            let next = ProductState::new(w, p.mask | masks[w]);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(strategy)
}
