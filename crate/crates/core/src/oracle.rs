//! Brute-force reference answers for small instances.
//!
//! Nothing here touches the attractor, product or solver code: values come
//! from plain minimax recursion and exhaustive enumeration, so agreement with
//! the solvers is evidence rather than a shared bug.

use std::collections::{HashMap, VecDeque};

use crate::arena::{GameSpec, Player};
use crate::error::{Error, Result};
use crate::genreach::StartMask;
use crate::product::{ProductState, ProductStrategy};
use crate::reductions::{Cnf, Graph, Qbf, Quantifier};

/// Size limits beyond which the oracle refuses to answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_targets: usize,
    /// Search horizon; `None` means `(targets + 1)·n`, which is always enough:
    /// between two fresh target sets an optimal play needs at most `n` steps.
    pub max_depth: Option<usize>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 14,
            max_targets: 6,
            max_depth: None,
        }
    }
}

impl OracleBudget {
    pub fn depth_for(&self, game: &GameSpec) -> usize {
        let n = game.arena.vertex_count();
        self.max_depth
            .unwrap_or((game.target_count() + 1) * n)
            .max(n)
    }

    fn admit(&self, game: &GameSpec) -> Result<()> {
        let n = game.arena.vertex_count();
        let k = game.target_count();
        if n > self.max_vertices || k > self.max_targets {
            return Err(Error::BudgetExceeded(format!(
                "{n} vertices and {k} targets, oracle limit is {} and {}",
                self.max_vertices, self.max_targets
            )));
        }
        Ok(())
    }
}

fn vertex_masks(game: &GameSpec) -> Vec<u64> {
    let mut masks = vec![0u64; game.arena.vertex_count()];
    for (i, set) in game.target_sets().iter().enumerate() {
        for &v in set {
            masks[v] |= 1 << i;
        }
    }
    masks
}

fn initial_mask(game: &GameSpec, masks: &[u64], mode: StartMask) -> u64 {
    match mode {
        StartMask::Seeded => masks[game.start],
        StartMask::Empty => {
            let singles = (1u64 << game.singletons.len()) - 1;
            masks[game.start] & singles
        }
    }
}

struct Minimax<'a> {
    game: &'a GameSpec,
    masks: Vec<u64>,
    memo: HashMap<(usize, u64, usize), u32>,
}

impl Minimax<'_> {
    /// Distinct targets counted after `depth` more moves under optimal play.
    fn value(&mut self, v: usize, mask: u64, depth: usize) -> u32 {
        if depth == 0 {
            return mask.count_ones();
        }
        if let Some(&x) = self.memo.get(&(v, mask, depth)) {
            return x;
        }
        let arena = &self.game.arena;
        let values = arena
            .successors(v)
            .to_vec()
            .into_iter()
            .map(|w| self.value(w, mask | self.masks[w], depth - 1));
        let x = match arena.owner(v) {
            Player::Eve => values.max(),
            Player::Adam => values.min(),
        }
        .expect("successor lists are non-empty");
        self.memo.insert((v, mask, depth), x);
        x
    }
}

/// MaxGenReach value by memoised minimax over `(vertex, visited, depth)`.
pub fn oracle_max(game: &GameSpec) -> Result<usize> {
    oracle_max_with(game, &OracleBudget::default(), StartMask::Seeded)
}

pub fn oracle_max_with(game: &GameSpec, budget: &OracleBudget, mode: StartMask) -> Result<usize> {
    budget.admit(game)?;
    let masks = vertex_masks(game);
    let start = initial_mask(game, &masks, mode);
    let depth = budget.depth_for(game);
    let mut mm = Minimax {
        game,
        masks,
        memo: HashMap::new(),
    };
    Ok(mm.value(game.start, start, depth) as usize)
}

/// GenReach winner: Eve iff she can guarantee every target set.
pub fn oracle_genreach(game: &GameSpec) -> Result<Player> {
    oracle_genreach_with(game, &OracleBudget::default(), StartMask::Seeded)
}

pub fn oracle_genreach_with(
    game: &GameSpec,
    budget: &OracleBudget,
    mode: StartMask,
) -> Result<Player> {
    let value = oracle_max_with(game, budget, mode)?;
    Ok(if value == game.target_count() {
        Player::Eve
    } else {
        Player::Adam
    })
}

/// MaxGenReachPromise value by trying every subset of targets.
pub fn oracle_promise(game: &GameSpec) -> Result<usize> {
    oracle_promise_with(game, &OracleBudget::default(), StartMask::Seeded)
}

pub fn oracle_promise_with(
    game: &GameSpec,
    budget: &OracleBudget,
    mode: StartMask,
) -> Result<usize> {
    budget.admit(game)?;
    let k = game.target_count();
    let mut best = 0;
    for bits in 0u64..1 << k {
        let chosen: Vec<usize> = (0..k).filter(|&i| bits >> i & 1 == 1).collect();
        if chosen.len() > best
            && oracle_genreach_with(&game.restrict(&chosen), budget, mode)? == Player::Eve
        {
            best = chosen.len();
        }
    }
    Ok(best)
}

pub const QBF_VARIABLE_LIMIT: usize = 24;

/// Truth of a QBF by expanding every quantifier.
pub fn qbf_eval(phi: &Qbf) -> Result<bool> {
    let n = phi.prefix.len();
    if n > QBF_VARIABLE_LIMIT {
        return Err(Error::TooManyVariables {
            count: n,
            limit: QBF_VARIABLE_LIMIT,
        });
    }
    let mut value: HashMap<u32, bool> = HashMap::new();
    fn go(phi: &Qbf, i: usize, value: &mut HashMap<u32, bool>) -> bool {
        if i == phi.prefix.len() {
            return phi
                .matrix
                .iter()
                .all(|c| c.iter().any(|&l| value[&l.unsigned_abs()] == (l > 0)));
        }
        let (q, var) = phi.prefix[i];
        let mut branch = |b: bool| {
            value.insert(var, b);
            go(phi, i + 1, value)
        };
        match q {
            Quantifier::Exists => branch(false) || branch(true),
            Quantifier::Forall => branch(false) && branch(true),
        }
    }
    Ok(go(phi, 0, &mut value))
}

pub const VERTEX_COVER_LIMIT: usize = 20;

/// Minimum vertex cover of an undirected graph by subset enumeration.
pub fn min_vertex_cover(g: &Graph) -> Result<usize> {
    let n = g.vertices;
    if n > VERTEX_COVER_LIMIT {
        return Err(Error::TooLarge(format!(
            "{n} vertices, limit {VERTEX_COVER_LIMIT}"
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges.clone();
    Ok((0u32..1 << n)
        .filter(|set| {
            edges
                .iter()
                .all(|&(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1)
        })
        .map(|set| set.count_ones() as usize)
        .min()
        .expect("the full vertex set is a cover"))
}

/// Best (`maximize`) or worst number of distinct clauses satisfied by an
/// assignment. Repeated clauses count once.
pub fn sat_optimum(psi: &Cnf, maximize: bool) -> Result<usize> {
    let n = psi.variables;
    if n > QBF_VARIABLE_LIMIT {
        return Err(Error::TooManyVariables {
            count: n,
            limit: QBF_VARIABLE_LIMIT,
        });
    }
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    for c in &psi.clauses {
        let mut c = c.clone();
        c.sort_unstable();
        c.dedup();
        if !clauses.contains(&c) {
            clauses.push(c);
        }
    }
    let counts = (0u32..1 << n).map(|bits| {
        clauses
            .iter()
            .filter(|c| {
                c.iter()
                    .any(|&l| (bits >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
            })
            .count()
    });
    Ok(if maximize { counts.max() } else { counts.min() }.unwrap_or(0))
}

/// Worst-case number of target sets Adam can hold Eve to while Eve follows
/// `strategy`.
///
/// Explores the product states reachable under the strategy; the final mask of
/// a play is the mask of the states it cycles through, so Adam's best is the
/// smallest mask among reachable states that can return to themselves.
pub fn strategy_check(game: &GameSpec, strategy: &ProductStrategy) -> Result<usize> {
    let masks = vertex_masks(game);
    let arena = &game.arena;
    let start = ProductState::new(game.start, masks[game.start]);
    let mut index: HashMap<ProductState, usize> = HashMap::from([(start, 0)]);
    let mut states = vec![start];
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let p = states[next];
        next += 1;
        let moves: Vec<ProductState> = match arena.owner(p.vertex) {
            Player::Eve => {
                let &q = strategy.get(&p).ok_or(Error::PartialStrategy {
                    vertex: p.vertex,
                    mask: p.mask,
                })?;
                if !arena.has_edge(p.vertex, q.vertex) || q.mask != p.mask | masks[q.vertex] {
                    return Err(Error::Invalid(format!(
                        "strategy move ({}, {:#b}) -> ({}, {:#b}) is not a product edge",
                        p.vertex, p.mask, q.vertex, q.mask
                    )));
                }
                vec![q]
            }
            Player::Adam => arena
                .successors(p.vertex)
                .iter()
                .map(|&w| ProductState::new(w, p.mask | masks[w]))
                .collect(),
        };
        let mut out = Vec::with_capacity(moves.len());
        for q in moves {
            let id = *index.entry(q).or_insert_with(|| {
                states.push(q);
                states.len() - 1
            });
            out.push(id);
        }
        edges.push(out);
    }
    let returns = |from: usize| {
        let mut seen = vec![false; states.len()];
        let mut queue: VecDeque<usize> = edges[from].iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            if x == from {
                return true;
            }
            if !std::mem::replace(&mut seen[x], true) {
                queue.extend(edges[x].iter().copied());
            }
        }
        false
    };
    Ok((0..states.len())
        .filter(|&i| returns(i))
        .map(|i| states[i].mask.count_ones() as usize)
        .min()
        .expect("a finite reachable graph with total moves has a cycle"))
}
