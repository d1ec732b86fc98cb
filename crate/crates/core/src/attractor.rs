//! Eve-attractors.
//!
//! `Attr_Eve(S)` is the least fixpoint of
//! `X = S ∪ {Eve v | some successor in X} ∪ {Adam v | all successors in X}`.
//! It is computed backwards from `S` with one counter per Adam vertex, so each
//! edge is inspected once. Processing the queue in FIFO order hands out ranks
//! in nondecreasing order, which makes the rank of each vertex the least `i`
//! with `v ∈ Attr^i(S)`.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::arena::{Arena, Player};

/// A game graph the attractor engine can walk backwards over.
pub trait GameGraph {
    fn state_count(&self) -> usize;
    fn owner(&self, v: usize) -> Player;
    fn out_degree(&self, v: usize) -> usize;
    fn for_each_successor(&self, v: usize, f: impl FnMut(usize));
    fn for_each_predecessor(&self, v: usize, f: impl FnMut(usize));
}

impl GameGraph for Arena {
    fn state_count(&self) -> usize {
        self.vertex_count()
    }

    fn owner(&self, v: usize) -> Player {
        Arena::owner(self, v)
    }

    fn out_degree(&self, v: usize) -> usize {
        self.successors(v).len()
    }

    fn for_each_successor(&self, v: usize, f: impl FnMut(usize)) {
        self.successors(v).iter().copied().for_each(f)
    }

    fn for_each_predecessor(&self, v: usize, f: impl FnMut(usize)) {
        self.predecessors(v).iter().copied().for_each(f)
    }
}

pub const UNREACHED: u32 = u32::MAX;

/// Membership and ranks of an attractor over an arbitrary game graph.
#[derive(Debug, Clone)]
pub struct Attraction {
    pub member: FixedBitSet,
    /// `UNREACHED` outside the attractor.
    pub rank: Vec<u32>,
}

impl Attraction {
    pub fn contains(&self, v: usize) -> bool {
        self.member.contains(v)
    }
}

/// Computes `Attr_Eve(targets)` with ranks over any [`GameGraph`].
pub fn attract<G: GameGraph>(graph: &G, targets: impl IntoIterator<Item = usize>) -> Attraction {
    let n = graph.state_count();
    let mut member = FixedBitSet::with_capacity(n);
    let mut rank = vec![UNREACHED; n];
    let mut pending: Vec<u32> = vec![0; n];
    let mut queue = VecDeque::new();
    for t in targets {
        if !member.put(t) {
            rank[t] = 0;
            queue.push_back(t);
        }
    }
    while let Some(w) = queue.pop_front() {
        let next = rank[w] + 1;
        graph.for_each_predecessor(w, |v| {
            if member.contains(v) {
                return;
            }
            let attracted = match graph.owner(v) {
                Player::Eve => true,
                Player::Adam => {
                    if pending[v] == 0 {
                        pending[v] = graph.out_degree(v) as u32;
                    }
                    pending[v] -= 1;
                    pending[v] == 0
                }
            };
            if attracted {
                member.insert(v);
                rank[v] = next;
                queue.push_back(v);
            }
        });
    }
    Attraction { member, rank }
}

/// The Eve-attractor of a vertex set in an arena, with a positional witness strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttractorResult {
    pub member: FixedBitSet,
    rank: Vec<u32>,
    /// For Eve members outside the target set: a successor one rank closer.
    moves: Vec<Option<usize>>,
}

impl AttractorResult {
    pub fn contains(&self, v: usize) -> bool {
        self.member.contains(v)
    }

    pub fn rank(&self, v: usize) -> Option<u32> {
        (self.rank[v] != UNREACHED).then_some(self.rank[v])
    }

    pub fn move_at(&self, v: usize) -> Option<usize> {
        self.moves[v]
    }

    pub fn members(&self) -> Vec<usize> {
        self.member.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.member.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.member.is_clear()
    }
}

/// `Attr_Eve(targets)` in `arena`. Eve's move at each attracted vertex is the
/// smallest-id successor of minimal rank.
pub fn attractor(arena: &Arena, targets: impl IntoIterator<Item = usize>) -> AttractorResult {
    let Attraction { member, rank } = attract(arena, targets);
    let moves = arena
        .vertices()
        .map(|v| {
            if arena.owner(v) != Player::Eve || rank[v] == 0 || rank[v] == UNREACHED {
                return None;
            }
            arena
                .successors(v)
                .iter()
                .copied()
                .filter(|&w| rank[w] == rank[v] - 1)
                .min()
        })
        .collect();
    AttractorResult {
        member,
        rank,
        moves,
    }
}

/// Outcome of testing whether a family of sets is totally preordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PreorderCheck {
    /// `order` lists the indices largest set first; `groups` splits it into runs of equal sets.
    TotalOrder {
        order: Vec<usize>,
        groups: Vec<Vec<usize>>,
    },
    /// Sets `first < second` are incomparable; `only_first` lies in the first set but not
    /// the second, `only_second` the other way round.
    Incomparable {
        first: usize,
        second: usize,
        only_first: usize,
        only_second: usize,
    },
}

impl PreorderCheck {
    pub fn is_total(&self) -> bool {
        matches!(self, PreorderCheck::TotalOrder { .. })
    }
}

fn cmp_bits(a: &FixedBitSet, b: &FixedBitSet) -> std::cmp::Ordering {
    a.as_slice().cmp(b.as_slice())
}

/// Checks whether `sets` form a chain under inclusion.
///
/// Sorting by decreasing size makes the family a chain iff each set contains
/// its successor in the sorted order; a failing adjacent pair is incomparable.
pub fn check_total_preorder(sets: &[FixedBitSet]) -> PreorderCheck {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    let size: Vec<usize> = sets.iter().map(|s| s.count_ones(..)).collect();
    order.sort_by(|&i, &j| {
        size[j]
            .cmp(&size[i])
            .then_with(|| cmp_bits(&sets[i], &sets[j]))
            .then(i.cmp(&j))
    });
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for w in 0..order.len() {
        let cur = order[w];
        if w > 0 {
            let prev = order[w - 1];
            if !sets[cur].is_subset(&sets[prev]) {
                let (first, second) = (prev.min(cur), prev.max(cur));
                let only_first = sets[first].difference(&sets[second]).next().unwrap();
                let only_second = sets[second].difference(&sets[first]).next().unwrap();
                return PreorderCheck::Incomparable {
                    first,
                    second,
                    only_first,
                    only_second,
                };
            }
            if sets[cur] == sets[prev] {
                groups.last_mut().unwrap().push(cur);
                continue;
            }
        }
        groups.push(vec![cur]);
    }
    PreorderCheck::TotalOrder { order, groups }
}

/// Builds a bitset over `0..n` from a list of members.
pub fn vertex_set(n: usize, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(n);
    set.extend(members);
    set
}
