//! Game arenas and generalised reachability instances.
//!
//! Vertices are dense ids `0..n`. Every vertex must have at least one
//! successor, since plays are infinite. Target sets are split the usual way:
//! `singletons` holds the size-1 targets and `large_sets` the rest.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Width of the target masks used by the product solvers.
pub const MASK_WIDTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    Eve,
    Adam,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Eve => Player::Adam,
            Player::Adam => Player::Eve,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Player::Eve => 'E',
            Player::Adam => 'A',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Eve => f.write_str("eve"),
            Player::Adam => f.write_str("adam"),
        }
    }
}

/// A finite directed graph whose vertices are partitioned between Eve and Adam.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arena {
    owner: Vec<Player>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Arena {
    /// Builds an arena, checking that successor ids are valid, lists are
    /// non-empty and free of duplicates.
    pub fn new(owner: Vec<Player>, succ: Vec<Vec<usize>>) -> Result<Arena> {
        let n = owner.len();
        if succ.len() != n {
            return Err(Error::Invalid(format!(
                "{} owners but {} successor lists",
                n,
                succ.len()
            )));
        }
        let mut pred = vec![Vec::new(); n];
        let mut seen = FixedBitSet::with_capacity(n);
        let mut edge_count = 0;
        for (u, list) in succ.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::Invalid(format!("vertex {u} has no successors")));
            }
            seen.clear();
            for &v in list {
                if v >= n {
                    return Err(Error::Invalid(format!(
                        "edge {u} -> {v} points outside 0..{n}"
                    )));
                }
                if seen.put(v) {
                    return Err(Error::Invalid(format!("duplicate edge {u} -> {v}")));
                }
                pred[v].push(u);
            }
            edge_count += list.len();
        }
        Ok(Arena {
            owner,
            succ,
            pred,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.owner.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn owners(&self) -> &[Player] {
        &self.owner
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.owner.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u].contains(&v)
    }

    /// Same graph with every vertex handed to `player`.
    pub fn with_owner(&self, player: Player) -> Arena {
        Arena {
            owner: vec![player; self.owner.len()],
            ..self.clone()
        }
    }
}

/// A generalised reachability game `(arena, start, large sets, singletons)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSpec {
    pub arena: Arena,
    pub start: usize,
    pub singletons: Vec<usize>,
    pub large_sets: Vec<Vec<usize>>,
}

impl GameSpec {
    /// Validates and normalises a game. Large sets are sorted and deduplicated;
    /// a set that shrinks to one vertex moves into the singletons. Repeated
    /// singletons are collapsed with a warning.
    pub fn new(
        arena: Arena,
        start: usize,
        singletons: Vec<usize>,
        large_sets: Vec<Vec<usize>>,
    ) -> Result<GameSpec> {
        let n = arena.vertex_count();
        if start >= n {
            return Err(Error::Invalid(format!("start {start} outside 0..{n}")));
        }
        let mut game = GameSpec {
            arena,
            start,
            singletons: Vec::with_capacity(singletons.len()),
            large_sets: Vec::with_capacity(large_sets.len()),
        };
        for t in singletons {
            game.push_singleton(t)?;
        }
        for set in large_sets {
            game.push_target(set)?;
        }
        Ok(game)
    }

    fn push_singleton(&mut self, t: usize) -> Result<()> {
        let n = self.arena.vertex_count();
        if t >= n {
            return Err(Error::Invalid(format!("target {t} outside 0..{n}")));
        }
        if self.singletons.contains(&t) {
            log::warn!("duplicate singleton target {t} collapsed");
        } else {
            self.singletons.push(t);
        }
        Ok(())
    }

    /// Appends a target set, routing size-1 sets into the singletons.
    pub fn push_target(&mut self, mut set: Vec<usize>) -> Result<()> {
        set.sort_unstable();
        set.dedup();
        match set.len() {
            0 => Err(Error::Invalid("empty target set".into())),
            1 => self.push_singleton(set[0]),
            _ => {
                let n = self.arena.vertex_count();
                if let Some(&v) = set.iter().find(|&&v| v >= n) {
                    return Err(Error::Invalid(format!("target {v} outside 0..{n}")));
                }
                self.large_sets.push(set);
                Ok(())
            }
        }
    }

    /// Total number of target sets, `|T| + |F|`.
    pub fn target_count(&self) -> usize {
        self.singletons.len() + self.large_sets.len()
    }

    /// All target sets in canonical index order: singletons first, then large sets.
    pub fn target_sets(&self) -> Vec<Vec<usize>> {
        self.singletons
            .iter()
            .map(|&t| vec![t])
            .chain(self.large_sets.iter().cloned())
            .collect()
    }

    pub fn target_set(&self, index: usize) -> Vec<usize> {
        match index.checked_sub(self.singletons.len()) {
            None => vec![self.singletons[index]],
            Some(j) => self.large_sets[j].clone(),
        }
    }

    /// Per-vertex bitmask of the target indices (canonical order) containing it.
    pub fn target_masks(&self) -> Result<Vec<u64>> {
        let k = self.target_count();
        if k > MASK_WIDTH {
            return Err(Error::TooManyTargets {
                count: k,
                limit: MASK_WIDTH,
            });
        }
        let mut masks = vec![0u64; self.arena.vertex_count()];
        for (i, set) in self.target_sets().iter().enumerate() {
            for &v in set {
                masks[v] |= 1 << i;
            }
        }
        Ok(masks)
    }

    /// Per-vertex bitmask over the large sets only.
    pub fn large_masks(&self) -> Result<Vec<u64>> {
        let k = self.large_sets.len();
        if k > MASK_WIDTH {
            return Err(Error::TooManyTargets {
                count: k,
                limit: MASK_WIDTH,
            });
        }
        let mut masks = vec![0u64; self.arena.vertex_count()];
        for (j, set) in self.large_sets.iter().enumerate() {
            for &v in set {
                masks[v] |= 1 << j;
            }
        }
        Ok(masks)
    }

    /// The game keeping only the targets whose canonical indices are listed.
    pub fn restrict(&self, indices: &[usize]) -> GameSpec {
        let t = self.singletons.len();
        let mut singletons = Vec::new();
        let mut large_sets = Vec::new();
        for &i in indices {
            if i < t {
                singletons.push(self.singletons[i]);
            } else {
                large_sets.push(self.large_sets[i - t].clone());
            }
        }
        GameSpec {
            arena: self.arena.clone(),
            start: self.start,
            singletons,
            large_sets,
        }
    }

    pub fn with_owner(&self, player: Player) -> GameSpec {
        GameSpec {
            arena: self.arena.with_owner(player),
            ..self.clone()
        }
    }

    pub fn classify(&self) -> InstanceClass {
        classify(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TargetClass {
    AllSingleton,
    OneLarge,
    FewLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlayerProfile {
    TwoPlayer,
    OnlyEve,
    OnlyAdam,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceClass {
    pub targets: TargetClass,
    pub profile: PlayerProfile,
}

/// Classifies a game by its number of large target sets and by vertex ownership.
pub fn classify(game: &GameSpec) -> InstanceClass {
    let targets = match game.large_sets.len() {
        0 => TargetClass::AllSingleton,
        1 => TargetClass::OneLarge,
        k => TargetClass::FewLarge(k),
    };
    let owners = game.arena.owners();
    let profile = if owners.iter().all(|&p| p == Player::Eve) {
        PlayerProfile::OnlyEve
    } else if owners.iter().all(|&p| p == Player::Adam) {
        PlayerProfile::OnlyAdam
    } else {
        PlayerProfile::TwoPlayer
    };
    InstanceClass { targets, profile }
}
