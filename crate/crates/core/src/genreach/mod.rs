//! Decision procedures for generalised reachability.
//!
//! | solver                    | instances                          |
//! |---------------------------|------------------------------------|
//! | [`solve_singleton_chain`] | only singleton targets             |
//! | [`solve_one_large`]       | exactly one large target set       |
//! | [`solve_fpt`]             | any; exponential in large sets only |
//! | [`solve_general`]         | any; exponential in all targets    |
//! | [`solve_one_player_adam`] | every vertex owned by Adam         |
//!
//! [`solve`] dispatches between them.

mod adam;
mod chain;
mod fpt;
mod general;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arena::{GameSpec, Player, PlayerProfile};
use crate::error::{Error, Result};
use crate::product::ProductStrategy;

pub use adam::{lasso_witness, solve_one_player_adam};
pub use chain::{solve_one_large, solve_singleton_chain, ChainAnalysis};
pub use fpt::solve_fpt;
pub use general::solve_general;

/// How the product solvers seed the visited-mask of the start state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum StartMask {
    /// The start vertex counts as visited, like every later vertex of the play.
    #[default]
    Seeded,
    /// Large target sets containing the start vertex are not credited until revisited.
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub start_mask: StartMask,
    /// Upper bound on materialised product states.
    pub max_product_states: usize,
    /// `auto` uses the FPT solver up to this many large sets.
    pub fpt_cutoff: usize,
}

/// Rough per-state footprint used to turn a memory budget into a state budget.
const BYTES_PER_STATE: usize = 64;

impl SolverConfig {
    pub fn with_memory_mb(mb: usize) -> Self {
        SolverConfig {
            max_product_states: mb.saturating_mul(1 << 20) / BYTES_PER_STATE,
            ..Default::default()
        }
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            start_mask: StartMask::Seeded,
            max_product_states: 1024 * (1 << 20) / BYTES_PER_STATE,
            fpt_cutoff: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    Auto,
    Product,
    Chain,
    OneLarge,
    Fpt,
    Adam,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Product => "product",
            Algorithm::Chain => "chain",
            Algorithm::OneLarge => "one-large",
            Algorithm::Fpt => "fpt",
            Algorithm::Adam => "adam",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [
            Algorithm::Auto,
            Algorithm::Product,
            Algorithm::Chain,
            Algorithm::OneLarge,
            Algorithm::Fpt,
            Algorithm::Adam,
        ]
        .into_iter()
        .find(|a| a.name() == s)
        .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

/// A lasso play `prefix · cycle^ω`; the knot is `cycle[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lasso {
    pub prefix: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl Lasso {
    pub fn knot(&self) -> usize {
        self.cycle[0]
    }

    /// The finite play `v_0 … v_m` with `v_m` equal to the knot.
    pub fn play(&self) -> Vec<usize> {
        let mut play = self.prefix.clone();
        play.extend(&self.cycle);
        play.push(self.knot());
        play
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.prefix.iter().chain(&self.cycle).copied()
    }

    /// Cuts an ultimately periodic walk at its first repeated vertex, giving a
    /// simple lasso whose vertices are a subset of the walk's.
    pub fn simple_from_walk(prefix: &[usize], cycle: &[usize]) -> Lasso {
        let mut position = std::collections::HashMap::new();
        let mut walk = Vec::new();
        for &v in prefix.iter().chain(cycle.iter().cycle()) {
            if let Some(&i) = position.get(&v) {
                return Lasso {
                    prefix: walk[..i].to_vec(),
                    cycle: walk[i..].to_vec(),
                };
            }
            position.insert(v, walk.len());
            walk.push(v);
        }
        unreachable!("a cycle is never empty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// No targets at all.
    VacuousWin,
    /// Singleton targets (canonical indices) ordered by attractor, largest first;
    /// `insertion` is the index at which the large set is collected, if any.
    ChainOrder {
        chain: Vec<usize>,
        insertion: Option<usize>,
    },
    /// Two singleton targets with incomparable attractors, plus one vertex from each difference.
    IncomparabilityWitness {
        first: usize,
        second: usize,
        only_first: usize,
        only_second: usize,
    },
    /// The start vertex lies outside the attractor of this singleton target.
    StartOutsideChain {
        target: usize,
    },
    /// The attractors form a chain but no segment can collect the large set.
    NoLargeSetInsertion {
        chain: Vec<usize>,
    },
    /// The layered product recursion; `visit_order` lists every singleton target.
    FptLayers {
        visit_order: Vec<usize>,
        product_states: usize,
    },
    /// Adam owns every vertex and each target attractor contains the start.
    ForcedVisits,
    /// An Adam play avoiding target `avoided`.
    Lasso {
        avoided: usize,
        lasso: Lasso,
    },
    ProductStrategy(ProductStrategy),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub winner: Player,
    pub algorithm: Algorithm,
    pub certificate: Certificate,
    pub product_states: Option<usize>,
}

impl SolveOutcome {
    fn new(winner: Player, algorithm: Algorithm, certificate: Certificate) -> Self {
        SolveOutcome {
            winner,
            algorithm,
            certificate,
            product_states: None,
        }
    }
}

pub(crate) fn wrong_class(solver: &str, needs: &str, game: &GameSpec) -> Error {
    let class = game.classify();
    Error::WrongClass(format!(
        "{solver} needs {needs}, instance has {} singleton and {} large target sets ({:?})",
        game.singletons.len(),
        game.large_sets.len(),
        class.profile
    ))
}

/// Picks the solver `auto` would run.
pub fn dispatch(game: &GameSpec, config: &SolverConfig) -> Algorithm {
    let start_in_large = game.large_sets.iter().any(|f| f.contains(&game.start));
    // Specialists credit the start vertex; the empty start mask must go to a product solver.
    let literal_start = config.start_mask == StartMask::Empty && start_in_large;
    let class = game.classify();
    let k = game.large_sets.len();
    if class.profile == PlayerProfile::OnlyAdam && !literal_start {
        Algorithm::Adam
    } else if k == 0 {
        Algorithm::Chain
    } else if k == 1 && !literal_start {
        Algorithm::OneLarge
    } else if k <= config.fpt_cutoff {
        Algorithm::Fpt
    } else {
        Algorithm::Product
    }
}

/// Solves GenReach with the given algorithm (`Auto` dispatches).
pub fn solve(game: &GameSpec, algorithm: Algorithm, config: &SolverConfig) -> Result<SolveOutcome> {
    let algorithm = match algorithm {
        Algorithm::Auto => dispatch(game, config),
        other => other,
    };
    match algorithm {
        Algorithm::Product => solve_general(game, config),
        Algorithm::Chain => solve_singleton_chain(game),
        Algorithm::OneLarge => solve_one_large(game),
        Algorithm::Fpt => solve_fpt(game, config),
        Algorithm::Adam => solve_one_player_adam(game),
        Algorithm::Auto => unreachable!(),
    }
}
