//! Solvers for two-player generalised reachability games on finite graphs.
//!
//! Eve wins a play when it visits every target set at least once. The crate
//! decides who wins ([`genreach`]), computes how many target sets Eve can
//! guarantee with and without committing to them up front ([`maxreach`]),
//! builds games from QBF, CNF, s-t reachability and vertex-cover instances
//! ([`reductions`]), and carries brute-force reference solvers ([`oracle`]).

pub mod arena;
pub mod attractor;
pub mod error;
pub mod format;
pub mod genreach;
pub mod maxreach;
pub mod oracle;
pub mod product;
pub mod reductions;
pub mod scc;

pub use arena::{classify, Arena, GameSpec, InstanceClass, Player, PlayerProfile, TargetClass};
pub use attractor::{attractor, check_total_preorder, AttractorResult, PreorderCheck};
pub use error::{Error, Result};
pub use format::{parse_game, serialize_game};
pub use genreach::{solve, Algorithm, Certificate, Lasso, SolveOutcome, SolverConfig, StartMask};
pub use product::{ProductState, ProductStrategy};
pub use scc::{scc_decompose, SccDag};
