//! `grg`: solve, optimise, reduce and generate generalised reachability games.

mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use grg_core::format::serialize_with_labels;
use grg_core::maxreach::{
    max_value_adam_general, max_value_adam_lasso, max_value_eve_scc, max_value_general,
    promise_value_adam, promise_value_general, promise_value_singleton, ValueResult,
};
use grg_core::oracle::{self, OracleBudget};
use grg_core::reductions::{
    cnf_to_game, parse_dimacs, parse_graph, parse_qdimacs, qbf_to_game, random_game,
    streach_to_game, vertex_cover_to_game, RandomParams, ReductionMeta,
};
use grg_core::{
    parse_game, serialize_game, solve, Algorithm, GameSpec, Player, PlayerProfile, SolverConfig,
    StartMask,
};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use report::{Names, RunReport};

const DEFAULT_MEMORY_MB: usize = 1024;

#[derive(Parser)]
#[command(name = "grg", version, about = "Generalised reachability games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct Output {
    /// One JSON object per report instead of text lines.
    #[arg(long)]
    json: bool,
    /// Print witnesses in full instead of the first 50 entries.
    #[arg(long)]
    full_witness: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide who wins.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        algo: Algorithm,
        /// Cross-check the verdict with the brute-force oracle.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value = "seeded")]
        start_mask: StartMaskArg,
        #[command(flatten)]
        out: Output,
    },
    /// Largest number of target sets Eve can guarantee to visit.
    Max {
        file: PathBuf,
        /// Exit 1 unless the value is at least K.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Largest subset of target sets Eve can commit to and then visit.
    Promise {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Brute-force reference answer for a small game.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "genreach")]
        problem: OracleProblem,
        #[arg(long, value_enum, default_value = "seeded")]
        start_mask: StartMaskArg,
        #[arg(long)]
        json: bool,
    },
    /// Build a game from a QBF, CNF, digraph or undirected graph.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        input: PathBuf,
        /// Player choosing every variable (cnf only).
        #[arg(long, value_enum)]
        owner: Option<PlayerArg>,
        /// 1-based source vertex (st-reach only).
        #[arg(long)]
        source: Option<usize>,
        /// 1-based target vertex (st-reach only).
        #[arg(long)]
        sink: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a random game.
    Gen {
        #[arg(long)]
        vertices: usize,
        /// Total edges; defaults to twice the vertex count (at most n²).
        #[arg(long)]
        edges: Option<usize>,
        /// Singleton targets.
        #[arg(long, default_value_t = 0)]
        targets: usize,
        /// Large target sets.
        #[arg(long, default_value_t = 0)]
        large: usize,
        #[arg(long, default_value_t = 2)]
        large_size: usize,
        #[arg(long, value_enum, default_value = "two-player")]
        profile: ProfileArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve every `.grg` file in a directory.
    Bench {
        dir: PathBuf,
        #[arg(long, default_value = "auto")]
        algo: Algorithm,
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value = "seeded")]
        start_mask: StartMaskArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StartMaskArg {
    Seeded,
    Empty,
}

impl From<StartMaskArg> for StartMask {
    fn from(a: StartMaskArg) -> Self {
        match a {
            StartMaskArg::Seeded => StartMask::Seeded,
            StartMaskArg::Empty => StartMask::Empty,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleProblem {
    Genreach,
    Max,
    Promise,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    Qbf,
    Cnf,
    StReach,
    VertexCover,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlayerArg {
    Eve,
    Adam,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    TwoPlayer,
    OnlyEve,
    OnlyAdam,
}

/// Exit codes besides 0 (success) and 2 (bad input).
mod exit {
    pub const MISMATCH: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const WRONG_CLASS: u8 = 3;
    pub const BUDGET: u8 = 4;
}

/// Not an error: the run completed but the answer fails `--check` or `--k`.
#[derive(Debug)]
struct Verdict(String);

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Verdict {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Verdict>().is_some() {
        return exit::MISMATCH;
    }
    match err.downcast_ref::<grg_core::Error>() {
        Some(grg_core::Error::WrongClass(_)) => exit::WRONG_CLASS,
        Some(
            grg_core::Error::MemoryBudget { .. }
            | grg_core::Error::TooManyTargets { .. }
            | grg_core::Error::BudgetExceeded(_)
            | grg_core::Error::TooManyVariables { .. }
            | grg_core::Error::TooLarge(_),
        ) => exit::BUDGET,
        _ => exit::PARSE,
    }
}

fn config(start_mask: StartMask) -> Result<SolverConfig> {
    let mb = match std::env::var("GRG_MEMORY_MB") {
        Ok(s) => s
            .parse()
            .with_context(|| format!("GRG_MEMORY_MB={s} is not a number"))?,
        Err(_) => DEFAULT_MEMORY_MB,
    };
    Ok(SolverConfig {
        start_mask,
        ..SolverConfig::with_memory_mb(mb)
    })
}

struct Input {
    path: String,
    text: String,
    digest: String,
    game: GameSpec,
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> Result<Input> {
    let text = read_text(path)?;
    let game = parse_game(&text).with_context(|| format!("{}", path.display()))?;
    Ok(Input {
        path: path.display().to_string(),
        digest: hex::encode(Sha256::digest(text.as_bytes())),
        text,
        game,
    })
}

fn solve_report(
    input: &Input,
    algo: Algorithm,
    check: bool,
    cfg: &SolverConfig,
    full: bool,
) -> Result<RunReport> {
    let names = Names::new(&input.text, &input.game, full);
    let started = Instant::now();
    let outcome = solve(&input.game, algo, cfg)?;
    let micros = started.elapsed().as_micros();
    let mut report = RunReport {
        command: "solve",
        file: input.path.clone(),
        digest: input.digest.clone(),
        algo: outcome.algorithm.name().into(),
        winner: Some(outcome.winner.to_string()),
        value: None,
        witness: names.certificate(&input.game, &outcome.certificate),
        micros,
        states: outcome.product_states,
        oracle: None,
    };
    if check {
        let truth =
            oracle::oracle_genreach_with(&input.game, &OracleBudget::default(), cfg.start_mask)?;
        report.oracle = Some(truth.to_string());
        if truth != outcome.winner {
            return Err(Verdict(format!(
                "{}: solver says {}, oracle says {truth}",
                input.path, outcome.winner
            ))
            .into());
        }
    }
    Ok(report)
}

fn emit(report: &RunReport, json: bool) {
    if json {
        println!("{}", report.json());
    } else {
        print!("{}", report.text());
    }
}

fn max_solver(game: &GameSpec, cfg: &SolverConfig) -> Result<(&'static str, ValueResult)> {
    let class = game.classify();
    let singletons = game.large_sets.is_empty();
    Ok(match class.profile {
        PlayerProfile::OnlyEve if singletons => ("eve-scc", max_value_eve_scc(game)?),
        PlayerProfile::OnlyAdam if singletons => ("adam-lasso", max_value_adam_lasso(game)?),
        PlayerProfile::OnlyAdam => ("adam-general", max_value_adam_general(game, cfg)?),
        _ => ("product", max_value_general(game, cfg)?),
    })
}

fn promise_solver(game: &GameSpec, cfg: &SolverConfig) -> Result<(&'static str, ValueResult)> {
    Ok(if game.classify().profile == PlayerProfile::OnlyAdam {
        ("adam", promise_value_adam(game)?)
    } else if game.large_sets.is_empty() {
        ("preorder-graph", promise_value_singleton(game)?)
    } else {
        ("subsets", promise_value_general(game, cfg)?)
    })
}

fn value_command(
    file: &Path,
    promise: bool,
    k: Option<usize>,
    check: bool,
    out: &Output,
) -> Result<()> {
    let input = load(file)?;
    let cfg = config(StartMask::Seeded)?;
    let names = Names::new(&input.text, &input.game, out.full_witness);
    let started = Instant::now();
    let (algo, result) = if promise {
        promise_solver(&input.game, &cfg)?
    } else {
        max_solver(&input.game, &cfg)?
    };
    let micros = started.elapsed().as_micros();
    let mut report = RunReport {
        command: if promise { "promise" } else { "max" },
        file: input.path.clone(),
        digest: input.digest.clone(),
        algo: algo.into(),
        winner: None,
        value: Some(result.value),
        witness: names.witness(&input.game, &result.witness),
        micros,
        states: result.product_states,
        oracle: None,
    };
    let mut failure = None;
    if check {
        let truth = if promise {
            oracle::oracle_promise(&input.game)?
        } else {
            oracle::oracle_max(&input.game)?
        };
        report.oracle = Some(truth.to_string());
        if truth != result.value {
            failure = Some(format!(
                "solver value {}, oracle value {truth}",
                result.value
            ));
        }
    }
    emit(&report, out.json);
    if let Some(msg) = failure {
        return Err(Verdict(msg).into());
    }
    if let Some(k) = k {
        if result.value < k {
            return Err(Verdict(format!("value {} is below {k}", result.value)).into());
        }
    }
    Ok(())
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn reduce(
    kind: ReduceKind,
    input: &Path,
    owner: Option<PlayerArg>,
    source: Option<usize>,
    sink: Option<usize>,
) -> Result<(GameSpec, ReductionMeta)> {
    let text = read_text(input)?;
    let ctx = || input.display().to_string();
    Ok(match kind {
        ReduceKind::Qbf => qbf_to_game(&parse_qdimacs(&text).with_context(ctx)?),
        ReduceKind::Cnf => {
            let owner = match owner.ok_or_else(|| anyhow!("reduce cnf needs --owner eve|adam"))? {
                PlayerArg::Eve => Player::Eve,
                PlayerArg::Adam => Player::Adam,
            };
            cnf_to_game(&parse_dimacs(&text).with_context(ctx)?, owner)
        }
        ReduceKind::StReach => {
            let graph = parse_graph(&text).with_context(ctx)?;
            let one_based = |v: Option<usize>, flag: &str| -> Result<usize> {
                let v = v.ok_or_else(|| anyhow!("reduce st-reach needs --{flag}"))?;
                if v == 0 || v > graph.vertices {
                    return Err(anyhow!("--{flag} {v} outside 1..={}", graph.vertices));
                }
                Ok(v - 1)
            };
            streach_to_game(
                &graph,
                one_based(source, "source")?,
                one_based(sink, "sink")?,
            )?
        }
        ReduceKind::VertexCover => vertex_cover_to_game(&parse_graph(&text).with_context(ctx)?)?,
    })
}

struct BenchItem {
    report: Result<RunReport>,
    file: String,
}

fn bench(
    dir: &Path,
    algo: Algorithm,
    check: bool,
    cfg: &SolverConfig,
    jobs: usize,
    out: &Output,
) -> Result<()> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grg"))
        .collect();
    files.sort();
    let run = |path: &PathBuf| BenchItem {
        report: load(path)
            .and_then(|input| solve_report(&input, algo, check, cfg, out.full_witness)),
        file: path.display().to_string(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    // collect() on an indexed parallel iterator keeps input order
    let items: Vec<BenchItem> = pool.install(|| files.par_iter().map(run).collect());

    let mut worst: Option<anyhow::Error> = None;
    let mut per_algo = std::collections::BTreeMap::<String, usize>::new();
    let (mut eve, mut adam, mut micros) = (0usize, 0usize, 0u128);
    for item in items {
        match item.report {
            Ok(report) => {
                emit(&report, out.json);
                *per_algo.entry(report.algo.clone()).or_default() += 1;
                match report.winner.as_deref() {
                    Some("eve") => eve += 1,
                    _ => adam += 1,
                }
                micros += report.micros;
            }
            Err(err) => {
                eprintln!("error {}: {err:#}", item.file);
                let replace = match &worst {
                    None => true,
                    Some(w) => exit_code(&err) == exit::MISMATCH && exit_code(w) != exit::MISMATCH,
                };
                if replace {
                    worst = Some(err);
                }
            }
        }
    }
    let algos: Vec<String> = per_algo.iter().map(|(a, n)| format!("{a}={n}")).collect();
    if out.json {
        let summary = serde_json::json!({
            "command": "bench-summary",
            "files": eve + adam,
            "eve": eve,
            "adam": adam,
            "micros": micros,
            "algos": per_algo,
        });
        println!("{summary}");
    } else {
        println!(
            "summary files {} eve {eve} adam {adam} micros {micros} algos {}",
            eve + adam,
            algos.join(",")
        );
    }
    match worst {
        Some(err) => Err(err),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve {
            file,
            algo,
            check,
            start_mask,
            out,
        } => {
            let input = load(&file)?;
            let report = solve_report(
                &input,
                algo,
                check,
                &config(start_mask.into())?,
                out.full_witness,
            )?;
            emit(&report, out.json);
            Ok(())
        }
        Command::Max {
            file,
            k,
            check,
            out,
        } => value_command(&file, false, k, check, &out),
        Command::Promise {
            file,
            k,
            check,
            out,
        } => value_command(&file, true, k, check, &out),
        Command::Oracle {
            file,
            problem,
            start_mask,
            json,
        } => {
            let input = load(&file)?;
            let budget = OracleBudget::default();
            let mode = start_mask.into();
            let started = Instant::now();
            let (winner, value) = match problem {
                OracleProblem::Genreach => (
                    Some(oracle::oracle_genreach_with(&input.game, &budget, mode)?),
                    None,
                ),
                OracleProblem::Max => (
                    None,
                    Some(oracle::oracle_max_with(&input.game, &budget, mode)?),
                ),
                OracleProblem::Promise => (
                    None,
                    Some(oracle::oracle_promise_with(&input.game, &budget, mode)?),
                ),
            };
            let report = RunReport {
                command: "oracle",
                file: input.path,
                digest: input.digest,
                algo: "oracle".into(),
                winner: winner.map(|w| w.to_string()),
                value,
                witness: "none".into(),
                micros: started.elapsed().as_micros(),
                states: None,
                oracle: None,
            };
            emit(&report, json);
            Ok(())
        }
        Command::Reduce {
            kind,
            input,
            owner,
            source,
            sink,
            output,
        } => {
            let (game, meta) = reduce(kind, &input, owner, source, sink)?;
            write_output(
                output.as_deref(),
                &serialize_with_labels(&game, &meta.labels),
            )
        }
        Command::Gen {
            vertices,
            edges,
            targets,
            large,
            large_size,
            profile,
            seed,
            output,
        } => {
            let params = RandomParams {
                edges: edges.unwrap_or((2 * vertices).min(vertices * vertices)),
                singletons: targets,
                large_count: large,
                large_size,
                profile: match profile {
                    ProfileArg::TwoPlayer => PlayerProfile::TwoPlayer,
                    ProfileArg::OnlyEve => PlayerProfile::OnlyEve,
                    ProfileArg::OnlyAdam => PlayerProfile::OnlyAdam,
                },
                ..RandomParams::new(vertices, seed)
            };
            let game = random_game(&params)?;
            write_output(output.as_deref(), &serialize_game(&game))
        }
        Command::Bench {
            dir,
            algo,
            check,
            start_mask,
            jobs,
            out,
        } => bench(&dir, algo, check, &config(start_mask.into())?, jobs, &out),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("grg: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
