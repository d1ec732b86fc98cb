use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arena::{Arena, GameSpec, Player};
use crate::error::{syntax, Error, Result};

use super::ReductionMeta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quantifier {
    Exists,
    Forall,
}

impl Quantifier {
    /// The player who picks the value of a variable bound by this quantifier.
    pub fn player(self) -> Player {
        match self {
            Quantifier::Exists => Player::Eve,
            Quantifier::Forall => Player::Adam,
        }
    }
}

/// A CNF over variables `1..=variables`; literals are signed variable numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cnf {
    pub variables: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new(variables: usize, clauses: Vec<Vec<i32>>) -> Result<Cnf> {
        for clause in &clauses {
            if clause.is_empty() {
                return Err(Error::Invalid("empty clause".into()));
            }
            if let Some(l) = clause
                .iter()
                .find(|l| **l == 0 || l.unsigned_abs() as usize > variables)
            {
                return Err(Error::Invalid(format!(
                    "literal {l} outside 1..={variables}"
                )));
            }
        }
        Ok(Cnf { variables, clauses })
    }

    /// Whether the assignment (`assignment[v - 1]` is variable `v`) satisfies a clause.
    pub fn satisfies(clause: &[i32], assignment: &[bool]) -> bool {
        clause
            .iter()
            .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
    }

    /// Clauses with repeated literals removed and repeated clauses dropped,
    /// first occurrence kept. This is the clause family the game sees.
    pub fn normalized_clauses(&self) -> Vec<Vec<i32>> {
        normalize(&self.clauses)
    }
}

fn normalize(clauses: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = Vec::new();
    for clause in clauses {
        let mut c = clause.clone();
        c.sort_unstable();
        c.dedup();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// A prenex QBF: quantifier prefix outermost first, CNF matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Qbf {
    pub prefix: Vec<(Quantifier, u32)>,
    pub matrix: Vec<Vec<i32>>,
}

impl Qbf {
    pub fn new(prefix: Vec<(Quantifier, u32)>, matrix: Vec<Vec<i32>>) -> Result<Qbf> {
        let mut bound = std::collections::HashSet::new();
        for &(_, v) in &prefix {
            if v == 0 || !bound.insert(v) {
                return Err(Error::Invalid(format!("variable {v} bound twice or zero")));
            }
        }
        for clause in &matrix {
            if clause.is_empty() {
                return Err(Error::Invalid("empty clause".into()));
            }
            if let Some(l) = clause.iter().find(|l| !bound.contains(&l.unsigned_abs())) {
                return Err(Error::Invalid(format!(
                    "literal {l} refers to an unquantified variable"
                )));
            }
        }
        Ok(Qbf { prefix, matrix })
    }

    pub fn variable_count(&self) -> usize {
        self.prefix.len()
    }
}

/// Chooser `3i`, literals `3i+1` (positive) and `3i+2` (negative), sink `3n`.
fn chooser_game(prefix: &[(Player, u32)], clauses: &[Vec<i32>]) -> (GameSpec, ReductionMeta) {
    let n = prefix.len();
    let sink = 3 * n;
    let position: HashMap<u32, usize> = prefix
        .iter()
        .enumerate()
        .map(|(i, &(_, v))| (v, i))
        .collect();
    let mut owner = Vec::with_capacity(sink + 1);
    let mut succ = Vec::with_capacity(sink + 1);
    let mut labels = Vec::with_capacity(sink + 1);
    for (i, &(player, var)) in prefix.iter().enumerate() {
        owner.extend([player; 3]);
        succ.push(vec![3 * i + 1, 3 * i + 2]);
        succ.push(vec![3 * i + 3]);
        succ.push(vec![3 * i + 3]);
        labels.extend([
            format!("choose x{var}"),
            format!("x{var}"),
            format!("~x{var}"),
        ]);
    }
    // One successor, so ownership is immaterial; copying the last chooser
    // keeps one-player formulas one-player.
    owner.push(prefix.last().map_or(Player::Eve, |&(p, _)| p));
    succ.push(vec![sink]);
    labels.push("sink".into());

    let arena = Arena::new(owner, succ).expect("the chooser arena is well formed");
    let mut game = GameSpec::new(arena, 0, vec![], vec![]).expect("start 0 exists");
    for clause in normalize(clauses) {
        let set = clause
            .iter()
            .map(|&l| 3 * position[&l.unsigned_abs()] + if l > 0 { 1 } else { 2 })
            .collect();
        game.push_target(set).expect("clause vertices exist");
    }
    let meta = ReductionMeta {
        labels,
        expected_vertices: 3 * n + 1,
    };
    (game, meta)
}

/// The game in which Eve sets existential and Adam universal variables in
/// prefix order and every clause is a target set of literal vertices. Eve
/// wins iff the formula is true.
pub fn qbf_to_game(phi: &Qbf) -> (GameSpec, ReductionMeta) {
    let prefix: Vec<_> = phi.prefix.iter().map(|&(q, v)| (q.player(), v)).collect();
    chooser_game(&prefix, &phi.matrix)
}

/// The same construction with one player choosing every variable. Repeated
/// clauses are merged, so the game value is the best (Eve) or worst (Adam)
/// number of distinct clauses an assignment satisfies.
pub fn cnf_to_game(psi: &Cnf, owner: Player) -> (GameSpec, ReductionMeta) {
    let prefix: Vec<_> = (1..=psi.variables as u32).map(|v| (owner, v)).collect();
    chooser_game(&prefix, &psi.clauses)
}

struct DimacsBody {
    variables: usize,
    quantifiers: Vec<(Quantifier, u32)>,
    clauses: Vec<Vec<i32>>,
}

fn parse_dimacs_body(text: &str, allow_quantifiers: bool) -> Result<DimacsBody> {
    let mut header: Option<(usize, usize)> = None;
    let mut quantifiers = Vec::new();
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('c') || content.starts_with('%') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        if content.starts_with('p') {
            if header.is_some() {
                return Err(syntax(line, "second problem line"));
            }
            let fields: Vec<&str> = tokens.collect();
            if fields.len() != 4 || fields[1] != "cnf" {
                return Err(syntax(line, "expected `p cnf <variables> <clauses>`"));
            }
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| syntax(line, format!("bad number `{s}`")))
            };
            header = Some((num(fields[2])?, num(fields[3])?));
            continue;
        }
        let Some((variables, _)) = header else {
            return Err(syntax(line, "missing `p cnf` line"));
        };
        let literal = |t: &str| -> Result<i32> {
            let l = t
                .parse::<i32>()
                .map_err(|_| syntax(line, format!("bad literal `{t}`")))?;
            if l.unsigned_abs() as usize > variables {
                return Err(syntax(
                    line,
                    format!("variable {} exceeds declared {variables}", l.unsigned_abs()),
                ));
            }
            Ok(l)
        };
        if content.starts_with('e') || content.starts_with('a') {
            if !allow_quantifiers {
                return Err(syntax(line, "quantifier line in a CNF file"));
            }
            if !clauses.is_empty() || !current.is_empty() {
                return Err(syntax(line, "quantifier line after clauses"));
            }
            let q = if tokens.next() == Some("e") {
                Quantifier::Exists
            } else {
                Quantifier::Forall
            };
            let mut closed = false;
            for t in tokens {
                let v = literal(t)?;
                if v == 0 {
                    closed = true;
                    break;
                }
                if v < 0 {
                    return Err(syntax(line, "negative variable in quantifier block"));
                }
                if quantifiers.iter().any(|&(_, w)| w == v as u32) {
                    return Err(syntax(line, format!("variable {v} quantified twice")));
                }
                quantifiers.push((q, v as u32));
            }
            if !closed {
                return Err(syntax(line, "quantifier block not terminated by 0"));
            }
            continue;
        }
        for t in tokens {
            let l = literal(t)?;
            if l == 0 {
                if current.is_empty() {
                    return Err(syntax(line, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(l);
            }
        }
    }
    if !current.is_empty() {
        return Err(syntax(last_line, "last clause not terminated by 0"));
    }
    let Some((variables, declared_clauses)) = header else {
        return Err(syntax(last_line.max(1), "missing `p cnf` line"));
    };
    if clauses.len() != declared_clauses {
        log::warn!(
            "header declares {declared_clauses} clauses, found {}",
            clauses.len()
        );
    }
    Ok(DimacsBody {
        variables,
        quantifiers,
        clauses,
    })
}

/// Parses a DIMACS CNF file.
pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    let body = parse_dimacs_body(text, false)?;
    Cnf::new(body.variables, body.clauses)
}

/// Parses a QDIMACS file. Variables that appear in no quantifier block are
/// free and become existential, outermost.
pub fn parse_qdimacs(text: &str) -> Result<Qbf> {
    let body = parse_dimacs_body(text, true)?;
    let mut used: Vec<u32> = body
        .clauses
        .iter()
        .flatten()
        .map(|l| l.unsigned_abs())
        .collect();
    used.sort_unstable();
    used.dedup();
    let mut prefix: Vec<(Quantifier, u32)> = used
        .into_iter()
        .filter(|v| !body.quantifiers.iter().any(|&(_, w)| w == *v))
        .map(|v| (Quantifier::Exists, v))
        .collect();
    prefix.extend(body.quantifiers);
    Qbf::new(prefix, body.clauses)
}
