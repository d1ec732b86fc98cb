//! The `grg 1` game file format.
//!
//! ```text
//! grg 1
//! vertex <id> <E|A> <succ,succ,...>     # one line per vertex, ids 0..n-1, any order
//! start <id>
//! target <id> [<id> ...]                # one line per target set; 1 id => singleton
//! ```
//!
//! `#` starts a comment running to the end of the line. A vertex line may
//! carry a `# label: <name>` comment; labels are not part of the game and are
//! read separately by [`parse_labels`].

use std::fmt::Write as _;

use crate::arena::{Arena, GameSpec, Player};
use crate::error::{syntax, Error, Result};

const LABEL_MARKER: &str = "label:";

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("expected a vertex id, found `{token}`")))
}

/// Parses a `grg 1` game.
pub fn parse_game(text: &str) -> Result<GameSpec> {
    let mut header_seen = false;
    let mut owners: Vec<Option<(Player, Vec<usize>, usize)>> = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut targets: Vec<(Vec<usize>, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw).trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        if !header_seen {
            if keyword != "grg" || tokens.next() != Some("1") || tokens.next().is_some() {
                return Err(syntax(line, "expected header `grg 1`"));
            }
            header_seen = true;
            continue;
        }
        match keyword {
            "vertex" => {
                let id = parse_id(
                    tokens
                        .next()
                        .ok_or_else(|| syntax(line, "missing vertex id"))?,
                    line,
                )?;
                let player = match tokens.next() {
                    Some("E") => Player::Eve,
                    Some("A") => Player::Adam,
                    Some(other) => {
                        return Err(syntax(
                            line,
                            format!("owner must be E or A, found `{other}`"),
                        ))
                    }
                    None => return Err(syntax(line, "missing owner")),
                };
                let rest: String = tokens.collect::<Vec<_>>().join("");
                if rest.is_empty() {
                    return Err(syntax(
                        line,
                        format!("vertex {id} has an empty successor list"),
                    ));
                }
                let succ = rest
                    .split(',')
                    .map(|t| parse_id(t, line))
                    .collect::<Result<Vec<_>>>()?;
                if id >= owners.len() {
                    owners.resize(id + 1, None);
                }
                if let Some((_, _, first)) = &owners[id] {
                    return Err(syntax(
                        line,
                        format!("duplicate declaration of vertex {id} (first on line {first})"),
                    ));
                }
                owners[id] = Some((player, succ, line));
            }
            "start" => {
                let id = parse_id(
                    tokens
                        .next()
                        .ok_or_else(|| syntax(line, "missing start id"))?,
                    line,
                )?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after start id"));
                }
                if let Some((_, first)) = start {
                    return Err(syntax(
                        line,
                        format!("duplicate start (first on line {first})"),
                    ));
                }
                start = Some((id, line));
            }
            "target" => {
                let ids = tokens
                    .map(|t| parse_id(t, line))
                    .collect::<Result<Vec<_>>>()?;
                if ids.is_empty() {
                    return Err(syntax(line, "target line lists no vertices"));
                }
                targets.push((ids, line));
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    if !header_seen {
        return Err(syntax(1, "missing header `grg 1`"));
    }

    let n = owners.len();
    let mut owner = Vec::with_capacity(n);
    let mut succ = Vec::with_capacity(n);
    for (id, decl) in owners.into_iter().enumerate() {
        let (player, list, line) =
            decl.ok_or_else(|| Error::Invalid(format!("vertex {id} is never declared")))?;
        if let Some(&v) = list.iter().find(|&&v| v >= n) {
            return Err(syntax(
                line,
                format!("successor {v} of vertex {id} is not a declared vertex"),
            ));
        }
        owner.push(player);
        succ.push(list);
    }
    let arena = Arena::new(owner, succ)?;
    let (start, start_line) = start.ok_or_else(|| Error::Invalid("missing `start` line".into()))?;
    if start >= n {
        return Err(syntax(
            start_line,
            format!("start {start} is not a declared vertex"),
        ));
    }
    let mut game = GameSpec::new(arena, start, Vec::new(), Vec::new())?;
    for (ids, line) in targets {
        if let Some(&v) = ids.iter().find(|&&v| v >= n) {
            return Err(syntax(line, format!("target {v} is not a declared vertex")));
        }
        game.push_target(ids)?;
    }
    Ok(game)
}

/// Reads the `# label: <name>` comments attached to vertex lines.
pub fn parse_labels(text: &str) -> Vec<Option<String>> {
    let mut labels: Vec<Option<String>> = Vec::new();
    for raw in text.lines() {
        let Some(hash) = raw.find('#') else { continue };
        let mut tokens = raw[..hash].split_whitespace();
        if tokens.next() != Some("vertex") {
            continue;
        }
        let Some(Ok(id)) = tokens.next().map(str::parse::<usize>) else {
            continue;
        };
        let comment = raw[hash + 1..].trim();
        if let Some(name) = comment.strip_prefix(LABEL_MARKER) {
            if id >= labels.len() {
                labels.resize(id + 1, None);
            }
            labels[id] = Some(name.trim().to_string());
        }
    }
    labels
}

/// Writes a game in `grg 1` format: singletons first, then large sets.
pub fn serialize_game(game: &GameSpec) -> String {
    serialize_with_labels(game, &[])
}

/// Like [`serialize_game`], appending `# label:` comments where `labels` has an entry.
pub fn serialize_with_labels(game: &GameSpec, labels: &[String]) -> String {
    let mut out = String::from("grg 1\n");
    let arena = &game.arena;
    for v in arena.vertices() {
        let succ = arena
            .successors(v)
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(out, "vertex {} {} {}", v, arena.owner(v).letter(), succ).unwrap();
        if let Some(label) = labels.get(v) {
            write!(out, "  # {LABEL_MARKER} {label}").unwrap();
        }
        out.push('\n');
    }
    writeln!(out, "start {}", game.start).unwrap();
    for set in game.target_sets() {
        let ids = set
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "target {ids}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::tests::fig1;

    const FIG1: &str = "\
grg 1
# the seven-vertex example
vertex 0 E 1,6   # label: s
vertex 1 A 2,4   # label: u
vertex 2 E 3     # label: u1
vertex 3 E 2     # label: u2
vertex 4 E 5     # label: u3
vertex 5 E 4     # label: u4
vertex 6 E 6     # label: v
start 0
target 2
target 3
target 4
target 5
target 6
";

    #[test]
    fn parses_fig1() {
        let g = parse_game(FIG1).unwrap();
        assert_eq!(g, fig1());
        assert_eq!(g.singletons.len(), 5);
        assert!(g.large_sets.is_empty());
        let labels = parse_labels(FIG1);
        assert_eq!(labels[0].as_deref(), Some("s"));
        assert_eq!(labels[6].as_deref(), Some("v"));
    }

    #[test]
    fn empty_target_section() {
        let g = parse_game("grg 1\nvertex 0 E 0\nstart 0\n").unwrap();
        assert_eq!(g.target_count(), 0);
        assert!(!serialize_game(&g).contains("target"));
    }

    #[test]
    fn multi_id_target_line_is_large() {
        let g = parse_game("grg 1\nvertex 0 E 1\nvertex 1 E 2\nvertex 2 E 3\nvertex 3 E 4\nvertex 4 E 4\nstart 0\ntarget 2 3 4\n")
            .unwrap();
        assert_eq!(g.large_sets, vec![vec![2, 3, 4]]);
    }

    #[test]
    fn vertices_in_any_order() {
        let g = parse_game("grg 1\nvertex 1 A 0\nvertex 0 E 1,0\nstart 1\n").unwrap();
        assert_eq!(g.arena.owner(1), Player::Adam);
        assert_eq!(g.arena.successors(0), &[1, 0]);
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Syntax { line, .. } => line,
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn error_paths() {
        assert_eq!(line_of(parse_game("grg 2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_game("grg 1\nvertex 0 X 0\n").unwrap_err()), 2);
        assert_eq!(
            line_of(parse_game("grg 1\nvertex 0 E 5\nstart 0\n").unwrap_err()),
            2
        );
        assert_eq!(
            line_of(parse_game("grg 1\nvertex 0 E 0\nvertex 0 E 0\nstart 0\n").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_game("grg 1\nvertex 0 E\nstart 0\n").unwrap_err()),
            2
        );
        assert_eq!(
            line_of(parse_game("grg 1\nvertex 0 E 0\nstart 0\ntarget\n").unwrap_err()),
            4
        );
        assert_eq!(
            line_of(parse_game("grg 1\nvertex 0 E 0\nstart 0\ntarget 3\n").unwrap_err()),
            4
        );
        assert_eq!(
            line_of(parse_game("grg 1\nvertex 0 E 0,x\n").unwrap_err()),
            2
        );
        assert!(matches!(
            parse_game("grg 1\nvertex 1 E 1\nstart 1\n").unwrap_err(),
            Error::Invalid(_)
        ));
        assert!(matches!(
            parse_game("grg 1\nvertex 0 E 0\n").unwrap_err(),
            Error::Invalid(_)
        ));
    }

    #[test]
    fn serialize_round_trips_fig1() {
        let g = fig1();
        assert_eq!(parse_game(&serialize_game(&g)).unwrap(), g);
        let labels: Vec<String> = ["s", "u", "u1", "u2", "u3", "u4", "v"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let text = serialize_with_labels(&g, &labels);
        assert_eq!(parse_game(&text).unwrap(), g);
        assert_eq!(parse_labels(&text)[3].as_deref(), Some("u2"));
    }
}
