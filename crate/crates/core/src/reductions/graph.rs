use serde::{Deserialize, Serialize};

use crate::arena::{Arena, GameSpec, Player};
use crate::error::{syntax, Error, Result};

use super::ReductionMeta;

/// A graph on vertices `0..vertices`. Whether an edge is directed is up to
/// the construction reading it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::Invalid(format!(
                "edge ({u}, {v}) outside 0..{vertices}"
            )));
        }
        Ok(Graph { vertices, edges })
    }

    /// Undirected edges as sorted pairs, sorted and deduplicated.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}

/// Parses `p edge <n> <m>` followed by `e <u> <v>` lines with 1-based vertices.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| syntax(line, format!("bad number `{s}`")))
        };
        match fields.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["p", "edge", n, m] => {
                if vertices.is_some() {
                    return Err(syntax(line, "second problem line"));
                }
                vertices = Some(num(n)?);
                edges.reserve(num(m)?);
            }
            ["e", u, v] => {
                let n = vertices.ok_or_else(|| syntax(line, "edge before `p edge` line"))?;
                let (u, v) = (num(u)?, num(v)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(syntax(line, format!("vertex outside 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(syntax(
                    line,
                    "expected `p edge <n> <m>`, `e <u> <v>` or a `c` comment",
                ))
            }
        }
    }
    let n = vertices.ok_or_else(|| syntax(text.lines().count().max(1), "missing `p edge` line"))?;
    Graph::new(n, edges)
}

/// The layered all-Adam game for s-t reachability in a digraph.
///
/// Copy `(u, i)` for `i` in `1..=n+1` has id `(i - 1)·n + u`; `⊤` is
/// `n(n+1)` and `⊥` is `n(n+1) + 1`. Adam wins (avoids the lone target `⊥`)
/// iff `sink` is reachable from `source`.
pub fn streach_to_game(h: &Graph, source: usize, sink: usize) -> Result<(GameSpec, ReductionMeta)> {
    let n = h.vertices;
    if source >= n || sink >= n {
        return Err(Error::Invalid(format!("source or sink outside 0..{n}")));
    }
    let top = n * (n + 1);
    let bottom = top + 1;
    let id = |u: usize, i: usize| (i - 1) * n + u;
    let mut succ = vec![Vec::new(); bottom + 1];
    let mut labels = Vec::with_capacity(bottom + 1);
    for i in 1..=n + 1 {
        for u in 0..n {
            labels.push(format!("({},{i})", u + 1));
        }
    }
    labels.push("top".into());
    labels.push("bottom".into());
    for i in 1..=n {
        for &(u, v) in &h.edges {
            succ[id(u, i)].push(id(v, i + 1));
        }
    }
    for i in 1..=n + 1 {
        for u in 0..n {
            succ[id(u, i)].push(if u == sink { top } else { bottom });
        }
    }
    succ[top].push(top);
    succ[bottom].push(bottom);
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }
    let arena = Arena::new(vec![Player::Adam; bottom + 1], succ)?;
    let game = GameSpec::new(arena, id(source, 1), vec![bottom], vec![])?;
    let meta = ReductionMeta {
        labels,
        expected_vertices: n * (n + 1) + 2,
    };
    Ok((game, meta))
}

/// Eve picks edges, Adam answers with an endpoint; each graph vertex is a
/// singleton target. The game value is the size of a minimum vertex cover.
///
/// Vertex `v` of the graph is game vertex `v`; edge `j` (in sorted order) is
/// game vertex `n + j`, and the play starts at the first edge.
pub fn vertex_cover_to_game(g: &Graph) -> Result<(GameSpec, ReductionMeta)> {
    let edges = g.undirected_edges();
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.vertices;
    let edge_ids: Vec<usize> = (n..n + edges.len()).collect();
    let mut owner = vec![Player::Eve; n];
    owner.extend(std::iter::repeat(Player::Adam).take(edges.len()));
    let mut succ = vec![edge_ids; n];
    let mut labels: Vec<String> = (1..=n).map(|v| format!("v{v}")).collect();
    for &(u, v) in &edges {
        succ.push(if u == v { vec![u] } else { vec![u, v] });
        labels.push(format!("e{}-{}", u + 1, v + 1));
    }
    let arena = Arena::new(owner, succ)?;
    let game = GameSpec::new(arena, n, (0..n).collect(), vec![])?;
    let meta = ReductionMeta {
        labels,
        expected_vertices: n + edges.len(),
    };
    Ok((game, meta))
}
