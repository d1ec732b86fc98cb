//! Strongly connected components and the condensation DAG.

use crate::arena::Arena;

/// The SCC decomposition of an arena.
///
/// `components` is in reverse topological order: every DAG edge goes from a
/// later component index to an earlier one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDag {
    pub component_of: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    /// Deduplicated, sorted successor components of each component.
    pub dag_edges: Vec<Vec<usize>>,
}

impl SccDag {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// True when the component carries at least one edge, i.e. a play can stay in it.
    pub fn is_cyclic(&self, arena: &Arena, c: usize) -> bool {
        let comp = &self.components[c];
        comp.len() > 1 || arena.has_edge(comp[0], comp[0])
    }
}

/// Tarjan's algorithm, iterative. Components come out sinks first.
pub fn tarjan<F, I>(n: usize, mut successors: F) -> Vec<Vec<usize>>
where
    F: FnMut(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next_index = 0;
    // (vertex, its successors, position of the next successor to visit)
    let mut frames: Vec<(usize, Vec<usize>, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, successors(root).into_iter().collect(), 0));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let w = frame.1[frame.2];
                frame.2 += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, successors(w).into_iter().collect(), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(parent) = frames.last() {
                let p = parent.0;
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components
}

/// Builds the condensation of a graph given as successor lists.
pub fn condense<F, I>(n: usize, mut successors: F) -> SccDag
where
    F: FnMut(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let components = tarjan(n, &mut successors);
    let mut component_of = vec![0; n];
    for (c, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v] = c;
        }
    }
    let mut dag_edges = vec![Vec::new(); components.len()];
    for (c, comp) in components.iter().enumerate() {
        let edges = &mut dag_edges[c];
        for &v in comp {
            for w in successors(v) {
                let d = component_of[w];
                if d != c {
                    edges.push(d);
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
    }
    SccDag {
        component_of,
        components,
        dag_edges,
    }
}

/// SCC decomposition of an arena.
pub fn scc_decompose(arena: &Arena) -> SccDag {
    condense(arena.vertex_count(), |v| {
        arena.successors(v).iter().copied()
    })
}
