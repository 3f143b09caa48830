//! Structural queries on the underlying graph.

use super::{EdgeRef, MixedGraph};

/// Answers about the underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    /// Connected components, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub is_tree: bool,
    /// Two-colouring, if the underlying graph has no odd cycle. Within each
    /// component the smallest vertex lands on the first side.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub regular_degree: Option<usize>,
    pub has_isolated: bool,
}

impl Structure {
    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    /// Whether the underlying graph is a forest.
    pub fn is_forest(&self, graph: &MixedGraph) -> bool {
        graph.connection_count() + self.components.len() == graph.vertex_count()
    }
}

pub fn structure(graph: &MixedGraph) -> Structure {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut components = Vec::new();
    let mut bipartite = true;

    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        let mut component = vec![root];
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for &w in &adj[u] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        component.push(w);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }

    let bipartition = bipartite.then(|| {
        let (left, right): (Vec<usize>, Vec<usize>) =
            (0..n).partition(|&v| colour[v] == Some(false));
        (left, right)
    });

    let degrees = graph.degrees();
    let regular_degree = degrees
        .first()
        .copied()
        .filter(|&d0| degrees.iter().all(|&d| d == d0));

    Structure {
        is_tree: components.len() == 1 && graph.connection_count() + 1 == n,
        components,
        bipartition,
        regular_degree,
        has_isolated: degrees.contains(&0),
    }
}

/// Connections whose removal disconnects their endpoints in the underlying
/// graph, sorted by pair (`u < v`).
///
/// Iterative lowpoint DFS; a tree edge `parent -> child` is a bridge iff no
/// back edge from the child's subtree reaches `parent` or above.
pub fn cut_edges(graph: &MixedGraph) -> Vec<EdgeRef> {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut clock = 0;
    let mut bridges = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut next)) = stack.last_mut() {
            if let Some(&w) = adj[u].get(*next) {
                *next += 1;
                if w == parent {
                    // simple graph: exactly one connection back to the parent
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, u, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > disc[parent] {
                        bridges.push(graph.connection(parent.min(u), parent.max(u)).unwrap());
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}
