//! Mixed graphs: a vertex count plus disjoint sets of undirected edges and
//! arcs.
//!
//! Vertices are `0..n`. Every unordered pair of vertices carries at most one
//! connection, which is either an undirected edge or an arc in one of the two
//! directions. The underlying undirected graph (every arc forgotten down to an
//! edge) decides degrees, components and every other structural question.

mod random;
mod structure;
mod transform;

pub use random::{
    exhaustive, random_mixed, random_mixed_tree, random_orientation, random_positive_mixed,
    GraphRng,
};
pub use structure::{cut_edges, structure, Structure};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Errors raised while building or transforming a [`MixedGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("more than one connection between {0} and {1}")]
    DuplicateConnection(usize, usize),
    #[error("pair ({0}, {1}) is out of range for {2} vertices")]
    IndexOutOfRange(usize, usize, usize),
    #[error("vertex {0} is out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("vertices {0} and {1} are not connected")]
    NotConnected(usize, usize),
}

/// How a connection between `u` and `v` is oriented, relative to the pair
/// it is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Undirected,
    /// Arc `u -> v`.
    Forward,
    /// Arc `v -> u`.
    Backward,
}

impl Orientation {
    pub const ALL: [Orientation; 3] = [
        Orientation::Undirected,
        Orientation::Forward,
        Orientation::Backward,
    ];

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Undirected => Orientation::Undirected,
            Orientation::Forward => Orientation::Backward,
            Orientation::Backward => Orientation::Forward,
        }
    }

    pub fn is_arc(self) -> bool {
        self != Orientation::Undirected
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Undirected => "undirected",
            Orientation::Forward => "forward",
            Orientation::Backward => "backward",
        })
    }
}

impl std::str::FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "undirected" | "u" | "edge" => Ok(Orientation::Undirected),
            "forward" | "f" => Ok(Orientation::Forward),
            "backward" | "b" => Ok(Orientation::Backward),
            other => Err(format!(
                "unknown orientation `{other}` (expected undirected, forward or backward)"
            )),
        }
    }
}

/// One connection of a mixed graph, seen from the pair `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
    pub kind: Orientation,
}

impl EdgeRef {
    /// The same connection described from the other endpoint.
    pub fn flipped(self) -> Self {
        EdgeRef {
            u: self.v,
            v: self.u,
            kind: self.kind.reversed(),
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Orientation::Undirected => write!(f, "{}--{}", self.u, self.v),
            Orientation::Forward => write!(f, "{}->{}", self.u, self.v),
            Orientation::Backward => write!(f, "{}<-{}", self.u, self.v),
        }
    }
}

/// Degrees in the underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn isolated(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::ops::Deref for DegreeVector {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// A simple mixed graph.
///
/// Connections are stored once per unordered pair, keyed by `(min, max)`,
/// with the orientation expressed relative to that key. This makes the "one
/// connection per pair" rule structural rather than checked after the fact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    connections: BTreeMap<(usize, usize), Orientation>,
}

impl MixedGraph {
    /// Builds a graph from undirected `edges` and directed `arcs` (`(u, v)`
    /// meaning `u -> v`).
    pub fn build(
        n: usize,
        edges: &[(usize, usize)],
        arcs: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut graph = MixedGraph::edgeless(n)?;
        for &(u, v) in edges {
            graph.insert(EdgeRef {
                u,
                v,
                kind: Orientation::Undirected,
            })?;
        }
        for &(u, v) in arcs {
            graph.insert(EdgeRef {
                u,
                v,
                kind: Orientation::Forward,
            })?;
        }
        Ok(graph)
    }

    /// `n` vertices and nothing else.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(MixedGraph {
            n,
            connections: BTreeMap::new(),
        })
    }

    /// Builds a graph from connection descriptors.
    pub fn from_connections(
        n: usize,
        connections: impl IntoIterator<Item = EdgeRef>,
    ) -> Result<Self, GraphError> {
        let mut graph = MixedGraph::edgeless(n)?;
        for c in connections {
            graph.insert(c)?;
        }
        Ok(graph)
    }

    fn insert(&mut self, c: EdgeRef) -> Result<(), GraphError> {
        if c.u >= self.n || c.v >= self.n {
            return Err(GraphError::IndexOutOfRange(c.u, c.v, self.n));
        }
        if c.u == c.v {
            return Err(GraphError::LoopEdge(c.u));
        }
        let c = if c.u < c.v { c } else { c.flipped() };
        if self.connections.insert((c.u, c.v), c.kind).is_some() {
            return Err(GraphError::DuplicateConnection(c.u, c.v));
        }
        Ok(())
    }

    /// Complete undirected graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        MixedGraph::build(n, &edges, &[])
    }

    /// Undirected cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        MixedGraph::build(n, &edges, &[])
    }

    /// Undirected path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        MixedGraph::build(n, &edges, &[])
    }

    /// `n / 2` disjoint undirected edges `{0,1}, {2,3}, ...`; `n` must be even.
    pub fn perfect_matching(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        MixedGraph::build(n, &edges, &[])
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        MixedGraph::build(10, &edges, &[]).expect("petersen graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of connections (edges plus arcs).
    pub fn connection_count(&self) -> usize {
        self.connections.len()
    }

    /// Undirected edges as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.connections
            .iter()
            .filter(|(_, &o)| o == Orientation::Undirected)
            .map(|(&p, _)| p)
    }

    /// Arcs as `(tail, head)` pairs, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<_> = self
            .connections
            .iter()
            .filter_map(|(&(u, v), &o)| match o {
                Orientation::Undirected => None,
                Orientation::Forward => Some((u, v)),
                Orientation::Backward => Some((v, u)),
            })
            .collect();
        arcs.sort_unstable();
        arcs
    }

    /// All connections with `u < v`, sorted by pair.
    pub fn connections(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.connections
            .iter()
            .map(|(&(u, v), &kind)| EdgeRef { u, v, kind })
    }

    /// The connection between `u` and `v`, described from `u`.
    pub fn connection(&self, u: usize, v: usize) -> Option<EdgeRef> {
        let key = (u.min(v), u.max(v));
        let kind = *self.connections.get(&key)?;
        let c = EdgeRef {
            u: key.0,
            v: key.1,
            kind,
        };
        Some(if u <= v { c } else { c.flipped() })
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.connections.contains_key(&(u.min(v), u.max(v)))
    }

    /// Neighbour lists of the underlying graph, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.connections.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> DegreeVector {
        let mut d = vec![0; self.n];
        for &(u, v) in self.connections.keys() {
            d[u] += 1;
            d[v] += 1;
        }
        DegreeVector(d)
    }

    pub fn has_arcs(&self) -> bool {
        self.connections.values().any(|o| o.is_arc())
    }

    /// The underlying undirected graph.
    pub fn underlying(&self) -> MixedGraph {
        MixedGraph {
            n: self.n,
            connections: self
                .connections
                .keys()
                .map(|&p| (p, Orientation::Undirected))
                .collect(),
        }
    }

    /// Re-checks every structural invariant. Always `Ok` for values built
    /// through the public constructors.
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        for &(u, v) in self.connections.keys() {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if u > v || v >= self.n {
                return Err(GraphError::IndexOutOfRange(u, v, self.n));
            }
        }
        Ok(())
    }
}
