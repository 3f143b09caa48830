//! Transforms that return new graphs.

use super::{EdgeRef, GraphError, MixedGraph, Orientation};

impl MixedGraph {
    /// Replaces the connection between `u` and `v` with one of the given
    /// kind, read relative to `(u, v)`: `Forward` is the arc `u -> v`.
    pub fn reorient(
        &self,
        u: usize,
        v: usize,
        mode: Orientation,
    ) -> Result<MixedGraph, GraphError> {
        if !self.are_adjacent(u, v) {
            return Err(GraphError::NotConnected(u, v));
        }
        let mut out = self.clone();
        let kind = if u < v { mode } else { mode.reversed() };
        out.connections.insert((u.min(v), u.max(v)), kind);
        Ok(out)
    }

    /// Reverses every arc incident with `v`; undirected edges stay put.
    pub fn reverse_at_vertex(&self, v: usize) -> Result<MixedGraph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        let mut out = self.clone();
        for (&(a, b), kind) in out.connections.iter_mut() {
            if a == v || b == v {
                *kind = kind.reversed();
            }
        }
        Ok(out)
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<MixedGraph, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
            index[v] = i;
        }
        let kept = self.connections().filter_map(|c| {
            let (a, b) = (index[c.u], index[c.v]);
            (a != usize::MAX && b != usize::MAX).then_some(EdgeRef {
                u: a,
                v: b,
                kind: c.kind,
            })
        });
        MixedGraph::from_connections(vertices.len(), kept)
    }

    /// `self` followed by `other`, with `other`'s vertices shifted by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &MixedGraph) -> MixedGraph {
        let shift = self.n;
        let mut out = self.clone();
        out.n += other.n;
        for c in other.connections() {
            out.connections.insert((c.u + shift, c.v + shift), c.kind);
        }
        out
    }
}
