//! Seeded generators for test corpora.
//!
//! Every generator draws from [`GraphRng`], a ChaCha8 stream seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. Draws are consumed in a fixed order so
//! a `(arguments, seed)` pair always names the same graph:
//!
//! * a *coin* with probability `p` is one `f64` in `[0, 1)` (53-bit), true
//!   when it is `< p`;
//! * pairs `{u, v}` are visited in lexicographic order `(0,1), (0,2), ...`;
//! * an included pair spends one coin on "oriented?" and, if oriented, one
//!   fair coin on the direction (`< 0.5` means `u -> v`).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EdgeRef, MixedGraph, Orientation};

/// Deterministic generator behind every random graph.
#[derive(Debug, Clone)]
pub struct GraphRng(ChaCha8Rng);

impl GraphRng {
    pub fn new(seed: u64) -> Self {
        GraphRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.0.gen::<f64>() < p
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        self.0.gen_range(0..bound)
    }

    fn orientation(&mut self, p_orient: f64) -> Orientation {
        if !self.coin(p_orient) {
            Orientation::Undirected
        } else if self.coin(0.5) {
            Orientation::Forward
        } else {
            Orientation::Backward
        }
    }
}

/// Erdős–Rényi style mixed graph: each pair is present with probability
/// `p_edge`, and each present pair is an arc with probability `p_orient`.
///
/// # Panics
///
/// If `n == 0`.
pub fn random_mixed(n: usize, p_edge: f64, p_orient: f64, seed: u64) -> MixedGraph {
    let mut rng = GraphRng::new(seed);
    let mut conns = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.coin(p_edge) {
                conns.push(EdgeRef {
                    u,
                    v,
                    kind: rng.orientation(p_orient),
                });
            }
        }
    }
    MixedGraph::from_connections(n, conns).expect("n >= 1")
}

/// Uniform random labelled tree (Prüfer decode) with each edge oriented as
/// in [`random_mixed`].
///
/// The `n - 2` Prüfer entries are drawn first, then the orientation coins
/// for the tree edges in sorted pair order.
pub fn random_mixed_tree(n: usize, p_orient: f64, seed: u64) -> MixedGraph {
    let mut rng = GraphRng::new(seed);
    let prufer: Vec<usize> = if n >= 2 {
        (0..n - 2).map(|_| rng.below(n)).collect()
    } else {
        Vec::new()
    };
    let mut pairs = prufer_decode(n, &prufer);
    pairs.sort_unstable();
    let conns: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| EdgeRef {
            u,
            v,
            kind: rng.orientation(p_orient),
        })
        .collect();
    MixedGraph::from_connections(n, conns).expect("n >= 1")
}

/// Tree edges `(min, max)` encoded by a Prüfer sequence over `0..n`.
fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves
            .pop()
            .expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a.min(b), a.max(b)));
    edges
}

/// Re-orients every connection of `graph` independently (the underlying
/// graph is kept). Connections are visited in sorted pair order.
pub fn random_orientation(graph: &MixedGraph, p_orient: f64, seed: u64) -> MixedGraph {
    let mut rng = GraphRng::new(seed);
    let conns: Vec<_> = graph
        .connections()
        .map(|c| EdgeRef {
            kind: rng.orientation(p_orient),
            ..c
        })
        .collect();
    MixedGraph::from_connections(graph.vertex_count(), conns).expect("same pairs")
}

/// A random mixed graph in which every cycle is positive.
///
/// Each vertex first draws a phase `t(v)` in `Z/4`. Pairs are then visited
/// in order; a pair that survives its `p_edge` coin becomes an edge when
/// `t(v) - t(u) = 0`, the arc `u -> v` when it is `1`, the arc `v -> u` when
/// it is `3`, and is dropped when it is `2`. Summing phase differences around
/// any cycle telescopes to zero, so forward minus backward arcs is a
/// multiple of four on every cycle.
pub fn random_positive_mixed(n: usize, p_edge: f64, seed: u64) -> MixedGraph {
    let mut rng = GraphRng::new(seed);
    let phase: Vec<usize> = (0..n).map(|_| rng.below(4)).collect();
    let mut conns = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !rng.coin(p_edge) {
                continue;
            }
            let kind = match (phase[v] + 4 - phase[u]) % 4 {
                0 => Orientation::Undirected,
                1 => Orientation::Forward,
                3 => Orientation::Backward,
                _ => continue,
            };
            conns.push(EdgeRef { u, v, kind });
        }
    }
    MixedGraph::from_connections(n, conns).expect("n >= 1")
}

/// Every mixed graph on `n` labelled vertices: each of the `n(n-1)/2` pairs
/// takes one of four states (absent, edge, arc either way), `4^(n(n-1)/2)`
/// graphs in all.
pub fn exhaustive(n: usize) -> impl Iterator<Item = MixedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << (2 * pairs.len());
    (0..total).map(move |mut code| {
        let mut conns = Vec::new();
        for &(u, v) in &pairs {
            let kind = match code & 3 {
                0 => None,
                1 => Some(Orientation::Undirected),
                2 => Some(Orientation::Forward),
                _ => Some(Orientation::Backward),
            };
            code >>= 2;
            if let Some(kind) = kind {
                conns.push(EdgeRef { u, v, kind });
            }
        }
        MixedGraph::from_connections(n, conns).expect("n >= 1")
    })
}
