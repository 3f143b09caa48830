//! Exact characteristic polynomial of `R_H(M)` by enumerating real
//! elementary subgraphs.
//!
//! An elementary subgraph is a set of vertex-disjoint components, each a
//! single connection (edge or arc) or a cycle of length at least three. For
//! a cycle traversed once, let `f` and `b` count arcs met forwards and
//! backwards; its value carries the phase `i^(f - b)`. The cycle is *real*
//! when `f - b` is even, positive when `f - b = 0 (mod 4)` and negative when
//! `f - b = 2 (mod 4)`.
//!
//! With `r = k - c` (order minus component count), `l` negative cycles, `s`
//! cycles and `W` the product of `1 / d(v)` over covered vertices,
//!
//! ```text
//! (-1)^k a_k = sum over real elementary subgraphs of order k of (-1)^(r + l) 2^s W
//! ```
//!
//! Imaginary cycles cancel in pairs and never appear. Everything here is
//! exact: no square root is ever taken.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{MixedGraph, Orientation};

/// Largest vertex count the enumeration accepts by default.
pub const DEFAULT_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementaryError {
    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("order {k} is larger than the vertex count {n}")]
    OrderOutOfRange { k: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CyclePhase {
    Positive,
    Negative,
    Imaginary,
}

/// Phase class of a cycle given as a vertex sequence (closing connection
/// implied). Traversal direction and starting vertex do not matter.
pub fn cycle_sign(graph: &MixedGraph, cycle: &[usize]) -> Result<CyclePhase, ElementaryError> {
    let n = graph.vertex_count();
    if cycle.len() < 3 {
        return Err(ElementaryError::NotACycle(format!(
            "length {} is below 3",
            cycle.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n {
            return Err(ElementaryError::NotACycle(format!(
                "vertex {v} out of range"
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(ElementaryError::NotACycle(format!("vertex {v} repeats")));
        }
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !graph.are_adjacent(a, b) {
            return Err(ElementaryError::NotACycle(format!(
                "{a} and {b} are not adjacent"
            )));
        }
    }
    Ok(phase_of(graph, cycle))
}

fn phase_of(graph: &MixedGraph, cycle: &[usize]) -> CyclePhase {
    let mut net: i64 = 0;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        match graph
            .connection(a, b)
            .expect("consecutive cycle vertices")
            .kind
        {
            Orientation::Undirected => {}
            Orientation::Forward => net += 1,
            Orientation::Backward => net -= 1,
        }
    }
    match net.rem_euclid(4) {
        0 => CyclePhase::Positive,
        2 => CyclePhase::Negative,
        _ => CyclePhase::Imaginary,
    }
}

/// One component of an elementary subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Component {
    /// An edge or an arc; both contribute `1 / (d_u d_v)` with sign `+`.
    Connection(usize, usize),
    /// A real cycle, smallest vertex first, second vertex smaller than the
    /// last.
    Cycle {
        vertices: Vec<usize>,
        negative: bool,
    },
}

impl Component {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Component::Connection(u, v) => vec![*u, *v],
            Component::Cycle { vertices, .. } => vertices.clone(),
        }
    }
}

/// Which per-vertex weight the enumeration multiplies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Weighting {
    /// `1 / d(v)`: coefficients of `R_H(M)`.
    #[default]
    Randic,
    /// `1`: coefficients of `H(M)`.
    Unit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementarySubgraph {
    pub components: Vec<Component>,
    /// Number of covered vertices, `k`.
    pub order: usize,
    /// `c`.
    pub component_count: usize,
    /// `r = k - c`.
    pub rank: usize,
    /// `l`.
    pub negative_cycles: usize,
    /// `s`.
    pub long_cycles: usize,
    /// `W`.
    pub weight: BigRational,
}

impl ElementarySubgraph {
    /// `(-1)^(r + l) 2^s W`.
    pub fn term(&self) -> BigRational {
        signed_term(
            self.rank + self.negative_cycles,
            self.long_cycles,
            self.weight.clone(),
        )
    }
}

fn signed_term(parity: usize, cycles: usize, weight: BigRational) -> BigRational {
    let magnitude = weight * BigRational::from_integer(BigInt::one() << cycles);
    if parity.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

/// Depth-first enumerator. The lowest undecided vertex is either left out,
/// paired with an undecided neighbour, or closed into a cycle whose other
/// vertices are all undecided (hence larger). Each elementary subgraph is
/// reached along exactly one branch.
struct Walker<'a> {
    graph: &'a MixedGraph,
    adj: Vec<Vec<usize>>,
    target: Option<usize>,
    decided: Vec<bool>,
    undecided: usize,
    covered: Vec<usize>,
    components: Vec<Component>,
    negative: usize,
    cycles: usize,
}

impl<'a> Walker<'a> {
    fn new(graph: &'a MixedGraph, target: Option<usize>) -> Self {
        let n = graph.vertex_count();
        Walker {
            graph,
            adj: graph.adjacency(),
            target,
            decided: vec![false; n],
            undecided: n,
            covered: Vec::with_capacity(n),
            components: Vec::new(),
            negative: 0,
            cycles: 0,
        }
    }

    /// Room left before hitting the target order.
    fn room(&self) -> usize {
        match self.target {
            Some(k) => k - self.covered.len(),
            None => usize::MAX,
        }
    }

    fn walk(&mut self, from: usize, visit: &mut dyn FnMut(&Walker<'_>)) {
        if let Some(k) = self.target {
            if self.covered.len() + self.undecided < k {
                return;
            }
        }
        let Some(v) = (from..self.decided.len()).find(|&v| !self.decided[v]) else {
            if self.target.is_none_or(|k| self.covered.len() == k) {
                visit(self);
            }
            return;
        };

        // leave v out
        self.decided[v] = true;
        self.undecided -= 1;
        self.walk(v + 1, visit);

        if self.room() >= 2 {
            self.covered.push(v);
            for i in 0..self.adj[v].len() {
                let w = self.adj[v][i];
                if self.decided[w] {
                    continue;
                }
                self.decided[w] = true;
                self.undecided -= 1;
                self.covered.push(w);
                self.components.push(Component::Connection(v, w));
                self.walk(v + 1, visit);
                self.components.pop();
                self.covered.pop();
                self.undecided += 1;
                self.decided[w] = false;
            }

            if self.room() >= 2 {
                // v is already in `covered`; a cycle needs two more vertices at least
                let mut path = vec![v];
                self.extend_cycles(&mut path, visit);
            }
            self.covered.pop();
        }

        self.undecided += 1;
        self.decided[v] = false;
    }

    fn extend_cycles(&mut self, path: &mut Vec<usize>, visit: &mut dyn FnMut(&Walker<'_>)) {
        let start = path[0];
        let last = *path.last().unwrap();
        // `covered` already counts `start`; path[1..] are added as we go
        for i in 0..self.adj[last].len() {
            let w = self.adj[last][i];
            if self.decided[w] {
                continue;
            }
            if self.room() < 1 {
                break;
            }
            self.decided[w] = true;
            self.undecided -= 1;
            self.covered.push(w);
            path.push(w);

            if path.len() >= 3 && path[1] < w && self.graph.are_adjacent(w, start) {
                match phase_of(self.graph, path) {
                    CyclePhase::Imaginary => {}
                    phase => {
                        let negative = phase == CyclePhase::Negative;
                        self.negative += usize::from(negative);
                        self.cycles += 1;
                        self.components.push(Component::Cycle {
                            vertices: path.clone(),
                            negative,
                        });
                        self.walk(start + 1, visit);
                        self.components.pop();
                        self.cycles -= 1;
                        self.negative -= usize::from(negative);
                    }
                }
            }
            self.extend_cycles(path, visit);

            path.pop();
            self.covered.pop();
            self.undecided += 1;
            self.decided[w] = false;
        }
    }

    fn parity(&self) -> usize {
        let rank = self.covered.len() - self.components.len();
        rank + self.negative
    }

    fn weight(&self, degrees: &[usize], weighting: Weighting) -> BigRational {
        match weighting {
            Weighting::Unit => BigRational::one(),
            Weighting::Randic => {
                let denom = self
                    .covered
                    .iter()
                    .fold(BigInt::one(), |acc, &v| acc * BigInt::from(degrees[v]));
                BigRational::new(BigInt::one(), denom)
            }
        }
    }

    fn snapshot(&self, degrees: &[usize], weighting: Weighting) -> ElementarySubgraph {
        let order = self.covered.len();
        let component_count = self.components.len();
        ElementarySubgraph {
            components: self.components.clone(),
            order,
            component_count,
            rank: order - component_count,
            negative_cycles: self.negative,
            long_cycles: self.cycles,
            weight: self.weight(degrees, weighting),
        }
    }
}

fn check_cap(graph: &MixedGraph, cap: usize) -> Result<(), ElementaryError> {
    let n = graph.vertex_count();
    if n > cap {
        Err(ElementaryError::TooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Calls `visit` once for every real elementary subgraph of order `k`
/// (`None`: every order), with `W` from `weighting`.
pub fn for_each_real_elementary(
    graph: &MixedGraph,
    k: Option<usize>,
    weighting: Weighting,
    mut visit: impl FnMut(ElementarySubgraph),
) -> Result<(), ElementaryError> {
    let n = graph.vertex_count();
    if let Some(k) = k {
        if k > n {
            return Err(ElementaryError::OrderOutOfRange { k, n });
        }
    }
    let degrees = graph.degrees();
    let mut walker = Walker::new(graph, k);
    walker.walk(0, &mut |w| visit(w.snapshot(&degrees, weighting)));
    Ok(())
}

/// Every real elementary subgraph of order `k`, with Randić weights.
pub fn enumerate_real_elementary(
    graph: &MixedGraph,
    k: usize,
) -> Result<Vec<ElementarySubgraph>, ElementaryError> {
    let mut out = Vec::new();
    for_each_real_elementary(graph, Some(k), Weighting::Randic, |s| out.push(s))?;
    Ok(out)
}

/// Exact coefficients `a_1..a_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactCharPoly {
    pub coefficients: Vec<BigRational>,
}

impl ExactCharPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coefficients
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// `(-1)^n a_n`.
    pub fn determinant(&self) -> BigRational {
        match self.coefficients.last() {
            None => BigRational::one(),
            Some(an) if self.degree().is_multiple_of(2) => an.clone(),
            Some(an) => -an.clone(),
        }
    }

    /// Whether `a_1, a_3, a_5, ...` are all exactly zero.
    pub fn odd_coefficients_vanish(&self) -> bool {
        self.coefficients.iter().step_by(2).all(Zero::is_zero)
    }

    /// Largest `|a_k - other_k|` against float coefficients.
    pub fn max_deviation(&self, other: &[f64]) -> f64 {
        if other.len() != self.degree() {
            return f64::INFINITY;
        }
        self.to_f64()
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for ExactCharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "a{} = {}", i + 1, c)?;
        }
        Ok(())
    }
}

/// Characteristic polynomial of `R_H(M)`, exactly. Fails above
/// [`DEFAULT_CAP`] vertices.
pub fn charpoly_exact(graph: &MixedGraph) -> Result<ExactCharPoly, ElementaryError> {
    charpoly_exact_with(graph, Weighting::Randic, DEFAULT_CAP)
}

pub fn charpoly_exact_with(
    graph: &MixedGraph,
    weighting: Weighting,
    cap: usize,
) -> Result<ExactCharPoly, ElementaryError> {
    check_cap(graph, cap)?;
    let n = graph.vertex_count();
    let degrees = graph.degrees();
    let mut sums = vec![BigRational::zero(); n + 1];
    let mut walker = Walker::new(graph, None);
    walker.walk(0, &mut |w| {
        let k = w.covered.len();
        if k > 0 {
            sums[k] += signed_term(w.parity(), w.cycles, w.weight(&degrees, weighting));
        }
    });
    let coefficients = sums
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, s)| if k % 2 == 0 { s } else { -s })
        .collect();
    Ok(ExactCharPoly { coefficients })
}

/// `det R_H(M)` as a sum over real spanning elementary subgraphs.
pub fn det_exact(graph: &MixedGraph) -> Result<BigRational, ElementaryError> {
    det_exact_with(graph, Weighting::Randic, DEFAULT_CAP)
}

/// `det H(M)`, the same enumeration with unit weights.
pub fn det_exact_adjacency(graph: &MixedGraph) -> Result<BigRational, ElementaryError> {
    det_exact_with(graph, Weighting::Unit, DEFAULT_CAP)
}

pub fn det_exact_with(
    graph: &MixedGraph,
    weighting: Weighting,
    cap: usize,
) -> Result<BigRational, ElementaryError> {
    check_cap(graph, cap)?;
    let degrees = graph.degrees();
    let mut total = BigRational::zero();
    let mut walker = Walker::new(graph, Some(graph.vertex_count()));
    walker.walk(0, &mut |w| {
        total += signed_term(w.parity(), w.cycles, w.weight(&degrees, weighting));
    });
    Ok(total)
}

/// Whether every cycle of the graph is positive.
///
/// Every cycle has `f - b = 0 (mod 4)` exactly when the vertices admit phases
/// `t(v)` in `Z/4` with `t(head) = t(tail) + 1` on arcs and equal phases
/// across edges; a breadth-first pass either finds such phases or meets a
/// contradiction. Forests are always positive.
pub fn is_positive_mixed(graph: &MixedGraph) -> bool {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut phase: Vec<Option<u8>> = vec![None; n];
    for root in 0..n {
        if phase[root].is_some() {
            continue;
        }
        phase[root] = Some(0);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let pu = phase[u].unwrap();
            for &w in &adj[u] {
                let step = match graph.connection(u, w).unwrap().kind {
                    Orientation::Undirected => 0,
                    Orientation::Forward => 1,
                    Orientation::Backward => 3,
                };
                let want = (pu + step) % 4;
                match phase[w] {
                    None => {
                        phase[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(pw) if pw != want => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
