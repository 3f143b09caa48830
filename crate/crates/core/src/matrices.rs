//! Hermitian adjacency and Hermitian-Randić matrices of a mixed graph.
//!
//! For a connection between `k` and `l` the adjacency entry `(k, l)` is `1`
//! for an undirected edge, `i` for an arc `k -> l` and `-i` for an arc
//! `l -> k`. The Randić version scales that entry by `1 / sqrt(d_k d_l)`,
//! with degrees taken in the underlying graph.

use num_complex::Complex64;
use thiserror::Error;

use crate::graph::{MixedGraph, Orientation};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("entry ({0}, {1}) is not the conjugate of ({1}, {0})")]
    NotHermitian(usize, usize),
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("entry ({0}, {1}) is not finite")]
    NotFinite(usize, usize),
}

/// Dense `n x n` complex matrix equal to its conjugate transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        HermitianMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    /// Row-major entries; rejected unless exactly Hermitian and finite.
    pub fn from_row_major(n: usize, data: Vec<Complex64>) -> Result<Self, MatrixError> {
        if data.len() != n * n {
            return Err(MatrixError::Shape {
                expected: n * n,
                got: data.len(),
            });
        }
        for k in 0..n {
            for l in 0..n {
                let z = data[k * n + l];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(MatrixError::NotFinite(k, l));
                }
                if z != data[l * n + k].conj() {
                    return Err(MatrixError::NotHermitian(k, l));
                }
            }
        }
        Ok(HermitianMatrix { n, data })
    }

    /// Real symmetric matrix given row-major.
    pub fn from_real(n: usize, data: &[f64]) -> Result<Self, MatrixError> {
        Self::from_row_major(n, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Puts `value` at `(k, l)` and its conjugate at `(l, k)`.
    fn set_pair(&mut self, k: usize, l: usize, value: Complex64) {
        self.data[k * self.n + l] = value;
        self.data[l * self.n + k] = value.conj();
    }

    fn from_graph(graph: &MixedGraph, weight: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = HermitianMatrix::zeros(graph.vertex_count());
        for c in graph.connections() {
            let w = weight(c.u, c.v);
            let z = match c.kind {
                Orientation::Undirected => Complex64::new(w, 0.0),
                Orientation::Forward => Complex64::new(0.0, w),
                Orientation::Backward => Complex64::new(0.0, -w),
            };
            m.set_pair(c.u, c.v, z);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, l: usize) -> Complex64 {
        self.data[k * self.n + l]
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|k| self.get(k, k).re).sum()
    }

    /// `self * self`, which is again Hermitian.
    pub fn square(&self) -> HermitianMatrix {
        let mut data = mul(&self.data, &self.data, self.n);
        // enforce exact symmetry of the product
        for k in 0..self.n {
            data[k * self.n + k].im = 0.0;
            for l in k + 1..self.n {
                data[l * self.n + k] = data[k * self.n + l].conj();
            }
        }
        HermitianMatrix { n: self.n, data }
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|k| (0..self.n).all(|l| self.get(k, l) == self.get(l, k).conj()))
    }

    /// The `2n x 2n` real symmetric matrix `[[X, -Y], [Y, X]]` for
    /// `self = X + iY`, row-major. Its spectrum is this matrix's spectrum
    /// with every eigenvalue doubled.
    pub fn real_embedding(&self) -> Vec<f64> {
        let n = self.n;
        let m = 2 * n;
        let mut out = vec![0.0; m * m];
        for k in 0..n {
            for l in 0..n {
                let z = self.get(k, l);
                out[k * m + l] = z.re;
                out[k * m + n + l] = -z.im;
                out[(n + k) * m + l] = z.im;
                out[(n + k) * m + n + l] = z.re;
            }
        }
        out
    }
}

/// Row-major product of two `n x n` complex matrices.
pub(crate) fn mul(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// `H(M)`.
pub fn hermitian_adjacency(graph: &MixedGraph) -> HermitianMatrix {
    HermitianMatrix::from_graph(graph, |_, _| 1.0)
}

/// `R_H(M)`. Isolated vertices give zero rows.
pub fn hermitian_randic(graph: &MixedGraph) -> HermitianMatrix {
    let d = graph.degrees();
    HermitianMatrix::from_graph(graph, |u, v| 1.0 / ((d.get(u) * d.get(v)) as f64).sqrt())
}

/// The diagonal of `D^{-1/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Normalizer(Vec<f64>);

impl Normalizer {
    pub fn diagonal(&self) -> &[f64] {
        &self.0
    }

    /// `D^{-1/2} A D^{-1/2}`.
    pub fn conjugate(&self, a: &HermitianMatrix) -> HermitianMatrix {
        let n = a.dim();
        assert_eq!(n, self.0.len(), "dimension mismatch");
        let mut out = a.clone();
        for k in 0..n {
            for l in 0..n {
                out.data[k * n + l] *= self.0[k] * self.0[l];
            }
        }
        out
    }
}

pub fn normalizer(graph: &MixedGraph) -> Result<Normalizer, MatrixError> {
    let d = graph.degrees();
    if let Some(v) = d.isolated().next() {
        return Err(MatrixError::IsolatedVertex(v));
    }
    Ok(Normalizer(
        d.iter().map(|&x| 1.0 / (x as f64).sqrt()).collect(),
    ))
}

/// General Randić index of the underlying graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandicIndexValue {
    pub alpha: f64,
    pub value: f64,
}

/// `sum over edges uv of (d_u d_v)^alpha`, on the underlying graph.
pub fn general_randic_index(graph: &MixedGraph, alpha: f64) -> RandicIndexValue {
    let d = graph.degrees();
    let value = graph
        .connections()
        .map(|c| ((d.get(c.u) * d.get(c.v)) as f64).powf(alpha))
        .sum();
    RandicIndexValue { alpha, value }
}

/// `R_{-1}` of the underlying graph, which equals half of `trace(R_H^2)`.
pub fn randic_minus_one(graph: &MixedGraph) -> f64 {
    let d = graph.degrees();
    graph
        .connections()
        .map(|c| 1.0 / (d.get(c.u) * d.get(c.v)) as f64)
        .sum()
}
