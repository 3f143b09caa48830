//! Spectra, energies and numeric characteristic polynomials of Hermitian
//! matrices.
//!
//! Eigenvalues come from the real symmetric embedding
//! `[[X, -Y], [Y, X]]` of `A = X + iY`: every eigenvalue of `A` appears
//! twice there, so after sorting the `2n` values we keep every second one.

pub mod eigen;

use serde::Serialize;
use thiserror::Error;

use crate::graph::MixedGraph;
use crate::matrices::{hermitian_adjacency, hermitian_randic, mul, HermitianMatrix};

pub use eigen::MAX_SWEEPS;

/// Residual allowed per eigenpair, relative to `max(1, ||A||_F)`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("eigensolver did not converge within {cap} sweeps (residual {residual:e})")]
    ConvergenceFailure { cap: usize, residual: f64 },
}

/// Eigenvalues sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Largest `||A v - mu v||` over the returned eigenpairs.
    pub max_residual: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().unwrap()
    }

    pub fn energy(&self) -> EnergyValue {
        EnergyValue(self.values.iter().map(|x| x.abs()).sum())
    }

    pub fn min_modulus(&self) -> f64 {
        self.values
            .iter()
            .map(|x| x.abs())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_modulus(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    /// Largest elementwise distance to `other`; infinite on length mismatch.
    pub fn distance(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Sum of absolute eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct EnergyValue(pub f64);

impl EnergyValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

pub fn eigenvalues(a: &HermitianMatrix) -> Result<Spectrum, SpectraError> {
    let n = a.dim();
    let m = 2 * n;
    let embedded = a.real_embedding();
    let decomposition =
        eigen::symmetric_eigen(m, &embedded).map_err(|e| SpectraError::ConvergenceFailure {
            cap: MAX_SWEEPS,
            residual: e.off_diagonal,
        })?;

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| decomposition.values[j].total_cmp(&decomposition.values[i]));

    let mut values = Vec::with_capacity(n);
    let mut max_residual: f64 = 0.0;
    for &j in order.iter().step_by(2) {
        let mu = decomposition.values[j];
        let residual = (0..m)
            .map(|i| {
                let row = &embedded[i * m..(i + 1) * m];
                let av: f64 = row
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| x * decomposition.vectors[k * m + j])
                    .sum();
                (av - mu * decomposition.vectors[i * m + j]).powi(2)
            })
            .sum::<f64>()
            .sqrt();
        max_residual = max_residual.max(residual);
        values.push(mu);
    }

    let limit = RESIDUAL_TOLERANCE * a.frobenius_norm().max(1.0);
    if max_residual > limit {
        return Err(SpectraError::ConvergenceFailure {
            cap: MAX_SWEEPS,
            residual: max_residual,
        });
    }
    Ok(Spectrum {
        values,
        max_residual,
    })
}

/// Spectrum of `R_H(M)`.
pub fn hr_spectrum(graph: &MixedGraph) -> Result<Spectrum, SpectraError> {
    eigenvalues(&hermitian_randic(graph))
}

/// Spectrum of `H(M)`.
pub fn h_spectrum(graph: &MixedGraph) -> Result<Spectrum, SpectraError> {
    eigenvalues(&hermitian_adjacency(graph))
}

/// Hermitian-Randić energy.
pub fn hr_energy(graph: &MixedGraph) -> Result<EnergyValue, SpectraError> {
    if graph.connection_count() == 0 {
        return Ok(EnergyValue(0.0));
    }
    Ok(hr_spectrum(graph)?.energy())
}

/// Hermitian (adjacency) energy.
pub fn h_energy(graph: &MixedGraph) -> Result<EnergyValue, SpectraError> {
    if graph.connection_count() == 0 {
        return Ok(EnergyValue(0.0));
    }
    Ok(h_spectrum(graph)?.energy())
}

/// `det(xI - A) = x^n + a_1 x^(n-1) + ... + a_n`, holding `a_1..a_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FloatCharPoly {
    pub coefficients: Vec<f64>,
}

impl FloatCharPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    /// `a_k` for `k` in `0..=n` (`a_0 = 1`).
    pub fn coefficient(&self, k: usize) -> f64 {
        if k == 0 {
            1.0
        } else {
            self.coefficients[k - 1]
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().fold(1.0, |acc, &a| acc * x + a)
    }

    /// `(-1)^n a_n`.
    pub fn determinant(&self) -> f64 {
        let n = self.degree();
        let an = self.coefficient(n);
        if n.is_multiple_of(2) {
            an
        } else {
            -an
        }
    }
}

/// Faddeev–LeVerrier: `M_k = A M_(k-1) + a_(k-1) I`, `a_k = -tr(A M_k) / k`.
pub fn char_poly_numeric(a: &HermitianMatrix) -> FloatCharPoly {
    let n = a.dim();
    let entries = a.as_slice();
    let mut m = vec![num_complex::Complex64::new(0.0, 0.0); n * n];
    let mut previous = 1.0;
    let mut coefficients = Vec::with_capacity(n);
    for k in 1..=n {
        let mut next = mul(entries, &m, n);
        for i in 0..n {
            next[i * n + i] += previous;
        }
        let am = mul(entries, &next, n);
        let trace: f64 = (0..n).map(|i| am[i * n + i].re).sum();
        previous = -trace / k as f64;
        coefficients.push(previous);
        m = next;
    }
    FloatCharPoly { coefficients }
}

/// `det(A)`, read off the characteristic polynomial.
pub fn determinant(a: &HermitianMatrix) -> f64 {
    char_poly_numeric(a).determinant()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Flatness {
    pub flat: bool,
    /// The common squared modulus, present when flat.
    pub c: Option<f64>,
}

/// Whether `A^2 = cI` within `tol` (max-norm), with `c = tr(A^2) / n`.
/// Equivalent to all eigenvalues sharing one absolute value.
pub fn is_flat_spectrum(a: &HermitianMatrix, tol: f64) -> Flatness {
    let n = a.dim();
    let sq = a.square();
    let c = sq.trace() / n as f64;
    let mut worst: f64 = 0.0;
    for k in 0..n {
        for l in 0..n {
            let target = if k == l { c } else { 0.0 };
            worst = worst.max((sq.get(k, l) - target).norm());
        }
    }
    let flat = worst <= tol;
    Flatness {
        flat,
        c: flat.then_some(c),
    }
}

/// `mu_i + mu_(n+1-i)` within `tol` of zero for every `i`.
pub fn spectrum_symmetric_about_zero(s: &Spectrum, tol: f64) -> bool {
    let n = s.len();
    (0..n).all(|i| (s.values[i] + s.values[n - 1 - i]).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_mixed;
    use crate::matrices::randic_minus_one;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn oriented_k3() -> MixedGraph {
        MixedGraph::build(3, &[], &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn mixed_k3() -> MixedGraph {
        MixedGraph::build(3, &[(0, 2)], &[(0, 1), (2, 1)]).unwrap()
    }

    #[test]
    fn oriented_triangle_spectrum() {
        let s = hr_spectrum(&oriented_k3()).unwrap();
        let h = 3f64.sqrt() / 2.0;
        for (got, want) in s.values.iter().zip([h, 0.0, -h]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(
            hr_energy(&oriented_k3()).unwrap().0,
            3f64.sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn mixed_triangle_spectrum() {
        let s = hr_spectrum(&mixed_k3()).unwrap();
        for (got, want) in s.values.iter().zip([1.0, -0.5, -0.5]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        assert!(!spectrum_symmetric_about_zero(&s, 1e-8));
    }

    #[test]
    fn zero_matrix() {
        let s = eigenvalues(&HermitianMatrix::zeros(4)).unwrap();
        assert_eq!(s.values, vec![0.0; 4]);
        assert!(spectrum_symmetric_about_zero(&s, 1e-12));
        assert_eq!(hr_energy(&MixedGraph::edgeless(4).unwrap()).unwrap().0, 0.0);
    }

    #[test]
    fn energy_is_additive_over_disjoint_union() {
        let a = random_mixed(5, 0.6, 0.5, 9);
        let b = random_mixed(4, 0.8, 0.5, 10);
        let u = a.disjoint_union(&b);
        let lhs = hr_energy(&u).unwrap().0;
        let rhs = hr_energy(&a).unwrap().0 + hr_energy(&b).unwrap().0;
        assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-10);
    }

    #[test]
    fn char_poly_examples() {
        let p3 = char_poly_numeric(&hermitian_randic(&MixedGraph::path(3).unwrap()));
        for (got, want) in p3.coefficients.iter().zip([0.0, -1.0, 0.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        let k3 = char_poly_numeric(&hermitian_randic(&oriented_k3()));
        for (got, want) in k3.coefficients.iter().zip([0.0, -0.75, 0.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        let z = char_poly_numeric(&HermitianMatrix::zeros(1));
        assert_eq!(z.coefficients, vec![0.0]);
    }

    #[test]
    fn determinant_examples() {
        let p2 = MixedGraph::path(2).unwrap();
        assert_abs_diff_eq!(determinant(&hermitian_randic(&p2)), -1.0);
        assert_abs_diff_eq!(determinant(&hermitian_adjacency(&p2)), -1.0);
        let iso = MixedGraph::build(3, &[], &[(0, 1)]).unwrap();
        assert_abs_diff_eq!(determinant(&hermitian_randic(&iso)), 0.0);
        assert_abs_diff_eq!(determinant(&hermitian_adjacency(&iso)), 0.0);
        assert_abs_diff_eq!(
            determinant(&hermitian_randic(&oriented_k3())),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn flatness_examples() {
        let p2 = is_flat_spectrum(&hermitian_randic(&MixedGraph::path(2).unwrap()), 1e-9);
        assert!(p2.flat);
        assert_abs_diff_eq!(p2.c.unwrap(), 1.0);
        assert!(!is_flat_spectrum(&hermitian_randic(&oriented_k3()), 1e-7).flat);
        let pm = is_flat_spectrum(
            &hermitian_randic(&MixedGraph::perfect_matching(6).unwrap()),
            1e-9,
        );
        assert!(pm.flat);
        assert_abs_diff_eq!(pm.c.unwrap(), 1.0);
    }

    #[test]
    fn path_spectrum_is_symmetric() {
        let s = hr_spectrum(&MixedGraph::path(3).unwrap()).unwrap();
        for (got, want) in s.values.iter().zip([1.0, 0.0, -1.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        assert!(spectrum_symmetric_about_zero(&s, 1e-9));
    }

    proptest! {
        #[test]
        fn trace_identities(n in 1usize..=10, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = random_mixed(n, p, 0.5, seed);
            let s = hr_spectrum(&g).unwrap();
            prop_assert_eq!(s.len(), n);
            prop_assert!(s.values.windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(s.values.iter().sum::<f64>().abs() <= 1e-9);
            let sq: f64 = s.values.iter().map(|x| x * x).sum();
            prop_assert!((sq - 2.0 * randic_minus_one(&g)).abs() <= 1e-9);
        }

        #[test]
        fn eigenvalues_are_roots(n in 1usize..=10, seed in any::<u64>()) {
            let g = random_mixed(n, 0.5, 0.5, seed);
            let a = hermitian_randic(&g);
            let poly = char_poly_numeric(&a);
            let s = eigenvalues(&a).unwrap();
            let bound = 1e-7 * a.frobenius_norm().max(1.0).powi(n as i32);
            for &mu in &s.values {
                prop_assert!(poly.eval(mu).abs() <= bound);
            }
        }

        #[test]
        fn regular_energy_ratio(seed in any::<u64>()) {
            let g = crate::graph::random_orientation(&MixedGraph::petersen(), 0.5, seed);
            let e_rh = hr_energy(&g).unwrap().0;
            let e_h = h_energy(&g).unwrap().0;
            prop_assert!((e_rh - e_h / 3.0).abs() <= 1e-9);
        }
    }
}
