//! Energy bounds and spectral identities, evaluated on a concrete graph.
//!
//! Every bound is reported, applicable or not, so a [`BoundsReport`] always
//! has the same shape. A bound that is applicable but does not hold means a
//! bug somewhere upstream.

use serde::Serialize;

use crate::elementary::is_positive_mixed;
use crate::graph::{structure, MixedGraph, Structure};
use crate::matrices::{hermitian_adjacency, hermitian_randic, randic_minus_one};
use crate::spectra::{
    determinant, eigenvalues, h_energy, hr_energy, hr_spectrum, is_flat_spectrum, Flatness,
    SpectraError, Spectrum,
};

/// Slack allowed before a bound counts as violated.
pub const BOUND_TOLERANCE: f64 = 1e-8;
/// Tolerance for spectral predicates (flatness, equality cases).
pub const PREDICATE_TOLERANCE: f64 = 1e-7;
/// Tolerance for identities between two computed quantities.
pub const IDENTITY_TOLERANCE: f64 = 1e-8;
/// Eigenvalues this small are treated as zero when forming `|det|`.
const ZERO_EIGENVALUE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

/// What a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Energy,
    RandicMinusOne,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub quantity: Quantity,
    pub side: Side,
    /// `None` when not applicable.
    pub value: Option<f64>,
    pub applicable: bool,
    /// Signed distance to violation (`quantity - bound` for lower bounds).
    pub slack: Option<f64>,
    pub holds: bool,
    pub equality_predicted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub randic_minus_one: f64,
    /// `|det R_H|`.
    pub p: f64,
    /// Smallest eigenvalue modulus.
    pub alpha: f64,
    /// `max(mu_1, |mu_n|)`.
    pub beta: f64,
    /// Smallest modulus among the top `floor(n/2)` eigenvalues.
    pub alpha_bip: Option<f64>,
    pub energy: f64,
    pub spectrum: Vec<f64>,
    pub flatness: Flatness,
    pub bounds: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.bounds.iter().filter(|b| b.applicable && !b.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// Lower bound from the smallest and largest eigenvalue moduli.
pub fn min_max_modulus_bound(n: usize, randic_minus_one: f64, alpha: f64, beta: f64) -> f64 {
    (2.0 * randic_minus_one + n as f64 * alpha * beta) / (alpha + beta)
}

/// Lower bound from the largest eigenvalue modulus alone.
pub fn max_modulus_bound(randic_minus_one: f64, beta: f64) -> f64 {
    2.0 * randic_minus_one / beta
}

/// Connected bipartite lower bound from `mu_1` and the smallest modulus of
/// the upper half of the spectrum.
pub fn bipartite_min_max_bound(n: usize, randic_minus_one: f64, alpha: f64, top: f64) -> f64 {
    2.0 * (randic_minus_one + (n / 2) as f64 * alpha * top) / (alpha + top)
}

pub fn bipartite_top_bound(randic_minus_one: f64, top: f64) -> f64 {
    2.0 * randic_minus_one / top
}

fn det_power(p: f64, n: usize) -> f64 {
    if p == 0.0 {
        0.0
    } else {
        p.powf(2.0 / n as f64)
    }
}

struct Builder {
    bounds: Vec<BoundEntry>,
}

impl Builder {
    fn push(
        &mut self,
        name: &'static str,
        quantity: (Quantity, f64),
        side: Side,
        value: Option<f64>,
        equality_predicted: bool,
    ) {
        let (kind, actual) = quantity;
        let slack = value.map(|b| match side {
            Side::Lower => actual - b,
            Side::Upper => b - actual,
        });
        self.bounds.push(BoundEntry {
            name,
            quantity: kind,
            side,
            value,
            applicable: value.is_some(),
            holds: slack.is_none_or(|s| s >= -BOUND_TOLERANCE),
            slack,
            equality_predicted: value.is_some() && equality_predicted,
        });
    }
}

fn is_perfect_matching(graph: &MixedGraph) -> bool {
    graph.vertex_count().is_multiple_of(2) && graph.degrees().iter().all(|&d| d == 1)
}

/// `(n - 3) / 2` disjoint edges plus one path on three vertices, `n` odd.
fn is_matching_plus_cherry(graph: &MixedGraph, s: &Structure) -> bool {
    let n = graph.vertex_count();
    n % 2 == 1
        && n >= 3
        && s.is_forest(graph)
        && s.components.iter().filter(|c| c.len() == 3).count() == 1
        && s.components.iter().all(|c| c.len() == 2 || c.len() == 3)
}

fn is_complete(graph: &MixedGraph) -> bool {
    let n = graph.vertex_count();
    graph.connection_count() == n * (n - 1) / 2
}

/// Evaluates every bound against the Hermitian-Randić energy of `graph`.
pub fn evaluate_bounds(graph: &MixedGraph) -> Result<BoundsReport, SpectraError> {
    let spectrum = hr_spectrum(graph)?;
    Ok(bounds_from_spectrum(graph, &spectrum))
}

pub fn bounds_from_spectrum(graph: &MixedGraph, spectrum: &Spectrum) -> BoundsReport {
    let n = graph.vertex_count();
    let nf = n as f64;
    let s = structure(graph);
    let rm1 = randic_minus_one(graph);
    let energy = spectrum.energy().value();
    let flatness = is_flat_spectrum(&hermitian_randic(graph), PREDICATE_TOLERANCE);
    let flat = flatness.flat;

    let p: f64 = spectrum
        .values
        .iter()
        .map(|x| {
            if x.abs() <= ZERO_EIGENVALUE {
                0.0
            } else {
                x.abs()
            }
        })
        .product();
    let alpha = spectrum.min_modulus();
    let beta = spectrum.largest().max(spectrum.smallest().abs());
    let half = n / 2;
    let alpha_bip = (half >= 1).then(|| {
        spectrum.values[..half]
            .iter()
            .map(|x| x.abs())
            .fold(f64::INFINITY, f64::min)
    });
    let top = spectrum.largest();
    let no_isolated = !s.has_isolated;

    let mut b = Builder { bounds: Vec::new() };
    let e = (Quantity::Energy, energy);

    // R_{-1} bracket for graphs without isolated vertices
    let r = (Quantity::RandicMinusOne, rm1);
    let bracket = no_isolated && n >= 2;
    b.push(
        "randic_minus_one_lower",
        r,
        Side::Lower,
        bracket.then(|| nf / (2.0 * (nf - 1.0))),
        is_complete(graph),
    );
    b.push(
        "randic_minus_one_upper",
        r,
        Side::Upper,
        bracket.then_some(half as f64),
        is_perfect_matching(graph) || is_matching_plus_cherry(graph, &s),
    );

    let pp = det_power(p, n);
    b.push(
        "trace_det_lower",
        e,
        Side::Lower,
        Some((2.0 * rm1 + nf * (nf - 1.0) * pp).sqrt()),
        flat,
    );
    b.push(
        "trace_upper",
        e,
        Side::Upper,
        Some((2.0 * nf * rm1).sqrt()),
        flat,
    );

    let regular = s.regular_degree.filter(|&r| r > 0).map(|r| r as f64);
    b.push(
        "regular_lower",
        e,
        Side::Lower,
        regular.map(|r| (nf / r + nf * (nf - 1.0) * pp).sqrt()),
        flat,
    );
    b.push(
        "regular_upper",
        e,
        Side::Upper,
        regular.map(|r| nf * r.sqrt() / r),
        flat,
    );

    let order = n >= 3 && no_isolated;
    let extremal_lower = is_complete(graph)
        && top > PREDICATE_TOLERANCE
        && (top + spectrum.smallest()).abs() <= PREDICATE_TOLERANCE
        && spectrum.values[1..n - 1]
            .iter()
            .all(|x| x.abs() <= PREDICATE_TOLERANCE);
    b.push(
        "order_lower",
        e,
        Side::Lower,
        order.then(|| (2.0 * nf / (nf - 1.0)).sqrt()),
        extremal_lower,
    );
    b.push(
        "order_upper",
        e,
        Side::Upper,
        order.then_some(nf),
        is_perfect_matching(graph),
    );

    b.push(
        "min_max_modulus_lower",
        e,
        Side::Lower,
        (alpha + beta > 0.0).then(|| min_max_modulus_bound(n, rm1, alpha, beta)),
        flat,
    );
    b.push(
        "max_modulus_lower",
        e,
        Side::Lower,
        (beta > 0.0).then(|| max_modulus_bound(rm1, beta)),
        flat,
    );

    let bipartite = s.is_connected() && s.is_bipartite() && top > 0.0;
    b.push(
        "bipartite_min_max_lower",
        e,
        Side::Lower,
        alpha_bip
            .filter(|_| bipartite)
            .map(|a| bipartite_min_max_bound(n, rm1, a, top)),
        flat,
    );
    b.push(
        "bipartite_top_lower",
        e,
        Side::Lower,
        bipartite.then(|| bipartite_top_bound(rm1, top)),
        flat,
    );

    BoundsReport {
        n,
        randic_minus_one: rm1,
        p,
        alpha,
        beta,
        alpha_bip,
        energy,
        spectrum: spectrum.values.clone(),
        flatness,
        bounds: b.bounds,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Skipped,
}

impl CheckOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == CheckOutcome::Fail
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityChecks {
    /// `det R_H * prod(d) = det H`, or both zero with isolated vertices.
    pub det_ratio: CheckOutcome,
    /// Regular underlying graph: `E(R_H) = E(H) / r`.
    pub regular_energy: CheckOutcome,
    /// `R_H^2 = cI` exactly when all eigenvalue moduli agree.
    pub flat_iff_equal_moduli: CheckOutcome,
    /// Positive graphs share the spectrum of their underlying graph.
    pub positive_spectrum: CheckOutcome,
    /// Energy adds up over connected components.
    pub component_additivity: CheckOutcome,
}

impl IdentityChecks {
    pub fn outcomes(&self) -> [(&'static str, CheckOutcome); 5] {
        [
            ("det_ratio", self.det_ratio),
            ("regular_energy", self.regular_energy),
            ("flat_iff_equal_moduli", self.flat_iff_equal_moduli),
            ("positive_spectrum", self.positive_spectrum),
            ("component_additivity", self.component_additivity),
        ]
    }

    pub fn any_failed(&self) -> bool {
        self.outcomes().iter().any(|(_, o)| o.is_fail())
    }
}

pub fn check_identity_theorems(graph: &MixedGraph) -> Result<IdentityChecks, SpectraError> {
    let s = structure(graph);
    let rh = hermitian_randic(graph);
    let h = hermitian_adjacency(graph);
    let spectrum = eigenvalues(&rh)?;
    let energy = spectrum.energy().value();

    let det_rh = determinant(&rh);
    let det_h = determinant(&h);
    let det_ratio = if s.has_isolated {
        det_rh.abs() <= IDENTITY_TOLERANCE && det_h.abs() <= IDENTITY_TOLERANCE
    } else {
        let prod: f64 = graph.degrees().iter().map(|&d| d as f64).product();
        (det_rh * prod - det_h).abs() <= IDENTITY_TOLERANCE * det_h.abs().max(1.0)
    };

    let regular_energy = match s.regular_degree {
        None => CheckOutcome::Skipped,
        Some(0) => CheckOutcome::from_bool(energy == 0.0 || graph.connection_count() == 0),
        Some(r) => {
            let e_h = h_energy(graph)?.value();
            CheckOutcome::from_bool((energy - e_h / r as f64).abs() <= IDENTITY_TOLERANCE)
        }
    };

    let flat = is_flat_spectrum(&rh, PREDICATE_TOLERANCE).flat;
    let equal_moduli = spectrum.max_modulus() - spectrum.min_modulus() <= PREDICATE_TOLERANCE;

    let positive_spectrum = if is_positive_mixed(graph) {
        let base = hr_spectrum(&graph.underlying())?;
        CheckOutcome::from_bool(spectrum.distance(&base) <= IDENTITY_TOLERANCE)
    } else {
        CheckOutcome::Skipped
    };

    let component_additivity = if s.components.len() > 1 {
        let mut total = 0.0;
        for c in &s.components {
            let sub = graph
                .induced_subgraph(c)
                .expect("component vertices are in range");
            total += hr_energy(&sub)?.value();
        }
        CheckOutcome::from_bool((total - energy).abs() <= IDENTITY_TOLERANCE)
    } else {
        CheckOutcome::Skipped
    };

    Ok(IdentityChecks {
        det_ratio: CheckOutcome::from_bool(det_ratio),
        regular_energy,
        flat_iff_equal_moduli: CheckOutcome::from_bool(flat == equal_moduli),
        positive_spectrum,
        component_additivity,
    })
}
