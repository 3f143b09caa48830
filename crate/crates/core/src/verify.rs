//! Runs every property check the library knows about against a graph and
//! collects the failures.

use serde::Serialize;

use crate::bounds::{bounds_from_spectrum, check_identity_theorems, CheckOutcome};
use crate::elementary::{
    charpoly_exact, det_exact, det_exact_adjacency, is_positive_mixed, DEFAULT_CAP,
};
use crate::graph::{cut_edges, random_mixed, structure, MixedGraph, Orientation};
use crate::io::serialize;
use crate::matrices::hermitian_randic;
use crate::spectra::{char_poly_numeric, hr_spectrum, spectrum_symmetric_about_zero, Spectrum};

/// Tolerance for coefficient and spectrum comparisons.
pub const VERIFY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub outcome: CheckOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphVerification {
    /// The graph in `mgraph` form, for reproduction.
    pub graph: String,
    pub checks: Vec<CheckRecord>,
}

impl GraphVerification {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.outcome.is_fail())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph: String,
    pub check: String,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub graphs_checked: usize,
    pub checks_run: usize,
    pub checks_skipped: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn from_results(results: &[GraphVerification]) -> Self {
        let mut report = VerifyReport {
            graphs_checked: results.len(),
            checks_run: 0,
            checks_skipped: 0,
            violations: Vec::new(),
        };
        for r in results {
            for c in &r.checks {
                match c.outcome {
                    CheckOutcome::Skipped => report.checks_skipped += 1,
                    CheckOutcome::Pass => report.checks_run += 1,
                    CheckOutcome::Fail => {
                        report.checks_run += 1;
                        report.violations.push(Violation {
                            graph: r.graph.clone(),
                            check: c.name.clone(),
                            detail: c.detail.clone(),
                        });
                    }
                }
            }
        }
        report
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Recorder {
    checks: Vec<CheckRecord>,
}

impl Recorder {
    fn record(&mut self, name: impl Into<String>, outcome: CheckOutcome, detail: Option<String>) {
        self.checks.push(CheckRecord {
            name: name.into(),
            outcome,
            detail,
        });
    }

    fn pass_if(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.record(name, CheckOutcome::Pass, None);
        } else {
            self.record(name, CheckOutcome::Fail, Some(detail()));
        }
    }

    fn skip(&mut self, name: &str) {
        self.record(name, CheckOutcome::Skipped, None);
    }
}

fn spectrum_of(graph: &MixedGraph, rec: &mut Recorder, name: &str) -> Option<Spectrum> {
    match hr_spectrum(graph) {
        Ok(s) => Some(s),
        Err(e) => {
            rec.record(name, CheckOutcome::Fail, Some(e.to_string()));
            None
        }
    }
}

/// Runs every applicable check on one graph.
pub fn verify_graph(graph: &MixedGraph) -> GraphVerification {
    let mut rec = Recorder { checks: Vec::new() };
    let n = graph.vertex_count();
    let s = structure(graph);
    let small = n <= DEFAULT_CAP;

    let Some(spectrum) = spectrum_of(graph, &mut rec, "spectrum") else {
        return GraphVerification {
            graph: serialize(graph),
            checks: rec.checks,
        };
    };

    let exact = if small {
        charpoly_exact(graph).ok()
    } else {
        None
    };
    match &exact {
        Some(poly) => {
            let numeric = char_poly_numeric(&hermitian_randic(graph));
            let dev = poly.max_deviation(&numeric.coefficients);
            rec.pass_if("charpoly_exact_vs_numeric", dev <= VERIFY_TOLERANCE, || {
                format!("max coefficient deviation {dev:e}")
            });
        }
        None => rec.skip("charpoly_exact_vs_numeric"),
    }

    if small && !s.has_isolated {
        match (det_exact(graph), det_exact_adjacency(graph)) {
            (Ok(det_rh), Ok(det_h)) => {
                let prod: num_bigint::BigInt = graph
                    .degrees()
                    .iter()
                    .map(|&d| num_bigint::BigInt::from(d))
                    .product();
                let scaled = det_rh.clone() * num_rational::BigRational::from_integer(prod);
                rec.pass_if("det_ratio_exact", scaled == det_h, || {
                    format!("det R_H * prod(d) = {scaled}, det H = {det_h}")
                });
            }
            _ => rec.skip("det_ratio_exact"),
        }
    } else {
        rec.skip("det_ratio_exact");
    }

    let report = bounds_from_spectrum(graph, &spectrum);
    for b in &report.bounds {
        let name = format!("bound:{}", b.name);
        if !b.applicable {
            rec.skip(&name);
        } else {
            rec.pass_if(&name, b.holds, || {
                format!(
                    "bound {:?} vs actual, slack {:?}",
                    b.value.unwrap_or(f64::NAN),
                    b.slack.unwrap_or(f64::NAN)
                )
            });
        }
    }

    match check_identity_theorems(graph) {
        Ok(ids) => {
            for (name, outcome) in ids.outcomes() {
                rec.record(format!("identity:{name}"), outcome, None);
            }
        }
        Err(e) => rec.record("identities", CheckOutcome::Fail, Some(e.to_string())),
    }

    let bridges = cut_edges(graph);
    if bridges.is_empty() {
        rec.skip("cut_edge_reorientation");
    } else {
        let mut worst: f64 = 0.0;
        let mut worst_at = String::new();
        for e in &bridges {
            for mode in Orientation::ALL {
                let g = graph.reorient(e.u, e.v, mode).expect("cut edge exists");
                let d = match hr_spectrum(&g) {
                    Ok(other) => spectrum.distance(&other),
                    Err(_) => f64::INFINITY,
                };
                if d > worst {
                    worst = d;
                    worst_at = format!("{} as {mode}", e);
                }
            }
        }
        rec.pass_if("cut_edge_reorientation", worst <= VERIFY_TOLERANCE, || {
            format!("spectrum moved by {worst:e} at {worst_at}")
        });
    }

    if s.is_forest(graph) {
        let mut worst: f64 = 0.0;
        let mut worst_at = 0;
        for v in 0..n {
            let g = graph.reverse_at_vertex(v).expect("vertex in range");
            let d = hr_spectrum(&g).map_or(f64::INFINITY, |o| spectrum.distance(&o));
            if d > worst {
                worst = d;
                worst_at = v;
            }
        }
        rec.pass_if("tree_vertex_reversal", worst <= VERIFY_TOLERANCE, || {
            format!("spectrum moved by {worst:e} reversing at vertex {worst_at}")
        });
        let energy = spectrum.energy().value();
        let base = hr_spectrum(&graph.underlying()).map_or(f64::NAN, |o| o.energy().value());
        let gap = (energy - base).abs();
        rec.pass_if("tree_underlying_energy", gap <= VERIFY_TOLERANCE, || {
            format!("energy {energy} vs underlying {base}")
        });
    } else {
        rec.skip("tree_vertex_reversal");
        rec.skip("tree_underlying_energy");
    }

    match (&exact, is_positive_mixed(graph)) {
        (Some(poly), true) => {
            let base = charpoly_exact(&graph.underlying()).ok();
            rec.pass_if(
                "positive_exact_charpoly",
                base.as_ref() == Some(poly),
                || "exact characteristic polynomial differs from the underlying graph".into(),
            );
        }
        _ => rec.skip("positive_exact_charpoly"),
    }

    if s.is_bipartite() {
        let symmetric = spectrum_symmetric_about_zero(&spectrum, VERIFY_TOLERANCE);
        rec.pass_if("bipartite_symmetric_spectrum", symmetric, || {
            format!("spectrum {:?}", spectrum.values)
        });
        match &exact {
            Some(poly) => rec.pass_if(
                "bipartite_odd_coefficients",
                poly.odd_coefficients_vanish(),
                || poly.to_string(),
            ),
            None => rec.skip("bipartite_odd_coefficients"),
        }
    } else {
        rec.skip("bipartite_symmetric_spectrum");
        rec.skip("bipartite_odd_coefficients");
    }

    GraphVerification {
        graph: serialize(graph),
        checks: rec.checks,
    }
}

/// Graph `i` of the random corpus: `random_mixed(n, 0.5, 0.5, seed + i)`.
pub fn random_corpus(n: usize, count: usize, seed: u64) -> impl Iterator<Item = MixedGraph> {
    (0..count as u64).map(move |i| random_mixed(n, 0.5, 0.5, seed.wrapping_add(i)))
}

/// Verifies the random corpus, spreading graphs over the available cores.
pub fn verify_random(n: usize, count: usize, seed: u64) -> Vec<GraphVerification> {
    let graphs: Vec<MixedGraph> = random_corpus(n, count, seed).collect();
    let workers = std::thread::available_parallelism()
        .map_or(1, |w| w.get())
        .min(graphs.len().max(1));
    let chunk = graphs.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = graphs
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(verify_graph).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_checks_pass() {
        let g = MixedGraph::build(3, &[(0, 2)], &[(0, 1), (2, 1)]).unwrap();
        let v = verify_graph(&g);
        assert_eq!(v.failures().count(), 0, "{:?}", v.checks);
        assert!(v
            .checks
            .iter()
            .any(|c| c.name == "charpoly_exact_vs_numeric" && c.outcome == CheckOutcome::Pass));
    }

    #[test]
    fn tree_checks_run() {
        let g = MixedGraph::build(4, &[(0, 1)], &[(1, 2), (3, 1)]).unwrap();
        let v = verify_graph(&g);
        for name in [
            "tree_vertex_reversal",
            "tree_underlying_energy",
            "cut_edge_reorientation",
        ] {
            let c = v.checks.iter().find(|c| c.name == name).unwrap();
            assert_eq!(c.outcome, CheckOutcome::Pass, "{name}");
        }
    }

    #[test]
    fn corpus_is_reproducible() {
        let a: Vec<_> = random_corpus(6, 5, 42).collect();
        let b: Vec<_> = random_corpus(6, 5, 42).collect();
        assert_eq!(a, b);
        assert_eq!(a[3], random_mixed(6, 0.5, 0.5, 45));
    }

    #[test]
    fn small_random_run_is_clean() {
        let results = verify_random(6, 20, 1);
        assert_eq!(results.len(), 20);
        let report = VerifyReport::from_results(&results);
        assert!(report.is_clean(), "{:?}", report.violations);
        assert!(report.checks_run > 0);
    }

    #[test]
    fn report_collects_failures() {
        let results = vec![GraphVerification {
            graph: "mgraph 1\n".into(),
            checks: vec![
                CheckRecord {
                    name: "x".into(),
                    outcome: CheckOutcome::Fail,
                    detail: Some("boom".into()),
                },
                CheckRecord {
                    name: "y".into(),
                    outcome: CheckOutcome::Skipped,
                    detail: None,
                },
            ],
        }];
        let r = VerifyReport::from_results(&results);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.checks_skipped, 1);
        assert!(!r.is_clean());
    }
}
