//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use hrandic::bounds::{evaluate_bounds, Quantity};
use hrandic::elementary::{charpoly_exact, det_exact, det_exact_adjacency, is_positive_mixed};
use hrandic::graph::{
    cut_edges, exhaustive, random_mixed, random_mixed_tree, random_orientation,
    random_positive_mixed, structure, GraphRng, MixedGraph, Orientation,
};
use hrandic::io::parse;
use hrandic::matrices::{hermitian_adjacency, hermitian_randic};
use hrandic::spectra::eigen::symmetric_eigen;
use hrandic::spectra::{
    char_poly_numeric, determinant, h_energy, hr_energy, hr_spectrum, is_flat_spectrum,
    spectrum_symmetric_about_zero,
};

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

fn oriented_k3() -> MixedGraph {
    MixedGraph::build(3, &[], &[(0, 1), (1, 2), (2, 0)]).unwrap()
}

fn mixed_k3() -> MixedGraph {
    // arcs 1 -> 2, 3 -> 2 and edge 1 -- 3, shifted to 0-based labels
    MixedGraph::build(3, &[(0, 2)], &[(0, 1), (2, 1)]).unwrap()
}

/// Exhaustive sweep on up to four vertices plus 200 random graphs on 5..=8.
fn small_corpus() -> Vec<MixedGraph> {
    let mut graphs: Vec<MixedGraph> = (1..=4).flat_map(exhaustive).collect();
    graphs.extend((0..200u64).map(|i| random_mixed(5 + (i % 4) as usize, 0.5, 0.5, 1000 + i)));
    graphs
}

/// 200 random graphs on 3..=10 vertices with varying density.
fn bounds_corpus() -> Vec<MixedGraph> {
    (0..200u64)
        .map(|i| {
            let n = 3 + (i % 8) as usize;
            let p = 0.2 + 0.2 * (i % 4) as f64;
            random_mixed(n, p, 0.5, 5000 + i)
        })
        .collect()
}

fn degree_product(g: &MixedGraph) -> f64 {
    g.degrees().iter().map(|&d| d as f64).product()
}

/// Randić index with exponent -1, straight from the edge list.
fn randic_minus_one_oracle(g: &MixedGraph) -> f64 {
    let d = g.degrees();
    g.connections()
        .map(|c| 1.0 / (d.get(c.u) * d.get(c.v)) as f64)
        .sum()
}

/// Randić energy of the underlying graph from the real normalized adjacency,
/// bypassing the complex embedding.
fn real_randic_energy(g: &MixedGraph) -> f64 {
    let n = g.vertex_count();
    let d = g.degrees();
    let mut a = vec![0.0; n * n];
    for c in g.connections() {
        let w = 1.0 / ((d.get(c.u) * d.get(c.v)) as f64).sqrt();
        a[c.u * n + c.v] = w;
        a[c.v * n + c.u] = w;
    }
    symmetric_eigen(n, &a)
        .unwrap()
        .values
        .iter()
        .map(|x| x.abs())
        .sum()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let oriented = hr_spectrum(&oriented_k3()).map_err(|e| e.to_string())?;
    let mixed = hr_spectrum(&mixed_k3()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let h = 3f64.sqrt() / 2.0;
    let want = [[h, 0.0, -h], [1.0, -0.5, -0.5]];
    for (got, want) in [oriented.values, mixed.values].iter().zip(want) {
        for (g, w) in got.iter().zip(want) {
            ensure!((g - w).abs() <= 1e-9, "spectrum {got:?}, expected {want:?}");
        }
    }
    ensure!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    Ok(format!("both triangle spectra match, {elapsed:?}"))
}

fn criterion_2(corpus: &[MixedGraph]) -> Verdict {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for g in corpus {
        let exact = charpoly_exact(g).map_err(|e| e.to_string())?;
        let numeric = char_poly_numeric(&hermitian_randic(g));
        let dev = exact.max_deviation(&numeric.coefficients);
        ensure!(
            dev <= 1e-8,
            "deviation {dev:e} on\n{}",
            hrandic::io::serialize(g)
        );
        worst = worst.max(dev);
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!(
        "{} graphs, worst coefficient gap {worst:.1e}, {elapsed:.2?}",
        corpus.len()
    ))
}

fn criterion_3(corpus: &[MixedGraph]) -> Verdict {
    let mut checked = 0;
    for g in corpus.iter().filter(|g| !structure(g).has_isolated) {
        let det_rh = determinant(&hermitian_randic(g));
        let det_h = determinant(&hermitian_adjacency(g));
        let gap = (det_rh * degree_product(g) - det_h).abs();
        ensure!(
            gap <= 1e-8 * det_h.abs().max(1.0),
            "numeric gap {gap:e} on\n{}",
            hrandic::io::serialize(g)
        );
        let prod: BigInt = g.degrees().iter().map(|&d| BigInt::from(d)).product();
        let scaled = det_exact(g).unwrap() * BigRational::from_integer(prod);
        let exact_h = det_exact_adjacency(g).unwrap();
        ensure!(scaled == exact_h, "exact {scaled} vs {exact_h}");
        checked += 1;
    }
    Ok(format!("{checked} graphs without isolated vertices"))
}

fn criterion_4() -> Verdict {
    let bases = [
        ("C4", MixedGraph::cycle(4).unwrap(), 2.0),
        ("C6", MixedGraph::cycle(6).unwrap(), 2.0),
        ("K4", MixedGraph::complete(4).unwrap(), 3.0),
        ("Petersen", MixedGraph::petersen(), 3.0),
    ];
    let mut worst: f64 = 0.0;
    for (name, base, r) in &bases {
        for seed in 0..50 {
            let g = random_orientation(base, 0.5, seed);
            let gap = (hr_energy(&g).unwrap().value() - h_energy(&g).unwrap().value() / r).abs();
            ensure!(gap <= 1e-9, "{name} seed {seed}: gap {gap:e}");
            worst = worst.max(gap);
        }
    }
    Ok(format!("200 orientations, worst gap {worst:.1e}"))
}

fn random_bipartite(seed: u64) -> MixedGraph {
    let mut rng = GraphRng::new(seed);
    let n = 2 + rng.below(9);
    let side: Vec<bool> = (0..n).map(|_| rng.coin(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.coin(0.6) {
                edges.push((u, v));
            }
        }
    }
    let base = MixedGraph::build(n, &edges, &[]).unwrap();
    random_orientation(&base, 0.5, seed ^ 0x9e37_79b9)
}

fn criterion_5() -> Verdict {
    for seed in 0..100 {
        let g = random_bipartite(seed);
        ensure!(
            structure(&g).is_bipartite(),
            "generator produced a non-bipartite graph"
        );
        let poly = charpoly_exact(&g).unwrap();
        ensure!(
            poly.odd_coefficients_vanish(),
            "odd coefficient survives: {poly}"
        );
        let s = hr_spectrum(&g).unwrap();
        ensure!(
            spectrum_symmetric_about_zero(&s, 1e-8),
            "asymmetric spectrum {:?}",
            s.values
        );
    }
    Ok("100 bipartite graphs".into())
}

fn criterion_6(corpus: &[MixedGraph]) -> Verdict {
    let mut applicable = 0;
    for g in corpus {
        let report = evaluate_bounds(g).unwrap();
        for b in report.bounds.iter().filter(|b| b.applicable) {
            ensure!(
                b.slack.unwrap() >= -1e-8,
                "{} fails with slack {:e} on\n{}",
                b.name,
                b.slack.unwrap(),
                hrandic::io::serialize(g)
            );
            applicable += 1;
        }
        if !structure(g).has_isolated {
            let n = g.vertex_count() as f64;
            let r = randic_minus_one_oracle(g);
            ensure!(
                (r - report.randic_minus_one).abs() <= 1e-12,
                "R_-1 {r} vs {}",
                report.randic_minus_one
            );
            ensure!(
                n / (2.0 * (n - 1.0)) <= r + 1e-12 && r <= (g.vertex_count() / 2) as f64 + 1e-12,
                "R_-1 = {r} escapes its bracket"
            );
        }
    }
    for n in 2..=6 {
        let k = MixedGraph::complete(n).unwrap();
        let r = randic_minus_one_oracle(&k);
        let want = n as f64 / (2.0 * (n as f64 - 1.0));
        ensure!(
            (r - want).abs() <= 1e-12,
            "K{n}: R_-1 = {r}, expected {want}"
        );
        let report = evaluate_bounds(&k).unwrap();
        let lower = report.get("randic_minus_one_lower").unwrap();
        ensure!(
            lower.quantity == Quantity::RandicMinusOne && lower.equality_predicted,
            "K{n} equality not predicted"
        );
    }
    for n in [4, 6, 8] {
        let g = MixedGraph::perfect_matching(n).unwrap();
        let e = hr_energy(&g).unwrap().value();
        ensure!((e - n as f64).abs() <= 1e-9, "matching on {n}: energy {e}");
        ensure!(
            randic_minus_one_oracle(&g) == (n / 2) as f64,
            "matching R_-1"
        );
        let report = evaluate_bounds(&g).unwrap();
        ensure!(
            report.get("order_upper").unwrap().equality_predicted,
            "matching equality not predicted"
        );
    }
    Ok(format!(
        "{applicable} applicable bound evaluations, equality cases hold"
    ))
}

fn criterion_7(corpus: &[MixedGraph]) -> Verdict {
    let arc = MixedGraph::build(2, &[], &[(0, 1)]).unwrap();
    let mut flat_cases = vec![arc];
    flat_cases.extend([2, 4, 6, 8].map(|n| MixedGraph::perfect_matching(n).unwrap()));
    for g in &flat_cases {
        let f = is_flat_spectrum(&hermitian_randic(g), 1e-7);
        ensure!(f.flat, "expected flat");
        ensure!((f.c.unwrap() - 1.0).abs() <= 1e-12, "c = {:?}", f.c);
    }
    ensure!(
        !is_flat_spectrum(&hermitian_randic(&oriented_k3()), 1e-7).flat,
        "oriented K3 reported flat"
    );
    let mut flat_seen = 0;
    for g in corpus {
        let flat = is_flat_spectrum(&hermitian_randic(g), 1e-7).flat;
        let s = hr_spectrum(g).unwrap();
        let equal = s.max_modulus() - s.min_modulus() <= 1e-7;
        ensure!(
            flat == equal,
            "flat {flat}, equal moduli {equal} on\n{}",
            hrandic::io::serialize(g)
        );
        flat_seen += flat as usize;
    }
    Ok(format!(
        "constructed cases flat with c = 1, corpus agrees ({flat_seen} flat)"
    ))
}

fn criterion_8(corpus: &[MixedGraph]) -> Verdict {
    let mut bridges = 0;
    for g in corpus {
        let base = hr_spectrum(g).unwrap();
        for e in cut_edges(g) {
            for mode in Orientation::ALL {
                let other = hr_spectrum(&g.reorient(e.u, e.v, mode).unwrap()).unwrap();
                let d = base.distance(&other);
                ensure!(d <= 1e-8, "{e} as {mode}: spectrum moved {d:e}");
            }
            bridges += 1;
        }
    }
    ensure!(bridges > 0, "corpus has no cut edges");
    Ok(format!("{bridges} cut edges x 3 orientations"))
}

fn criterion_9() -> Verdict {
    let mut count = 0;
    for t in 0..50u64 {
        let n = 2 + (t % 11) as usize;
        let tree = random_mixed_tree(n, 0.0, 700 + t);
        let reference = real_randic_energy(&tree);
        for k in 0..10 {
            let g = random_orientation(&tree, 0.5, 31 * t + k);
            let s = hr_spectrum(&g).unwrap();
            let gap = (s.energy().value() - reference).abs();
            ensure!(gap <= 1e-8, "tree {t}, orientation {k}: energy gap {gap:e}");
            for v in 0..n {
                let r = hr_spectrum(&g.reverse_at_vertex(v).unwrap()).unwrap();
                ensure!(s.distance(&r) <= 1e-8, "reversal at {v} moved the spectrum");
            }
            count += 1;
        }
    }
    Ok(format!("{count} oriented trees"))
}

fn criterion_10() -> Verdict {
    let mut with_arcs = 0;
    for seed in 0..50u64 {
        let n = 3 + (seed % 8) as usize;
        let g = random_positive_mixed(n, 0.6, 900 + seed);
        ensure!(
            is_positive_mixed(&g),
            "generator produced a non-positive graph"
        );
        let u = g.underlying();
        let d = hr_spectrum(&g).unwrap().distance(&hr_spectrum(&u).unwrap());
        ensure!(d <= 1e-8, "spectrum differs by {d:e}");
        ensure!(
            charpoly_exact(&g).unwrap() == charpoly_exact(&u).unwrap(),
            "exact polynomials differ"
        );
        with_arcs += g.has_arcs() as usize;
    }
    Ok(format!("50 positive graphs ({with_arcs} with arcs)"))
}

fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hrandic"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    ))
}

fn criterion_11() -> Verdict {
    ensure!(
        parse("mgraph 2\na 0 1\n").map(|g| g.arcs()) == Ok(vec![(0, 1)]),
        "single arc"
    );
    ensure!(
        parse("mgraph 3\ne 0 2\na 0 1\na 2 1\n") == Ok(mixed_k3()),
        "mixed triangle"
    );
    ensure!(parse("mgraph 2\ne 0 0\n").is_err(), "loop accepted");

    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let file = dir.join("k3_oriented.mg");
    std::fs::write(&file, "mgraph 3\na 0 1\na 1 2\na 2 0\n").map_err(|e| e.to_string())?;
    let file = file.to_str().unwrap();
    let bad = dir.join("loop.mg");
    std::fs::write(&bad, "mgraph 2\ne 0 0\n").map_err(|e| e.to_string())?;

    let (code, out) = cli(&["energy", file])?;
    ensure!(
        code == 0 && out.trim().starts_with("1.7320508"),
        "energy: {code} {out}"
    );
    let (code, out) = cli(&["charpoly", file, "--exact"])?;
    ensure!(
        code == 0 && out.trim() == "a1 = 0, a2 = -3/4, a3 = 0",
        "charpoly: {code} {out}"
    );
    let (code, _) = cli(&["energy", bad.to_str().unwrap()])?;
    ensure!(code == 2, "loop file exited {code}");

    let start = Instant::now();
    let (code, out) = cli(&[
        "verify", "--random", "--n", "8", "--count", "200", "--seed", "7",
    ])?;
    let elapsed = start.elapsed();
    ensure!(
        code == 0 && out.contains(" 0 violations"),
        "verify: {code} {out}"
    );
    ensure!(
        elapsed < Duration::from_secs(120),
        "verify took {elapsed:?}"
    );
    Ok(format!("examples match, verify clean in {elapsed:.2?}"))
}

fn main() {
    let small = small_corpus();
    let corpus = bounds_corpus();
    let criteria: Vec<Criterion> = vec![
        ("triangle spectra", Box::new(criterion_1)),
        (
            "exact vs numeric characteristic polynomial",
            Box::new(|| criterion_2(&small)),
        ),
        ("determinant ratio", Box::new(|| criterion_3(&small))),
        ("regular energy ratio", Box::new(criterion_4)),
        ("bipartite symmetry", Box::new(criterion_5)),
        ("energy bounds", Box::new(|| criterion_6(&corpus))),
        (
            "flat spectrum biconditional",
            Box::new(|| criterion_7(&corpus)),
        ),
        ("cut-edge reorientation", Box::new(|| criterion_8(&corpus))),
        ("trees", Box::new(criterion_9)),
        ("positive mixed graphs", Box::new(criterion_10)),
        ("command line", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(msg) => println!("PASS criterion {:>2} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
