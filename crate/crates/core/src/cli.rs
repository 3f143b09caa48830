//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it with in-memory buffers.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::{evaluate_bounds, Side};
use crate::elementary::{charpoly_exact, det_exact, is_positive_mixed};
use crate::graph::{
    cut_edges, random_mixed, random_mixed_tree, structure, MixedGraph, Orientation,
};
use crate::io::{exact_charpoly_json, parse, serialize};
use crate::matrices::{hermitian_randic, randic_minus_one};
use crate::spectra::{char_poly_numeric, determinant, h_energy, hr_energy, hr_spectrum};
use crate::verify::{verify_graph, verify_random, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hrandic",
    version,
    about = "Hermitian-Randić spectra and energies of mixed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summarize the structure of a graph
    Info { file: PathBuf },
    /// Eigenvalues of R_H, largest first
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Energy of R_H (or of H with --hermitian)
    Energy {
        file: PathBuf,
        #[arg(long)]
        hermitian: bool,
    },
    /// Characteristic polynomial coefficients a_1..a_n of R_H
    Charpoly {
        file: PathBuf,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Determinant of R_H
    Det {
        file: PathBuf,
        #[arg(long)]
        exact: bool,
    },
    /// Evaluate every energy bound
    Bounds {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check every known identity and bound on a file or a random corpus
    Verify(VerifyArgs),
    /// Print a random graph in mgraph format
    Gen(GenArgs),
    /// Print a transformed copy of a graph
    Transform(TransformArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    file: Option<PathBuf>,
    #[arg(long, requires = "n")]
    random: bool,
    /// Vertex count of the random corpus
    #[arg(long, requires = "random", value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    #[arg(long, default_value_t = 200, requires = "random")]
    count: usize,
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Probability that a pair is connected
    #[arg(long, default_value_t = 0.5, value_parser = probability)]
    p: f64,
    /// Probability that a connection is an arc
    #[arg(long, default_value_t = 0.5, value_parser = probability)]
    q: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draw a uniform random labelled tree instead (ignores --p)
    #[arg(long)]
    tree: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("op").required(true))]
struct TransformArgs {
    file: PathBuf,
    /// Reverse every arc at this vertex
    #[arg(long, group = "op", value_name = "V")]
    reverse_vertex: Option<usize>,
    /// Re-orient the pair U V as undirected, forward (U -> V) or backward
    #[arg(long, group = "op", num_args = 3, value_names = ["U", "V", "MODE"])]
    reorient: Option<Vec<String>>,
}

fn probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is not in [0, 1]"))
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Numeric(_) => EXIT_USAGE,
            Failure::Input(_) => EXIT_INPUT,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Numeric(m) => m,
        }
    }
}

type Outcome = Result<i32, Failure>;

fn numeric<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Numeric(e.to_string())
}

fn write_failed(e: std::io::Error) -> Failure {
    Failure::Input(format!("cannot write output: {e}"))
}

fn load(path: &Path) -> Result<MixedGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Info { file } => info(&load(&file)?, out),
        Command::Spectrum { file, json } => {
            let s = hr_spectrum(&load(&file)?).map_err(numeric)?;
            if json {
                serde_json::to_writer_pretty(&mut *out, &s)
                    .map_err(|e| Failure::Input(e.to_string()))?;
                writeln!(out).map_err(write_failed)?;
            } else {
                for x in &s.values {
                    writeln!(out, "{x:?}").map_err(write_failed)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Energy { file, hermitian } => {
            let g = load(&file)?;
            let e = if hermitian {
                h_energy(&g)
            } else {
                hr_energy(&g)
            }
            .map_err(numeric)?;
            writeln!(out, "{}", e.value()).map_err(write_failed)?;
            Ok(EXIT_OK)
        }
        Command::Charpoly { file, exact, json } => {
            let g = load(&file)?;
            if exact {
                let poly = charpoly_exact(&g).map_err(numeric)?;
                if json {
                    let doc = exact_charpoly_json(&poly);
                    writeln!(out, "{doc:#}").map_err(write_failed)?;
                } else {
                    writeln!(out, "{poly}").map_err(write_failed)?;
                }
            } else if json {
                let poly = char_poly_numeric(&hermitian_randic(&g));
                serde_json::to_writer_pretty(&mut *out, &poly)
                    .map_err(|e| Failure::Input(e.to_string()))?;
                writeln!(out).map_err(write_failed)?;
            } else {
                let poly = char_poly_numeric(&hermitian_randic(&g));
                let line: Vec<String> = poly
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("a{} = {c}", i + 1))
                    .collect();
                writeln!(out, "{}", line.join(", ")).map_err(write_failed)?;
            }
            Ok(EXIT_OK)
        }
        Command::Det { file, exact } => {
            let g = load(&file)?;
            if exact {
                writeln!(out, "{}", det_exact(&g).map_err(numeric)?).map_err(write_failed)?;
            } else {
                writeln!(out, "{}", determinant(&hermitian_randic(&g))).map_err(write_failed)?;
            }
            Ok(EXIT_OK)
        }
        Command::Bounds { file, json } => bounds(&load(&file)?, json, out),
        Command::Verify(args) => verify(args, out),
        Command::Gen(args) => {
            let n = args.n as usize;
            let g = if args.tree {
                random_mixed_tree(n, args.q, args.seed)
            } else {
                random_mixed(n, args.p, args.q, args.seed)
            };
            write!(out, "{}", serialize(&g)).map_err(write_failed)?;
            Ok(EXIT_OK)
        }
        Command::Transform(args) => transform(args, out),
    }
}

fn info(g: &MixedGraph, out: &mut dyn Write) -> Outcome {
    let s = structure(g);
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let bridges: Vec<String> = cut_edges(g).iter().map(|e| e.to_string()).collect();
    let text = format!(
        "vertices: {}\nedges: {}\narcs: {}\ndegrees: {:?}\ncomponents: {}\nconnected: {}\nbipartite: {}\nforest: {}\nregular: {}\npositive: {}\nrandic_minus_one: {}\ncut_edges: {}\n",
        g.vertex_count(),
        g.edges().count(),
        g.arcs().len(),
        g.degrees().as_slice(),
        s.components.len(),
        yes_no(s.is_connected()),
        yes_no(s.is_bipartite()),
        yes_no(s.is_forest(g)),
        s.regular_degree.map_or("no".to_string(), |r| r.to_string()),
        yes_no(is_positive_mixed(g)),
        randic_minus_one(g),
        if bridges.is_empty() { "none".to_string() } else { bridges.join(" ") },
    );
    out.write_all(text.as_bytes()).map_err(write_failed)?;
    Ok(EXIT_OK)
}

fn bounds(g: &MixedGraph, json: bool, out: &mut dyn Write) -> Outcome {
    let report = evaluate_bounds(g).map_err(numeric)?;
    if json {
        serde_json::to_writer_pretty(&mut *out, &report)
            .map_err(|e| Failure::Input(e.to_string()))?;
        writeln!(out).map_err(write_failed)?;
    } else {
        let mut text = format!(
            "energy: {:?}\nrandic_minus_one: {:?}\np: {:?}\nalpha: {:?}\nbeta: {:?}\nflat: {}\n",
            report.energy,
            report.randic_minus_one,
            report.p,
            report.alpha,
            report.beta,
            report.flatness.flat
        );
        for b in &report.bounds {
            let side = match b.side {
                Side::Lower => ">=",
                Side::Upper => "<=",
            };
            let line = match b.value {
                None => format!("{:<26} n/a\n", b.name),
                Some(v) => format!(
                    "{:<26} {side} {:<24} {}{}\n",
                    b.name,
                    format!("{v:?}"),
                    if b.holds { "holds" } else { "VIOLATED" },
                    if b.equality_predicted {
                        " (equality)"
                    } else {
                        ""
                    }
                ),
            };
            text.push_str(&line);
        }
        out.write_all(text.as_bytes()).map_err(write_failed)?;
    }
    Ok(EXIT_OK)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Outcome {
    let results = match (&args.file, args.n) {
        (Some(file), _) => vec![verify_graph(&load(file)?)],
        (None, Some(n)) => verify_random(n as usize, args.count, args.seed),
        (None, None) => return Err(Failure::Usage("give a FILE or --random --n N".into())),
    };
    let report = VerifyReport::from_results(&results);
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &report)
            .map_err(|e| Failure::Input(e.to_string()))?;
        writeln!(out).map_err(write_failed)?;
    } else {
        let mut text = String::new();
        if args.file.is_some() {
            for c in &results[0].checks {
                text.push_str(&format!("{:<34} {:?}\n", c.name, c.outcome).to_lowercase());
            }
        }
        for v in &report.violations {
            text.push_str(&format!(
                "violation: {} ({})\n{}",
                v.check,
                v.detail.as_deref().unwrap_or("no detail"),
                v.graph
            ));
        }
        text.push_str(&format!(
            "{} graphs, {} checks, {} skipped, {} violations\n",
            report.graphs_checked,
            report.checks_run,
            report.checks_skipped,
            report.violations.len()
        ));
        out.write_all(text.as_bytes()).map_err(write_failed)?;
    }
    Ok(if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn transform(args: TransformArgs, out: &mut dyn Write) -> Outcome {
    let g = load(&args.file)?;
    let result = match (args.reverse_vertex, args.reorient.as_deref()) {
        (Some(v), _) => g.reverse_at_vertex(v),
        (None, Some([u, v, mode])) => {
            let vertex = |s: &String| {
                s.parse::<usize>()
                    .map_err(|_| Failure::Usage(format!("`{s}` is not a vertex index")))
            };
            let mode: Orientation = mode
                .parse()
                .map_err(|_| Failure::Usage(format!("unknown mode `{mode}`")))?;
            g.reorient(vertex(u)?, vertex(v)?, mode)
        }
        _ => return Err(Failure::Usage("nothing to do".into())),
    };
    let g = result.map_err(|e| Failure::Input(e.to_string()))?;
    write!(out, "{}", serialize(&g)).map_err(write_failed)?;
    Ok(EXIT_OK)
}
