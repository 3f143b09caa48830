//! Hermitian-Randić matrices of mixed graphs.
//!
//! A mixed graph has undirected edges and directed arcs. This crate builds
//! its Hermitian adjacency matrix `H` and the degree-normalized
//! `R_H = D^(-1/2) H D^(-1/2)`, computes spectra and energies, derives the
//! characteristic polynomial exactly from elementary subgraphs, and checks
//! the known energy bounds against real graphs.
//!
//! ```
//! use hrandic::graph::MixedGraph;
//! use hrandic::spectra::hr_energy;
//!
//! // directed triangle 0 -> 1 -> 2 -> 0
//! let g = MixedGraph::build(3, &[], &[(0, 1), (1, 2), (2, 0)]).unwrap();
//! let e = hr_energy(&g).unwrap().value();
//! assert!((e - 3f64.sqrt()).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod cli;
pub mod elementary;
pub mod graph;
pub mod io;
pub mod matrices;
pub mod spectra;
pub mod verify;

pub use graph::{GraphError, MixedGraph, Orientation};
pub use spectra::{EnergyValue, Spectrum};
