//! Exact toolkit for S-packing and (d,n)-packing colorings: graph
//! generators for base-3 Sierpinski graphs and H-graphs, a complete
//! backtracking solver with certificate verification, the suffix-lift
//! construction from T^ell to S^k, and the transfer-digraph decision
//! procedure for packing 6-colorability of H(r).

pub mod error;
pub mod generators;
pub mod graph;
pub mod ilp;
pub mod io;
pub mod lift;
pub mod model;
pub mod solver;
pub mod transfer;

pub use error::{Error, Result};
pub use graph::{all_pairs_distances, build_graph, diameter, DistanceMatrix, Graph, INFINITE};
pub use model::{color_classes, verify_coloring, Coloring, PackingSequence, Violation};
pub use solver::{
    lower_bound, solve_decision, solve_min_colors, SearchConfig, SolveResult, Status,
};
