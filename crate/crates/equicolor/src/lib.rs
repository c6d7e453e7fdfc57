//! Equitable r-colorings of sparse graphs.
//!
//! An equitable coloring is a proper vertex coloring whose class sizes
//! pairwise differ by at most one. The solver targets graphs satisfying the
//! 1-planar edge bounds (at most 4n-8 edges hereditarily, hence
//! 7-degenerate) with r >= 13 colors and max degree at most r; a fallback
//! mode handles arbitrary graphs with r >= max degree + 1.
//!
//! The construction works by induction on edges: peel edges from a vertex
//! of minimum degree down to the edgeless graph, color that trivially, then
//! re-add edges in reverse. Each monochromatic re-add holds the low-degree
//! endpoint out, leaving a one-deficient coloring (one class one short).
//! The class digraph over that coloring, its accessible classes, and a
//! family of witness-shifting and solo-neighbor exchange moves then make
//! room for the held-out vertex.
//!
//! Entry points: [`solver::equitable_color`], [`solver::hs_color`],
//! [`oracle::brute_force_equitable`], and the generators in [`gen`].

pub mod coloring;
pub mod digraph;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod moves;
pub mod oracle;
pub mod solver;

pub use coloring::{verify_equitable, verify_proper, Coloring};
pub use error::{Error, Result};
pub use graph::Graph;
pub use moves::SearchBudget;
pub use solver::{equitable_color, hs_color, Mode, Solution, SolverConfig};
