//! Constructive 1-planar generators, classical test graphs, and parameter
//! specs for the CLI `gen` subcommand.
//!
//! The 1-planar families here carry membership by construction: diagonals
//! are only ever added inside a single quadrilateral face, so each pair of
//! crossing edges crosses within its own face.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// 3-cube embedded as two nested squares, with both diagonals added to each
/// of the six 4-faces. 8 vertices, 24 = 4*8 - 8 edges, 6-regular.
pub fn gen_q3_diagonals() -> Graph {
    // Q3 on bit-vectors; each face fixes one coordinate.
    let mut edges = std::collections::BTreeSet::new();
    for u in 0u32..8 {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.insert((u, v));
            }
        }
    }
    // face with coordinate `axis` fixed to `val`: clique its 4 vertices
    for axis in 0..3 {
        for val in 0..2u32 {
            let face: Vec<u32> = (0..8).filter(|u| (u >> axis) & 1 == val).collect();
            clique_into(&mut edges, &face);
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(8, &edges).expect("q3 construction")
}

/// Rhombicuboctahedron (24 vertices, 4-regular, eight 3-faces and eighteen
/// 4-faces) with both diagonals added to every 4-face: 7-regular, 84 edges.
pub fn gen_rhombicuboctahedron_diagonals() -> Graph {
    let s = 1.0 + std::f64::consts::SQRT_2;
    // all permutations of (+-1, +-1, +-s)
    let mut pts: Vec<[f64; 3]> = Vec::new();
    for axis in 0..3 {
        for sx in [-1.0f64, 1.0] {
            for sy in [-1.0f64, 1.0] {
                for ss in [-s, s] {
                    let mut p = [sx, sy, ss];
                    p.swap(2, axis);
                    pts.push(p);
                }
            }
        }
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| dist2(a, b) < 1e-9);
    assert_eq!(pts.len(), 24);

    let mut edges = std::collections::BTreeSet::new();
    for i in 0..24 {
        for j in (i + 1)..24 {
            if (dist2(&pts[i], &pts[j]) - 4.0).abs() < 1e-9 {
                edges.insert((i as u32, j as u32));
            }
        }
    }
    // The 18 square faces are the argmax sets of the 6 axis directions and
    // the 12 (+-1, +-1, 0)-type directions; clique each one.
    let mut dirs: Vec<[f64; 3]> = Vec::new();
    for axis in 0..3 {
        for sign in [-1.0, 1.0] {
            let mut d = [0.0; 3];
            d[axis] = sign;
            dirs.push(d);
        }
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for sa in [-1.0, 1.0] {
            for sb in [-1.0, 1.0] {
                let mut d = [0.0; 3];
                d[a] = sa;
                d[b] = sb;
                dirs.push(d);
            }
        }
    }
    for d in dirs {
        let best = pts
            .iter()
            .map(|p| dot(p, &d))
            .fold(f64::NEG_INFINITY, f64::max);
        let face: Vec<u32> = (0..24)
            .filter(|&i| dot(&pts[i], &d) > best - 1e-9)
            .map(|i| i as u32)
            .collect();
        assert_eq!(face.len(), 4, "expected a square face");
        clique_into(&mut edges, &face);
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(24, &edges).expect("rhombicuboctahedron construction")
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn dist2(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)
}

fn clique_into(edges: &mut std::collections::BTreeSet<(u32, u32)>, verts: &[u32]) {
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            edges.insert((u.min(v), u.max(v)));
        }
    }
}

/// Open rows x cols grid quadrangulation with both diagonals added to every
/// unit face. Interior vertices have degree 8.
pub fn gen_grid_diagonals(rows: usize, cols: usize) -> Result<Graph> {
    if rows < 2 || cols < 2 {
        return Err(Error::invalid("grid_diag requires rows, cols >= 2"));
    }
    let id = |i: usize, j: usize| (i * cols + j) as u32;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if i + 1 < rows && j + 1 < cols {
                edges.push((id(i, j), id(i + 1, j + 1)));
                edges.push((id(i, j + 1), id(i + 1, j)));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges)
}

pub fn gen_complete(t: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..t as u32 {
        for v in (u + 1)..t as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(t, &edges).expect("complete graph")
}

pub fn gen_complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..p as u32 {
        for v in 0..q as u32 {
            edges.push((u, p as u32 + v));
        }
    }
    Graph::from_edges(p + q, &edges).expect("complete bipartite graph")
}

/// Random induced subgraph of a grid_diag instance. Subgraphs of 1-planar
/// graphs are 1-planar, so membership is automatic.
pub fn gen_random_subgraph(rows: usize, cols: usize, keep: usize, seed: u64) -> Result<Graph> {
    let base = gen_grid_diagonals(rows, cols)?;
    if keep > base.n() {
        return Err(Error::invalid("keep exceeds base graph order"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verts: Vec<u32> = base.vertices().collect();
    verts.shuffle(&mut rng);
    let mut kept = verts[..keep].to_vec();
    kept.sort_unstable();
    base.induced(&kept)
}

/// Parameterized generator request, as accepted by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GenSpec {
    Q3Diag,
    RhombiDiag,
    GridDiag { rows: usize, cols: usize },
    Complete { t: usize },
    CompleteBipartite { p: usize, q: usize },
    RandomSubgraph { rows: usize, cols: usize, keep: usize, seed: u64 },
}

impl GenSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GenSpec::Q3Diag => Ok(gen_q3_diagonals()),
            GenSpec::RhombiDiag => Ok(gen_rhombicuboctahedron_diagonals()),
            GenSpec::GridDiag { rows, cols } => gen_grid_diagonals(rows, cols),
            GenSpec::Complete { t } => Ok(gen_complete(t)),
            GenSpec::CompleteBipartite { p, q } => Ok(gen_complete_bipartite(p, q)),
            GenSpec::RandomSubgraph { rows, cols, keep, seed } => {
                gen_random_subgraph(rows, cols, keep, seed)
            }
        }
    }
}
