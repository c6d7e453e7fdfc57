//! Exact equitable-colorability profiles from the brute-force oracle.
//!
//! K_{7,7} is the classical obstruction: despite max degree 7 it has no
//! equitable k-coloring for k in {3, 5, 7}, so a bound of the form
//! "r >= max degree" cannot hold without extra sparsity assumptions.

use equicolor::gen::{gen_complete_bipartite, gen_q3_diagonals};
use equicolor::oracle::{brute_force_equitable, chi_e_profile};
use std::time::Instant;

fn main() -> equicolor::Result<()> {
    let g = gen_complete_bipartite(7, 7);
    let start = Instant::now();
    let profile = chi_e_profile(&g, 14)?;
    println!(
        "K_7,7 equitably k-colorable for k in {profile:?}  ({} ms)",
        start.elapsed().as_millis()
    );
    let gaps: Vec<usize> = (2..=14).filter(|k| !profile.contains(k)).collect();
    println!("gaps: {gaps:?}");

    // a 6-regular 1-planar graph on 8 vertices meeting the 4n-8 edge bound
    let q3 = gen_q3_diagonals();
    for k in 2..=7 {
        let feasible = brute_force_equitable(&q3, k)?.is_some();
        println!("q3+diagonals, k={k}: {}", if feasible { "feasible" } else { "infeasible" });
    }
    Ok(())
}
