//! The fallback mode handles arbitrary graphs with r >= max degree + 1,
//! cross-checked against the brute-force oracle on small random graphs.

use equicolor::gen::{gen_complete, gen_q3_diagonals};
use equicolor::graph::Graph;
use equicolor::oracle::brute_force_equitable;
use equicolor::{hs_color, verify_equitable, verify_proper, SearchBudget};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(1..=10usize);
    let p = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn main() -> equicolor::Result<()> {
    for (name, g) in [("q3+diag", gen_q3_diagonals()), ("K6", gen_complete(6))] {
        let r = g.max_degree() + 1;
        let sol = hs_color(&g, r, SearchBudget::default(), 0)?;
        assert!(verify_proper(&g, &sol.coloring)? && verify_equitable(&sol.coloring));
        println!("{name}: r={r} sizes={:?}", sol.coloring.class_sizes());
    }

    // agreement with the oracle at the tight bound r = max degree + 1
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut solved = 0;
    for _ in 0..100 {
        let g = random_graph(&mut rng);
        let r = g.max_degree() + 1;
        let oracle_feasible = brute_force_equitable(&g, r)?.is_some();
        let sol = hs_color(&g, r, SearchBudget::default(), 0)?;
        assert!(oracle_feasible, "r >= max degree + 1 is always feasible");
        assert!(verify_proper(&g, &sol.coloring)? && verify_equitable(&sol.coloring));
        solved += 1;
    }
    println!("100 random graphs at r = max degree + 1: {solved} solved, oracle agrees on all");
    Ok(())
}
