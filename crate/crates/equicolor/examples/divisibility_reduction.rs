//! Show both branches of the divisibility reduction at r = 13. When n is not
//! divisible by r the solver either pads the graph with a small clique
//! (deficit t <= 6) or strips r - t leading degeneracy-order vertices and
//! refills them afterwards (t >= 7).

use equicolor::gen::gen_random_subgraph;
use equicolor::{equitable_color, Mode, SolverConfig};

fn main() -> equicolor::Result<()> {
    let r = 13;
    for keep in 27..=39 {
        let g = gen_random_subgraph(8, 8, keep, 7)?;
        let t = (r - g.n() % r) % r;
        let sol = equitable_color(&g, &SolverConfig::new(r, Mode::OnePlanar))?;
        let branch = match (sol.stats.padded, sol.stats.stripped) {
            (0, 0) => "none".to_string(),
            (p, 0) => format!("pad +K_{p}"),
            (0, s) => format!("strip {s}"),
            _ => unreachable!(),
        };
        println!(
            "n={:<2} n mod r={:<2} deficit t={t:<2} -> {branch:<10} sizes={:?}",
            g.n(),
            g.n() % r,
            sol.coloring.class_sizes(),
        );
    }
    Ok(())
}
