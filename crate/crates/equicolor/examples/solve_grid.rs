//! Solve grid-with-diagonals instances across several r values and report
//! solver statistics.

use equicolor::gen::gen_grid_diagonals;
use equicolor::{equitable_color, verify_equitable, verify_proper, Mode, SolverConfig};
use std::time::Instant;

fn main() -> equicolor::Result<()> {
    for (rows, cols) in [(5, 5), (8, 8), (10, 10), (16, 16), (20, 25)] {
        let g = gen_grid_diagonals(rows, cols)?;
        for r in [13, 14, 16] {
            let mut cfg = SolverConfig::new(r, Mode::OnePlanar);
            cfg.audit = true;
            let start = Instant::now();
            let sol = equitable_color(&g, &cfg)?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            assert!(verify_proper(&g, &sol.coloring)? && verify_equitable(&sol.coloring));
            println!(
                "{rows:>2}x{cols:<2} r={r:<2} {ms:7.2} ms  fixes={:<4} improvements={:<3} \
                 audit_entries={:<3} violations={}",
                sol.stats.fix_phases,
                sol.stats.improvement_rounds,
                sol.stats.claim_entries,
                sol.stats.claim_violations.len(),
            );
        }
    }
    Ok(())
}
