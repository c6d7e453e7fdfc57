//! Record a solve trace, then deterministically replay it and compare the
//! move lists byte for byte.

use equicolor::gen::gen_grid_diagonals;
use equicolor::solver::TraceJson;
use equicolor::{equitable_color, Mode, SolverConfig};

fn main() -> equicolor::Result<()> {
    let g = gen_grid_diagonals(16, 16)?;
    let cfg = SolverConfig::new(14, Mode::OnePlanar);

    let sol = equitable_color(&g, &cfg)?;
    let recorded = TraceJson::new(&g, &cfg, &sol);
    let bytes = serde_json::to_vec_pretty(&recorded)?;
    println!("recorded {} moves ({} bytes of JSON)", recorded.moves.len(), bytes.len());

    let replayed: TraceJson = serde_json::from_slice(&bytes)?;
    let again = equitable_color(&g, &cfg)?;
    assert_eq!(again.trace, replayed.moves, "replay must be identical");
    assert_eq!(serde_json::to_vec_pretty(&TraceJson::new(&g, &cfg, &again))?, bytes);
    println!("replay matched all {} moves", replayed.moves.len());

    // the tags say which repair produced each move
    let mut tags: std::collections::BTreeMap<&str, usize> = Default::default();
    for mv in &recorded.moves {
        *tags.entry(mv.tag.as_str()).or_default() += 1;
    }
    println!("moves by tag: {tags:?}");
    Ok(())
}
