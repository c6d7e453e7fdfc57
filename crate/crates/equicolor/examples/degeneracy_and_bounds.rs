//! Degeneracy orders and the hereditary 4n-8 edge bound, including the two
//! tight instances: q3+diagonals (6-regular, m = 4n-8) and the
//! rhombicuboctahedron+diagonals (7-regular, degeneracy 7).

use equicolor::gen;
use equicolor::graph::{check_edge_bound, degeneracy_order, EdgeBound, Graph};

fn report(name: &str, g: &Graph) {
    let d = degeneracy_order(g);
    println!(
        "{name:<14} n={:<3} m={:<3} 4n-8={:<3} degeneracy={} order_head={:?}",
        g.n(),
        g.m(),
        4 * g.n() as i64 - 8,
        d.degeneracy,
        &d.order[..d.order.len().min(6)],
    );
}

fn main() -> equicolor::Result<()> {
    let q3 = gen::gen_q3_diagonals();
    let rhombi = gen::gen_rhombicuboctahedron_diagonals();
    let grid = gen::gen_grid_diagonals(6, 6)?;
    report("q3+diag", &q3);
    report("rhombi+diag", &rhombi);
    report("grid 6x6", &grid);

    // q3+diag meets the edge bound with equality: removing any vertex must
    // therefore remove at least 4 edges, and it does (6-regular)
    assert_eq!(q3.m(), 4 * q3.n() - 8);
    assert!(check_edge_bound(&q3, EdgeBound::General));

    // the bound is hereditary: every induced subgraph of grid 6x6 obeys it
    let mut g = grid.clone();
    let mut kept: Vec<u32> = g.vertices().collect();
    while kept.len() > 3 {
        kept.pop();
        g = grid.induced(&kept)?;
        assert!(check_edge_bound(&g, EdgeBound::General));
    }
    println!("all suffix-induced subgraphs of grid 6x6 satisfy m <= 4n - 8");

    // K7 has 21 > 4*7 - 8 = 20 edges and fails
    assert!(!check_edge_bound(&gen::gen_complete(7), EdgeBound::General));
    println!("K7 violates the bound as expected");
    Ok(())
}
