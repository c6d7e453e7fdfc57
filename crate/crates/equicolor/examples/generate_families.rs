//! Build the bundled graph families and print their shapes.

use equicolor::gen;
use equicolor::graph::{check_edge_bound, EdgeBound};

fn main() {
    let families = [
        ("q3 + face diagonals", gen::gen_q3_diagonals()),
        (
            "rhombicuboctahedron + face diagonals",
            gen::gen_rhombicuboctahedron_diagonals(),
        ),
        ("5x5 grid + face diagonals", gen::gen_grid_diagonals(5, 5).unwrap()),
        ("K6", gen::gen_complete(6)),
        ("K_{7,7}", gen::gen_complete_bipartite(7, 7)),
        (
            "random induced subgraph of 8x8 grid",
            gen::gen_random_subgraph(8, 8, 40, 1).unwrap(),
        ),
    ];
    for (name, g) in families {
        println!(
            "{name:<40} n={:<3} m={:<3} max_deg={} within_4n_minus_8={}",
            g.n(),
            g.m(),
            g.max_degree(),
            check_edge_bound(&g, EdgeBound::General),
        );
    }

    // the same families through the serializable spec used by the CLI
    let spec: gen::GenSpec = serde_json::from_str(r#"{"family":"grid_diag","rows":3,"cols":4}"#).unwrap();
    let g = spec.build().unwrap();
    println!("\nfrom spec {spec:?}: n={} m={}", g.n(), g.m());
}
