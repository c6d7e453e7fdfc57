//! Walk through the class digraph machinery on a small hand-built instance:
//! arcs and witnesses, accessible and terminal classes, solo-neighbor data,
//! and exact rational weights.

use equicolor::coloring::Coloring;
use equicolor::digraph::{dump, solo_analysis, weight, ClassCounts, ClassDigraph};
use equicolor::graph::Graph;

fn main() -> equicolor::Result<()> {
    // 7 vertices in 4 classes with class 0 one short:
    //   V0 = {0}, V1 = {1, 2}, V2 = {3, 4}, V3 = {5, 6}
    let g = Graph::from_edges(
        7,
        &[(4, 5), (4, 6), (1, 5), (1, 6), (0, 5), (0, 6), (5, 3), (0, 3), (0, 4)],
    )?;
    let c = Coloring::from_assignment(&[0, 1, 1, 2, 2, 3, 3], 4)?;
    let counts = ClassCounts::build(&g, &c);
    let d = ClassDigraph::build(&c, &counts, 0)?;

    println!("deficient class: {}  (s = {})", d.deficient, d.s);
    println!("arcs (i -> j means some vertex of Vi has no neighbor in Vj):");
    for i in 0..d.r {
        for j in 0..d.r {
            if i != j && d.has_arc(i, j) {
                println!("  V{i} -> V{j}  witnesses {:?}", d.witnesses(i, j));
            }
        }
    }
    println!("accessible A = {:?} (a = {})", d.accessible_classes(), d.a());
    println!("non-accessible B = {:?} (b = {})", d.nonaccessible_classes(), d.b());
    println!("terminal classes = {:?}", d.terminal_set());
    println!("path V2 -> deficient: {:?}", d.path_to_deficient(2));

    // solo neighbors of vertex 1 (class V1, accessible): B-vertices whose
    // only neighbor in V1 is vertex 1
    let solo = solo_analysis(&g, &c, &counts, &d, 1)?;
    println!(
        "\nvertex 1: Q = {:?}, nice Q' = {:?}, B'(v) = {:?}",
        solo.q, solo.qp, solo.bp
    );

    // exact weights: every B-vertex spreads one unit over its neighbors in
    // the queried class; halving the classes in W halves their contribution
    for i in d.accessible_classes() {
        let wq = weight(&g, &c, &counts, &d, i, &[])?;
        let per_vertex: Vec<String> = wq.values.iter().map(|(v, f)| format!("f({v})={f}")).collect();
        println!("class V{i}: {} total, {}", wq.total(), per_vertex.join(" "));
    }
    let halved = weight(&g, &c, &counts, &d, 1, &[3])?;
    println!("class V1 with W = {{V3}}: total {}", halved.total());

    println!("\nfull dump:\n{}", serde_json::to_string_pretty(&dump(&g, &c, &counts, &d)?)?);
    Ok(())
}
