//! Optimum matchings (maximum cardinality, then minimum weight) when the sides
//! differ in size or no perfect matching exists.

use bimatch::transform::{first_doubling, optimal_edges_general, resolve_strategy, second_doubling};
use bimatch::{optimum_matching, Strategy, WeightedBipartiteGraph};

fn main() -> bimatch::Result<()> {
    // Five applicants, two positions.
    let g = WeightedBipartiteGraph::new(
        5,
        2,
        vec![(0, 0, 3), (1, 0, 1), (1, 1, 4), (2, 1, 2), (3, 0, 1), (4, 1, 7)],
    )?;
    println!("n = {}, s = {}, m = {}", g.n(), g.s(), g.m());
    println!("first doubling:  {} edges", first_doubling(&g)?.graph.m());
    println!("second doubling: {} edges", second_doubling(&g, 0)?.graph.m());

    for strategy in [Strategy::FirstDoubling, Strategy::SecondDoubling, Strategy::ArtificialVertices, Strategy::Auto] {
        let m = optimum_matching(&g, strategy)?;
        println!("{strategy:?}: {:?} weight {}", m.edges(), m.weight(&g));
    }
    println!("auto chose {:?}", resolve_strategy(&g, Strategy::Auto)?);

    let edges = optimal_edges_general(&g, Strategy::Auto)?;
    println!("edges in some optimum matching: {:?}", edges.as_slice());

    // Position v1 has no applicant at all; only the first doubling handles it.
    let sparse = WeightedBipartiteGraph::new(3, 2, vec![(0, 0, 5), (1, 0, 2)])?;
    let m = optimum_matching(&sparse, Strategy::Auto)?;
    println!("sparse: {:?} (cardinality {})", m.edges(), m.cardinality());
    Ok(())
}
