//! Stream every minimum-weight perfect matching, stopping after a limit.

use bimatch::{enumerate_min_weight_pms, solve_exact, EnumerationSink, Matching, WeightedBipartiteGraph};

fn main() -> bimatch::Result<()> {
    // A 4x4 grid of equal costs plus one expensive cell: 4! - 3! = 18 optima.
    let mut edges = Vec::new();
    for u in 0..4 {
        for v in 0..4 {
            edges.push((u, v, if (u, v) == (0, 0) { 9 } else { 1 }));
        }
    }
    let g = WeightedBipartiteGraph::new(4, 4, edges)?;
    let prices = solve_exact(&g)?.prices;

    let total = enumerate_min_weight_pms(&g, &prices, &mut EnumerationSink::new(|_: &Matching| {}))?;
    println!("{total} minimum-weight perfect matchings");

    let mut first = Vec::new();
    let shown = enumerate_min_weight_pms(
        &g,
        &prices,
        &mut EnumerationSink::with_limit(|m: &Matching| first.push(m.edges()), 5),
    )?;
    for (i, m) in first.iter().enumerate() {
        let pairs: Vec<_> = m.iter().map(|&id| (g.edge(id).u, g.edge(id).v)).collect();
        println!("  #{} {:?}", i + 1, pairs);
    }
    println!("stopped after {shown}");
    Ok(())
}
