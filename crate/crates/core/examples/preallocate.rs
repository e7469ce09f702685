//! Among all minimum-weight assignments, pick one that honours as many
//! requested pairings as possible.

use bimatch::{preallocate, solve_exact, PreferenceSet, WeightedBipartiteGraph};

fn main() -> bimatch::Result<()> {
    let g = WeightedBipartiteGraph::new(
        3,
        3,
        vec![(0, 0, 2), (0, 1, 2), (1, 0, 2), (1, 1, 2), (1, 2, 5), (2, 1, 3), (2, 2, 1)],
    )?;
    let wanted = [g.find_edge(0, 1), g.find_edge(1, 0), g.find_edge(1, 2)];
    let prefs = PreferenceSet::new(&g, wanted.into_iter().flatten())?;

    let plain = solve_exact(&g)?;
    println!("any optimum:      {:?} honours {}", plain.matching.edges(), prefs.hits(&plain.matching));

    let m = preallocate(&g, &plain.prices, &prefs)?;
    println!("preallocated:     {:?} honours {}", m.edges(), prefs.hits(&m));
    assert_eq!(m.weight(&g), plain.matching.weight(&g));
    Ok(())
}
