//! Which edges can appear in some minimum-weight perfect matching?

use bimatch::format::parse_instance;
use bimatch::{allowed_edges, optimal_edges, solve_via_rounding};

const INSTANCE: &str = "c two optimal matchings share the edge 3-3
p bip 3 3 7
e 1 1 1
e 1 2 1
e 2 1 1
e 2 2 1
e 2 3 4
e 3 2 6
e 3 3 2
";

fn main() -> bimatch::Result<()> {
    let g = parse_instance(INSTANCE)?;
    let label = |id: usize| {
        let e = g.edge(id);
        format!("{}-{}", e.u + 1, e.v + 1)
    };

    let allowed = allowed_edges(&g)?;
    println!("in some perfect matching:         {:?}", allowed.iter().copied().map(label).collect::<Vec<_>>());

    let prices = solve_via_rounding(&g)?.prices;
    let opt = optimal_edges(&g, &prices)?;
    println!("in some min-weight perfect match: {:?}", opt.iter().copied().map(label).collect::<Vec<_>>());
    Ok(())
}
