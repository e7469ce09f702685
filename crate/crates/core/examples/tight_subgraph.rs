//! The tight subgraph: edges with zero reduced cost under optimal prices.
//! Its perfect matchings are exactly the minimum-weight perfect matchings.

use bimatch::fixtures::{fig1, fig1_p1, fig1_p2};
use bimatch::{build_gcs, max_cardinality_matching};

fn main() -> bimatch::Result<()> {
    let g = fig1();
    for (name, prices) in [("P1", fig1_p1()), ("P2", fig1_p2())] {
        let gcs = build_gcs(&g, &prices)?;
        let shown: Vec<String> = gcs
            .edges()
            .iter()
            .map(|&id| {
                let e = g.edge(id);
                format!("u{}v{}", e.u, e.v)
            })
            .collect();
        println!("{name}: tight {}", shown.join(" "));
        for (id, slack) in gcs.dropped() {
            let e = g.edge(id);
            println!("    u{}v{} dropped, slack {slack}", e.u, e.v);
        }
        let m = gcs.lift(&max_cardinality_matching(gcs.graph()));
        println!("    a perfect matching inside: {:?}, weight {}", m.edges(), m.weight(&g));
    }
    Ok(())
}
