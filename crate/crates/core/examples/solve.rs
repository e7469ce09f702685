//! Solve a small assignment problem and round ε-optimal auction prices to
//! exact optimal prices.
//!
//! ```text
//! cargo run --example solve
//! ```

use bimatch::prices::{check_complementary_slackness, check_eps_optimal, dual_objective, round_to_optimal};
use bimatch::{solve_auction, solve_exact, Price, WeightedBipartiteGraph};

fn main() -> bimatch::Result<()> {
    // Three workers, three jobs; weights are costs.
    let g = WeightedBipartiteGraph::new(
        3,
        3,
        vec![(0, 0, 4), (0, 1, 1), (0, 2, 3), (1, 0, 2), (1, 1, 0), (1, 2, 5), (2, 0, 3), (2, 1, 2), (2, 2, 2)],
    )?;

    let exact = solve_exact(&g)?;
    println!("exact:   weight {} edges {:?}", exact.matching.weight(&g), exact.matching.edges());

    let eps = Price::new(1, g.n() as i64 + 1);
    let auction = solve_auction(&g, eps)?;
    assert!(check_eps_optimal(&g, &auction.matching, &auction.prices, eps)?);
    println!(
        "auction: weight {} after {} phases, prices have denominator {}",
        auction.matching.weight(&g),
        auction.stats.phases,
        auction.prices.den()
    );

    let prices = round_to_optimal(&g, &auction.matching, &auction.prices)?;
    assert!(check_complementary_slackness(&g, &auction.matching, &prices)?);
    println!("rounded: pi = {:?}, p = {:?}", prices.pi_numerators(), prices.p_numerators());
    println!("dual objective {} equals the optimum", dual_objective(&prices));
    Ok(())
}
