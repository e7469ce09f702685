use std::collections::VecDeque;

use num_integer::Integer;

use super::{require_perfect_matchable, SolveResult, SolveStats};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, WeightedBipartiteGraph};
use crate::matching::Matching;
use crate::prices::{round_to_optimal, DualPrices, Price};

/// ε-scaling forward auction for the min-cost assignment problem.
///
/// Weights are multiplied by a common denominator `den` (the lcm of `n+1`
/// and the denominator of `eps_final`), so every price and every ε is an
/// integer number of `1/den` units. ε starts at `W` and halves each phase
/// down to `eps_final`; prices carry over between phases.
///
/// The result is ε-optimal at `eps_final`: `π(u) + p(v) <= w(uv) + eps_final`
/// on every edge with equality on matched edges.
pub fn solve_auction(g: &WeightedBipartiteGraph, eps_final: Price) -> Result<SolveResult> {
    if eps_final <= Price::from_integer(0) {
        return Err(Error::InvalidEpsilon { epsilon: eps_final.to_string() });
    }
    require_perfect_matchable(g)?;
    let n = g.n();
    let den = (n as i64 + 1).lcm(eps_final.denom());
    let eps_units = eps_final.numer() * (den / eps_final.denom());

    let cost: Vec<i64> = g.edges().iter().map(|e| e.w * den).collect();
    let mut p = vec![0i64; g.s()];
    let mut mate_u: Vec<Option<EdgeId>> = vec![None; n];
    let mut mate_v: Vec<Option<EdgeId>> = vec![None; g.s()];
    let mut stats = SolveStats::default();

    let mut eps = eps_units.max(g.max_abs_weight() * den);
    let mut queue = VecDeque::with_capacity(n);
    loop {
        stats.phases += 1;
        mate_u.iter_mut().for_each(|x| *x = None);
        mate_v.iter_mut().for_each(|x| *x = None);
        queue.clear();
        queue.extend(0..n);

        while let Some(u) = queue.pop_front() {
            // Best and second-best reduced value c(uz) - p(z) over u's edges.
            let mut best: Option<(i64, EdgeId)> = None;
            let mut second = i64::MAX;
            for &id in g.u_edges(u) {
                let value = cost[id] - p[g.edge(id).v];
                match best {
                    Some((b, _)) if value >= b => second = second.min(value),
                    _ => {
                        if let Some((b, _)) = best {
                            second = second.min(b);
                        }
                        best = Some((value, id));
                    }
                }
            }
            let (best_value, id) = best.expect("feasible graph has no isolated vertex");
            if second == i64::MAX {
                second = best_value;
            }
            let v = g.edge(id).v;
            // Lower p(v) until v is worth `second + eps` to u.
            p[v] = cost[id] - second - eps;
            if let Some(old) = mate_v[v].replace(id) {
                let loser = g.edge(old).u;
                mate_u[loser] = None;
                queue.push_back(loser);
            }
            mate_u[u] = Some(id);
            stats.iterations += 1;
        }

        if eps == eps_units {
            break;
        }
        eps = (eps / 2).max(eps_units);
    }

    let pi = (0..n)
        .map(|u| {
            let id = mate_u[u].expect("auction ends with a perfect matching");
            cost[id] - p[g.edge(id).v]
        })
        .collect();
    let matching = Matching::from_edges(g, mate_u.iter().flatten().copied()).expect("auction keeps a matching");
    Ok(SolveResult { matching, prices: DualPrices::new(den, pi, p), stats })
}

/// Auction at ε = 1/(n+1) followed by rounding to integral optimal prices.
pub fn solve_via_rounding(g: &WeightedBipartiteGraph) -> Result<SolveResult> {
    let eps = Price::new(1, g.n() as i64 + 1);
    let SolveResult { matching, prices, stats } = solve_auction(g, eps)?;
    let prices = round_to_optimal(g, &matching, &prices)?;
    Ok(SolveResult { matching, prices, stats })
}
