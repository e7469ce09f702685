//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bimatch::allowed::optimal_edges;
use bimatch::enumerate::{enumerate_min_weight_pms, EnumerationSink};
use bimatch::fixtures::{fig1, fig1_p1, fig1_p2};
use bimatch::prealloc::{preallocate, PreferenceSet};
use bimatch::prices::{check_complementary_slackness, check_eps_optimal, round_to_optimal, DualPrices, Price};
use bimatch::solver::{solve_auction, solve_exact};
use bimatch::tight::build_gcs;
use bimatch::transform::{
    artificial_vertices, first_doubling, optimum_matching_with_k, second_doubling, Strategy,
};
use bimatch::{max_cardinality_matching, Matching, WeightedBipartiteGraph};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn edge_sets(ms: &[Matching]) -> BTreeSet<Vec<usize>> {
    ms.iter().map(Matching::edges).collect()
}

fn golden_fixture() -> Outcome {
    let g = fig1();
    let start = Instant::now();
    let e1 = build_gcs(&g, &fig1_p1()).map_err(|e| e.to_string())?.edges().to_vec();
    let e2 = build_gcs(&g, &fig1_p2()).map_err(|e| e.to_string())?.edges().to_vec();
    let elapsed = start.elapsed();
    // u0v0=0, u0v1=1, u1v1=2, u2v1=4, u2v2=5
    ensure(e1 == [0, 2, 4, 5], || format!("E_cs(P1) = {e1:?}"))?;
    ensure(e2 == [0, 1, 2, 4, 5], || format!("E_cs(P2) = {e2:?}"))?;
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!("E_cs(P1), E_cs(P2) exact; {elapsed:?}"))
}

fn tight_subgraph_optima() -> Outcome {
    let mut r = rng(2);
    let start = Instant::now();
    for i in 0..500 {
        let g = random_feasible_square(&mut r, 7, (-9, 9));
        let solved = solve_exact(&g).map_err(|e| e.to_string())?;
        let gcs = build_gcs(&g, &solved.prices).map_err(|e| e.to_string())?;
        let in_gcs: BTreeSet<Vec<usize>> = all_perfect_matchings(gcs.graph())
            .into_iter()
            .map(|m| {
                let mut ids: Vec<usize> = m.into_iter().map(|id| gcs.parent_id(id)).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        let (_, expected) = min_weight_perfect(&g);
        ensure(in_gcs == expected, || format!("instance {i}: {in_gcs:?} != {expected:?}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("500 instances, {elapsed:?}"))
}

fn rounding_suite() -> Outcome {
    let mut r = rng(3);
    for i in 0..500 {
        let g = random_feasible_square(&mut r, 7, (-9, 9));
        let eps = Price::new(1, g.n() as i64 + 1);
        let auction = solve_auction(&g, eps).map_err(|e| e.to_string())?;
        let prices = round_to_optimal(&g, &auction.matching, &auction.prices).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(prices.is_integral(), || format!("instance {i}: non-integral output"))?;
        let cs = check_complementary_slackness(&g, &auction.matching, &prices).map_err(|e| e.to_string())?;
        ensure(cs, || format!("instance {i}: rounded prices fail complementary slackness"))?;
        let (best, _) = min_weight_perfect(&g);
        ensure(Some(auction.matching.weight(&g)) == best, || format!("instance {i}: weight mismatch"))?;
    }
    Ok("500 instances".into())
}

fn eps_bound() -> Outcome {
    let mut r = rng(4);
    let mut slack_used = 0;
    for i in 0..200 {
        let g = random_feasible_square(&mut r, 7, (-9, 9));
        let n = g.n() as i64;
        let eps = [Price::new(1, 2), Price::new(1, 4), Price::new(1, n + 1)][i % 3];
        let res = solve_auction(&g, eps).map_err(|e| e.to_string())?;
        let ok = check_eps_optimal(&g, &res.matching, &res.prices, eps).map_err(|e| e.to_string())?;
        ensure(ok, || format!("pair {i} is not {eps}-optimal"))?;
        let (best, _) = min_weight_perfect(&g);
        let best = best.expect("feasible");
        let w = res.matching.weight(&g);
        ensure(Price::from_integer(w) <= Price::from_integer(best) + eps * n, || {
            format!("pair {i}: w(M) = {w} > {best} + {n}·{eps}")
        })?;
        if w > best {
            slack_used += 1;
        }
    }
    let mut constructed = 0;
    let mut strict = 0;
    while constructed < 200 {
        let g = random_feasible_square(&mut r, 6, (-9, 9));
        let n = g.n() as i64;
        let eps = [Price::new(1, 2), Price::new(1, 4), Price::new(1, n + 1)][constructed % 3];
        let all: Vec<Vec<usize>> = all_perfect_matchings(&g).into_iter().collect();
        let ids = all[r.gen_range(0..all.len())].clone();
        let m = Matching::from_edges(&g, ids).map_err(|e| e.to_string())?;
        let Some(prices) = eps_optimal_prices(&g, &m, eps) else { continue };
        constructed += 1;
        let ok = check_eps_optimal(&g, &m, &prices, eps).map_err(|e| e.to_string())?;
        ensure(ok, || format!("constructed pair {constructed} rejected at {eps}"))?;
        let best = min_weight_perfect(&g).0.expect("feasible");
        let w = m.weight(&g);
        ensure(Price::from_integer(w) <= Price::from_integer(best) + eps * n, || {
            format!("constructed pair {constructed}: w(M) = {w} > {best} + {n}·{eps}")
        })?;
        if w > best {
            strict += 1;
        }
    }
    ensure(strict > 0, || "no constructed pair was suboptimal".into())?;
    Ok(format!("200 auction pairs ({slack_used} suboptimal), 200 constructed pairs ({strict} suboptimal)"))
}

/// Prices under which `m` is eps-optimal, if any exist. Matched edges are kept
/// tight, so every unmatched edge `(u, v)` becomes a difference constraint
/// `p(v) <= p(mate(u)) + w(u, v) - w(u, mate(u)) + eps`, solved by Bellman-Ford.
fn eps_optimal_prices(g: &WeightedBipartiteGraph, m: &Matching, eps: Price) -> Option<DualPrices> {
    let den = *eps.denom();
    let eps_units = *eps.numer();
    let n = g.n();
    let mate_edge: Vec<usize> = (0..n).map(|u| m.mate_of_u(u).expect("perfect")).collect();
    let arcs: Vec<(usize, usize, i64)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(id, _)| !m.contains(g, id))
        .map(|(_, e)| {
            let own = g.edge(mate_edge[e.u]);
            (own.v, e.v, den * (e.w - own.w) + eps_units)
        })
        .collect();
    let mut p = vec![0i64; g.s()];
    for round in 0..=n {
        let mut changed = false;
        for &(from, to, len) in &arcs {
            if p[from] + len < p[to] {
                p[to] = p[from] + len;
                changed = true;
            }
        }
        if !changed {
            let pi = (0..n).map(|u| {
                let e = g.edge(mate_edge[u]);
                den * e.w - p[e.v]
            });
            return Some(DualPrices::new(den, pi.collect(), p));
        }
        if round == n {
            break;
        }
    }
    None
}

fn optimal_edges_suite() -> Outcome {
    let g = fig1();
    let fig = optimal_edges(&g, &fig1_p1()).map_err(|e| e.to_string())?;
    ensure(fig.as_slice() == [0, 2, 5], || format!("FIG1 E_opt = {fig:?}"))?;
    let mut r = rng(5);
    for i in 0..500 {
        let g = random_feasible_square(&mut r, 7, (-9, 9));
        let prices = solve_exact(&g).map_err(|e| e.to_string())?.prices;
        let got = optimal_edges(&g, &prices).map_err(|e| e.to_string())?.into_vec();
        let expected = union_of(&min_weight_perfect(&g).1);
        ensure(got == expected, || format!("instance {i}: {got:?} != {expected:?}"))?;
    }
    Ok("FIG1 + 500 instances".into())
}

fn enumeration_suite() -> Outcome {
    let mut r = rng(6);
    for i in 0..500 {
        let g = random_feasible_square(&mut r, 7, (-9, 9));
        let prices = solve_exact(&g).map_err(|e| e.to_string())?.prices;
        let mut seen = Vec::new();
        let count = enumerate_min_weight_pms(&g, &prices, &mut EnumerationSink::new(|m: &Matching| seen.push(m.clone())))
            .map_err(|e| e.to_string())?;
        let (_, expected) = min_weight_perfect(&g);
        let got = edge_sets(&seen);
        ensure(count == seen.len() && got.len() == seen.len(), || format!("instance {i}: duplicates emitted"))?;
        ensure(got == expected, || format!("instance {i}: {got:?} != {expected:?}"))?;

        let k = r.gen_range(0..=expected.len() + 1);
        let mut limited = Vec::new();
        let emitted =
            enumerate_min_weight_pms(&g, &prices, &mut EnumerationSink::with_limit(|m: &Matching| limited.push(m.edges()), k))
                .map_err(|e| e.to_string())?;
        let distinct: BTreeSet<_> = limited.iter().cloned().collect();
        ensure(emitted == k.min(expected.len()) && distinct.len() == emitted, || {
            format!("instance {i}: limit {k} emitted {emitted} of {}", expected.len())
        })?;
    }
    Ok("500 instances, limits honoured".into())
}

fn preallocation_suite() -> Outcome {
    let mut r = rng(7);
    for i in 0..300 {
        let g = random_feasible_square(&mut r, 7, (-9, 9));
        let share: f64 = r.gen_range(0.0..0.6);
        let ids: Vec<usize> = (0..g.m()).filter(|_| r.gen_bool(share)).collect();
        let prefs = PreferenceSet::new(&g, ids).map_err(|e| e.to_string())?;
        let prices = solve_exact(&g).map_err(|e| e.to_string())?.prices;
        let m = preallocate(&g, &prices, &prefs).map_err(|e| e.to_string())?;
        let (best, optimal) = min_weight_perfect(&g);
        ensure(m.is_perfect() && Some(m.weight(&g)) == best, || format!("instance {i}: weight not optimal"))?;
        let best_hits = optimal.iter().map(|o| o.iter().filter(|&&id| prefs.contains(id)).count()).max().unwrap_or(0);
        ensure(prefs.hits(&m) == best_hits, || format!("instance {i}: hits {} != {best_hits}", prefs.hits(&m)))?;
    }
    Ok("300 (instance, E_p) pairs".into())
}

fn transforms_suite() -> Outcome {
    let mut r = rng(8);
    let mut covering = 0;
    for i in 0..300 {
        let g: WeightedBipartiteGraph = random_general(&mut r, 6, (-9, 9));
        let (n, s, m) = (g.n(), g.s(), g.m());
        let oracle = optimum_oracle(&g);

        let d = first_doubling(&g).map_err(|e| e.to_string())?;
        ensure(d.graph.m() == 2 * m + n + s, || format!("instance {i}: |E_d| = {}", d.graph.m()))?;
        for k in [-3, 0, 7] {
            let sd = second_doubling(&g, k).map_err(|e| e.to_string())?;
            ensure(sd.graph.m() == 2 * m + n, || format!("instance {i}: |E_s| = {}", sd.graph.m()))?;
            let a = artificial_vertices(&g, k).map_err(|e| e.to_string())?;
            ensure(a.graph.m() == m + n * (n - s), || format!("instance {i}: |E_a| = {}", a.graph.m()))?;
        }

        let first = optimum_matching_with_k(&g, Strategy::FirstDoubling, 0).map_err(|e| e.to_string())?;
        ensure(first.cardinality() == oracle.cardinality && first.weight(&g) == oracle.weight, || {
            format!(
                "instance {i}: first doubling gave ({}, {}), oracle ({}, {})",
                first.cardinality(),
                first.weight(&g),
                oracle.cardinality,
                oracle.weight
            )
        })?;

        if max_cardinality_matching(&g).cardinality() != s {
            continue;
        }
        covering += 1;
        for strategy in [Strategy::SecondDoubling, Strategy::ArtificialVertices] {
            for k in [-3, 0, 7] {
                let got = optimum_matching_with_k(&g, strategy, k).map_err(|e| e.to_string())?;
                ensure(
                    got.cardinality() == s && got.weight(&g) == oracle.weight && oracle.matchings.contains(&got.edges()),
                    || format!("instance {i}: {strategy:?} k={k} gave ({}, {})", got.cardinality(), got.weight(&g)),
                )?;
            }
        }
    }
    Ok(format!("300 instances ({covering} with a V-covering matching)"))
}

fn random_large(r: &mut ChaCha8Rng, side: usize, per_vertex: usize) -> WeightedBipartiteGraph {
    let mut edges = Vec::with_capacity(side * per_vertex);
    for u in 0..side {
        for v in rand::seq::index::sample(r, side, per_vertex) {
            edges.push((u, v, r.gen_range(-1000..=1000)));
        }
    }
    WeightedBipartiteGraph::new(side, side, edges).unwrap()
}

fn feasible_prices(g: &WeightedBipartiteGraph) -> DualPrices {
    let pi = (0..g.n()).map(|u| g.u_edges(u).iter().map(|&id| g.edge(id).w).min().unwrap_or(0)).collect();
    DualPrices::integral(pi, vec![0; g.s()])
}

fn best_time(g: &WeightedBipartiteGraph, p: &DualPrices) -> Result<Duration, String> {
    let mut best = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        let gcs = build_gcs(g, p).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        std::hint::black_box(gcs.edges().len());
        best = best.min(elapsed);
    }
    Ok(best)
}

fn linear_construction() -> Outcome {
    let start = Instant::now();
    let mut r = rng(9);
    let small = random_large(&mut r, 2000, 50);
    let large = random_large(&mut r, 2000, 500);
    ensure(small.m() == 100_000 && large.m() == 1_000_000, || "wrong sizes".into())?;
    let (ps, pl) = (feasible_prices(&small), feasible_prices(&large));
    let t_small = best_time(&small, &ps)?;
    let t_large = best_time(&large, &pl)?;
    let ratio = t_large.as_secs_f64() / t_small.as_secs_f64();
    let elapsed = start.elapsed();
    ensure((5.0..=30.0).contains(&ratio), || format!("ratio {ratio:.2} ({t_small:?} vs {t_large:?})"))?;
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("10^5: {t_small:?}, 10^6: {t_large:?}, ratio {ratio:.2}; total {elapsed:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 golden fixture G_cs(P1), G_cs(P2)", golden_fixture),
        ("2 perfect matchings of G_cs = min-weight perfect matchings", tight_subgraph_optima),
        ("3 auction + rounding yields optimal integral prices", rounding_suite),
        ("4 eps-optimal weight bound w(M) <= w(M*) + n eps", eps_bound),
        ("5 optimal_edges = union of optimal matchings", optimal_edges_suite),
        ("6 enumeration exact, unique, limit-respecting", enumeration_suite),
        ("7 preallocation optimal with most preferred edges", preallocation_suite),
        ("8 transforms: optimum matchings, k-invariance, sizes", transforms_suite),
        ("9 G_cs construction scales linearly", linear_construction),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(criterion))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>().map(String::as_str).or(e.downcast_ref::<&str>().copied()))));
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("INFO  criterion 10 asymptotic running-time bounds are not reproduced; criteria 2-9 substitute");
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
