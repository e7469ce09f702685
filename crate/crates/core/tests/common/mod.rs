//! Random instance generators and exhaustive oracles shared by the integration suites.
//!
//! The oracles here walk every matching of a small graph directly and share no
//! code with the library's solvers, SCC filtering or enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bimatch::{EdgeId, WeightedBipartiteGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// A square instance with `1 <= n <= max_n` that is guaranteed a perfect matching.
pub fn random_feasible_square(rng: &mut impl Rng, max_n: usize, weights: (i64, i64)) -> WeightedBipartiteGraph {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for (u, &mate) in perm.iter().enumerate() {
        for v in 0..n {
            if mate == v || rng.gen_bool(density) {
                edges.push((u, v, rng.gen_range(weights.0..=weights.1)));
            }
        }
    }
    edges.shuffle(rng);
    WeightedBipartiteGraph::new(n, n, edges).unwrap()
}

/// Any shape with sides up to `max_side` (possibly empty, unbalanced or infeasible).
pub fn random_general(rng: &mut impl Rng, max_side: usize, weights: (i64, i64)) -> WeightedBipartiteGraph {
    let n = rng.gen_range(0..=max_side);
    let s = rng.gen_range(0..=max_side);
    let density: f64 = rng.gen_range(0.05..0.8);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..s {
            if rng.gen_bool(density) {
                edges.push((u, v, rng.gen_range(weights.0..=weights.1)));
            }
        }
    }
    edges.shuffle(rng);
    WeightedBipartiteGraph::new(n, s, edges).unwrap()
}

/// Every matching of `g` (including the empty one), as sorted edge-id lists.
pub fn all_matchings(g: &WeightedBipartiteGraph) -> Vec<Vec<EdgeId>> {
    fn walk(g: &WeightedBipartiteGraph, u: usize, used: &mut Vec<bool>, cur: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if u == g.n() {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        walk(g, u + 1, used, cur, out);
        for (id, e) in g.edges().iter().enumerate() {
            if e.u == u && !used[e.v] {
                used[e.v] = true;
                cur.push(id);
                walk(g, u + 1, used, cur, out);
                cur.pop();
                used[e.v] = false;
            }
        }
    }
    let mut out = Vec::new();
    walk(g, 0, &mut vec![false; g.s()], &mut Vec::new(), &mut out);
    out
}

pub fn weight_of(g: &WeightedBipartiteGraph, ids: &[EdgeId]) -> i64 {
    ids.iter().map(|&id| g.edge(id).w).sum()
}

/// All perfect matchings of a square graph.
pub fn all_perfect_matchings(g: &WeightedBipartiteGraph) -> BTreeSet<Vec<EdgeId>> {
    if g.n() != g.s() {
        return BTreeSet::new();
    }
    all_matchings(g).into_iter().filter(|m| m.len() == g.n()).collect()
}

/// All minimum-weight perfect matchings and the optimum weight.
pub fn min_weight_perfect(g: &WeightedBipartiteGraph) -> (Option<i64>, BTreeSet<Vec<EdgeId>>) {
    let all = all_perfect_matchings(g);
    let best = all.iter().map(|m| weight_of(g, m)).min();
    let set = all.into_iter().filter(|m| Some(weight_of(g, m)) == best).collect();
    (best, set)
}

/// Optimum matchings: maximum cardinality, then minimum weight.
pub struct OptimumOracle {
    pub cardinality: usize,
    pub weight: i64,
    pub matchings: BTreeSet<Vec<EdgeId>>,
}

pub fn optimum_oracle(g: &WeightedBipartiteGraph) -> OptimumOracle {
    let all = all_matchings(g);
    let cardinality = all.iter().map(Vec::len).max().unwrap_or(0);
    let weight = all
        .iter()
        .filter(|m| m.len() == cardinality)
        .map(|m| weight_of(g, m))
        .min()
        .unwrap_or(0);
    let matchings = all
        .into_iter()
        .filter(|m| m.len() == cardinality && weight_of(g, m) == weight)
        .collect();
    OptimumOracle { cardinality, weight, matchings }
}

pub fn union_of(sets: &BTreeSet<Vec<EdgeId>>) -> Vec<EdgeId> {
    let all: BTreeSet<EdgeId> = sets.iter().flatten().copied().collect();
    all.into_iter().collect()
}
