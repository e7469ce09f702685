use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{require_perfect_matchable, SolveResult, SolveStats};
use crate::error::Result;
use crate::graph::{EdgeId, WeightedBipartiteGraph};
use crate::matching::Matching;
use crate::prices::DualPrices;

const INF: i64 = i64::MAX;

/// Minimum-weight perfect matching with integral optimal prices.
///
/// Successive shortest paths: each free U vertex is matched along a
/// shortest alternating path in reduced costs (Dijkstra), after which the
/// potentials of the labelled vertices are shifted so that every reduced
/// cost stays non-negative and every matched edge stays tight.
pub fn solve_exact(g: &WeightedBipartiteGraph) -> Result<SolveResult> {
    require_perfect_matchable(g)?;
    let n = g.n();

    let mut pi: Vec<i64> = (0..n)
        .map(|u| g.u_edges(u).iter().map(|&id| g.edge(id).w).min().unwrap_or(0))
        .collect();
    let mut p = vec![0i64; n];
    let mut mate_u: Vec<Option<EdgeId>> = vec![None; n];
    let mut mate_v: Vec<Option<EdgeId>> = vec![None; n];

    let mut dist = vec![INF; n];
    let mut done = vec![false; n];
    let mut prev: Vec<EdgeId> = vec![0; n];
    let mut label_u = vec![0i64; n];
    let mut finalized: Vec<usize> = Vec::new();
    let mut labelled: Vec<usize> = Vec::new();
    let mut touched: Vec<usize> = Vec::new();
    let mut heap = BinaryHeap::new();
    let mut stats = SolveStats { phases: 1, iterations: 0 };

    for root in 0..n {
        finalized.clear();
        labelled.clear();
        heap.clear();
        for &v in &touched {
            dist[v] = INF;
            done[v] = false;
        }
        touched.clear();

        let reduced = |id: EdgeId, pi: &[i64], p: &[i64]| {
            let e = g.edge(id);
            e.w - pi[e.u] - p[e.v]
        };

        label_u[root] = 0;
        labelled.push(root);
        let mut sink = None;
        let mut frontier = root;
        let mut base = 0i64;
        loop {
            for &id in g.u_edges(frontier) {
                if Some(id) == mate_u[frontier] {
                    continue;
                }
                let v = g.edge(id).v;
                if done[v] {
                    continue;
                }
                let nd = base + reduced(id, &pi, &p);
                if nd < dist[v] {
                    if dist[v] == INF {
                        touched.push(v);
                    }
                    dist[v] = nd;
                    prev[v] = id;
                    heap.push(Reverse((nd, v)));
                }
            }
            let mut next = None;
            while let Some(Reverse((d, v))) = heap.pop() {
                if !done[v] && d == dist[v] {
                    next = Some((d, v));
                    break;
                }
            }
            let Some((d, v)) = next else {
                break;
            };
            done[v] = true;
            finalized.push(v);
            match mate_v[v] {
                None => {
                    sink = Some((v, d));
                    break;
                }
                Some(back) => {
                    let u = g.edge(back).u;
                    label_u[u] = d;
                    labelled.push(u);
                    frontier = u;
                    base = d;
                }
            }
        }
        // Feasibility was checked, so an augmenting path always exists.
        let (sink, total) = sink.expect("augmenting path exists in a perfect-matchable graph");

        for &u in &labelled {
            pi[u] += total - label_u[u];
        }
        for &v in &finalized {
            p[v] -= total - dist[v];
        }

        let mut v = sink;
        loop {
            let id = prev[v];
            let u = g.edge(id).u;
            let old = mate_u[u];
            mate_u[u] = Some(id);
            mate_v[v] = Some(id);
            if u == root {
                break;
            }
            v = g.edge(old.expect("inner path vertices are matched")).v;
        }
        stats.iterations += 1;
    }

    let matching = Matching::from_edges(g, mate_u.iter().flatten().copied()).expect("augmentation keeps a matching");
    Ok(SolveResult { matching, prices: DualPrices::integral(pi, p), stats })
}
