//! Text and JSON file formats.
//!
//! Instance files are line-oriented:
//!
//! ```text
//! c comment
//! p bip <n> <s> <m>
//! e <i> <j> <w>        (1-based i in [1, n], j in [1, s])
//! ```
//!
//! Preference files list preferred edges as `f <i> <j>`. Every JSON document
//! uses 1-based indices in the file's own orientation, even when the graph
//! swapped its sides on load.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::allowed::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, WeightedBipartiteGraph, MAX_ABS_WEIGHT};
use crate::matching::Matching;
use crate::prealloc::PreferenceSet;
use crate::prices::{DualPrices, Price};
use crate::solver::{SolveResult, SolveStats};
use crate::tight::TightSubgraph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_field<T: std::str::FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token.parse().map_err(|_| parse_error(line, format!("invalid {what} '{token}'")))
}

/// Significant lines: `(1-based line number, tokens)`, skipping blanks and `c` comments.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn one_based(token: Option<&str>, line: usize, what: &str, bound: usize) -> Result<usize> {
    let index: usize = parse_field(token, line, what)?;
    if index == 0 || index > bound {
        return Err(parse_error(line, format!("{what} {index} out of range 1..={bound}")));
    }
    Ok(index - 1)
}

/// Parses an instance file. Edge ids follow file order.
pub fn parse_instance(text: &str) -> Result<WeightedBipartiteGraph> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for (line, tokens) in significant_lines(text) {
        let mut it = tokens.iter().copied();
        match it.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_error(line, "duplicate problem line"));
                }
                if it.next() != Some("bip") {
                    return Err(parse_error(line, "expected 'p bip <n> <s> <m>'"));
                }
                let n = parse_field(it.next(), line, "n")?;
                let s = parse_field(it.next(), line, "s")?;
                let m = parse_field(it.next(), line, "m")?;
                header = Some((n, s, m, line));
            }
            Some("e") => {
                let Some((n, s, _, _)) = header else {
                    return Err(parse_error(line, "edge before problem line"));
                };
                let i = one_based(it.next(), line, "U index", n)?;
                let j = one_based(it.next(), line, "V index", s)?;
                let w: i64 = parse_field(it.next(), line, "weight")?;
                if w.unsigned_abs() > MAX_ABS_WEIGHT as u64 {
                    return Err(parse_error(line, format!("weight {w} exceeds the bound 2^40")));
                }
                if let Some(first) = seen.insert((i, j), line) {
                    return Err(parse_error(
                        line,
                        format!("duplicate edge ({}, {}), first given on line {first}", i + 1, j + 1),
                    ));
                }
                edges.push((i, j, w));
            }
            Some(other) => return Err(parse_error(line, format!("unknown line type '{other}'"))),
            None => unreachable!("blank lines are skipped"),
        }
        if it.next().is_some() {
            return Err(parse_error(line, "trailing tokens"));
        }
    }
    let (n, s, m, line) = header.ok_or_else(|| parse_error(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_error(line, format!("header announces {m} edges, found {}", edges.len())));
    }
    WeightedBipartiteGraph::new(n, s, edges)
}

/// Writes `g` in the instance format, in its original orientation.
pub fn write_instance(g: &WeightedBipartiteGraph) -> String {
    let (n, s) = if g.swapped() { (g.s(), g.n()) } else { (g.n(), g.s()) };
    let mut out = format!("p bip {n} {s} {}\n", g.m());
    for id in 0..g.m() {
        let (a, b) = g.original_endpoints(id);
        let _ = writeln!(out, "e {} {} {}", a + 1, b + 1, g.edge(id).w);
    }
    out
}

/// Parses a preference file (`f <i> <j>` lines) against `g`.
pub fn parse_preferences(g: &WeightedBipartiteGraph, text: &str) -> Result<PreferenceSet> {
    let (n, s) = if g.swapped() { (g.s(), g.n()) } else { (g.n(), g.s()) };
    let mut ids = Vec::new();
    for (line, tokens) in significant_lines(text) {
        let mut it = tokens.iter().copied();
        if it.next() != Some("f") {
            return Err(parse_error(line, "expected 'f <i> <j>'"));
        }
        let i = one_based(it.next(), line, "U index", n)?;
        let j = one_based(it.next(), line, "V index", s)?;
        if it.next().is_some() {
            return Err(parse_error(line, "trailing tokens"));
        }
        let id = g
            .find_original_edge(i, j)
            .ok_or_else(|| parse_error(line, format!("edge ({}, {}) does not exist", i + 1, j + 1)))?;
        ids.push(id);
    }
    PreferenceSet::new(g, ids)
}

fn edge_pair(g: &WeightedBipartiteGraph, id: EdgeId) -> [usize; 2] {
    let (a, b) = g.original_endpoints(id);
    [a + 1, b + 1]
}

fn sorted_pairs(g: &WeightedBipartiteGraph, ids: impl IntoIterator<Item = EdgeId>) -> Vec<[usize; 2]> {
    let mut pairs: Vec<[usize; 2]> = ids.into_iter().map(|id| edge_pair(g, id)).collect();
    pairs.sort_unstable();
    pairs
}

/// `{"cardinality": int, "weight": int, "edges": [[i, j], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingJson {
    pub cardinality: usize,
    pub weight: i64,
    pub edges: Vec<[usize; 2]>,
}

impl MatchingJson {
    pub fn new(g: &WeightedBipartiteGraph, m: &Matching) -> Self {
        MatchingJson { cardinality: m.cardinality(), weight: m.weight(g), edges: sorted_pairs(g, m.edges()) }
    }

    /// Resolves the listed edges in `g`. Cardinality and weight are not trusted.
    pub fn to_matching(&self, g: &WeightedBipartiteGraph) -> Result<Matching> {
        let ids = self
            .edges
            .iter()
            .map(|&[a, b]| {
                a.checked_sub(1)
                    .zip(b.checked_sub(1))
                    .and_then(|(a, b)| g.find_original_edge(a, b))
                    .ok_or(Error::UnknownEdge { u: a, v: b })
            })
            .collect::<Result<Vec<_>>>()?;
        Matching::from_edges(g, ids)
    }
}

/// `{"den": int, "pi": [int], "p": [int]}` in the file's orientation.
pub fn prices_to_json(g: &WeightedBipartiteGraph, prices: &DualPrices) -> DualPrices {
    if g.swapped() {
        prices.clone().swap_sides()
    } else {
        prices.clone()
    }
}

/// Inverse of [`prices_to_json`]; validates the shape against `g`.
pub fn prices_from_json(g: &WeightedBipartiteGraph, json: DualPrices) -> Result<DualPrices> {
    let prices = if g.swapped() { json.swap_sides() } else { json };
    prices.check_shape(g)?;
    Ok(prices)
}

pub fn parse_prices(g: &WeightedBipartiteGraph, text: &str) -> Result<DualPrices> {
    prices_from_json(g, serde_json::from_str(text)?)
}

/// Slacks are integers when integral and `"a/b"` strings otherwise.
fn price_value(p: Price) -> serde_json::Value {
    if p.is_integer() {
        serde_json::Value::from(p.to_integer())
    } else {
        serde_json::Value::from(p.to_string())
    }
}

/// `{"edges": [[i, j], ...], "dropped": [[i, j, slack], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightSubgraphJson {
    pub edges: Vec<[usize; 2]>,
    pub dropped: Vec<(usize, usize, serde_json::Value)>,
}

impl TightSubgraphJson {
    pub fn new(gcs: &TightSubgraph<'_>) -> Self {
        let g = gcs.parent();
        let mut dropped: Vec<_> = gcs
            .dropped()
            .into_iter()
            .map(|(id, slack)| {
                let [a, b] = edge_pair(g, id);
                (a, b, price_value(slack))
            })
            .collect();
        dropped.sort_by_key(|d| (d.0, d.1));
        TightSubgraphJson { edges: sorted_pairs(g, gcs.edges().iter().copied()), dropped }
    }
}

/// `{"edges": [[i, j], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSetJson {
    pub edges: Vec<[usize; 2]>,
}

impl EdgeSetJson {
    pub fn new(g: &WeightedBipartiteGraph, set: &EdgeSet) -> Self {
        EdgeSetJson { edges: sorted_pairs(g, set.iter().copied()) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveResultJson {
    pub matching: MatchingJson,
    pub prices: DualPrices,
    pub stats: SolveStats,
}

impl SolveResultJson {
    pub fn new(g: &WeightedBipartiteGraph, r: &SolveResult) -> Self {
        SolveResultJson {
            matching: MatchingJson::new(g, &r.matching),
            prices: prices_to_json(g, &r.prices),
            stats: r.stats,
        }
    }
}
