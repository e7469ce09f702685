//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the instance is infeasible for the
//! requested pipeline (or `check` rejects the pair), 2 on bad input.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::allowed::optimal_edges;
use crate::enumerate::{enumerate_min_weight_pms, EnumerationSink};
use crate::error::Error;
use crate::format::{
    parse_instance, parse_preferences, parse_prices, prices_to_json, EdgeSetJson, MatchingJson, SolveResultJson,
    TightSubgraphJson,
};
use crate::graph::{Side, WeightedBipartiteGraph};
use crate::matching::Matching;
use crate::prealloc::preallocate;
use crate::prices::{check_dual_feasible, check_eps_optimal, DualPrices, Price};
use crate::solver::{solve_auction, solve_exact, solve_via_rounding, SolveResult};
use crate::tight::build_gcs;
use crate::transform::{optimal_edges_general_with_k, optimum_matching_with_k, Strategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bimatch", version, about = "Optimum matchings in integer-weighted bipartite graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverChoice {
    Exact,
    Auction,
    Rounding,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformChoice {
    Doubling,
    HalfDoubling,
    Artificial,
    Auto,
}

impl From<TransformChoice> for Strategy {
    fn from(t: TransformChoice) -> Self {
        match t {
            TransformChoice::Doubling => Strategy::FirstDoubling,
            TransformChoice::HalfDoubling => Strategy::SecondDoubling,
            TransformChoice::Artificial => Strategy::ArtificialVertices,
            TransformChoice::Auto => Strategy::Auto,
        }
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Instance file ("-" for stdin).
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = SolverChoice::Rounding)]
    solver: SolverChoice,
}

#[derive(Debug, Args)]
struct PricedArgs {
    /// Instance file ("-" for stdin).
    input: PathBuf,
    /// Optimal prices as JSON; computed by the rounding pipeline when absent.
    #[arg(long)]
    prices: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum-weight perfect matching with optimal prices.
    Solve(SolveArgs),
    /// Optimal prices only.
    Duals(SolveArgs),
    /// The tight subgraph: edges with zero reduced cost.
    Gcs(PricedArgs),
    /// Edges lying in some minimum-weight perfect matching.
    OptEdges {
        #[command(flatten)]
        priced: PricedArgs,
        /// Compute edges of optimum (maximum-cardinality) matchings via a transform instead.
        #[arg(long, value_enum, conflicts_with = "prices")]
        transform: Option<TransformChoice>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
    },
    /// Stream minimum-weight perfect matchings as JSON lines.
    Enumerate {
        #[command(flatten)]
        priced: PricedArgs,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Minimum-weight perfect matching using the most preferred edges.
    Preallocate {
        #[command(flatten)]
        priced: PricedArgs,
        /// Preference file with "f <i> <j>" lines.
        #[arg(long)]
        prefs: PathBuf,
    },
    /// Optimum matching (maximum cardinality, then minimum weight) of any instance.
    Optimum {
        /// Instance file ("-" for stdin).
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = TransformChoice::Auto)]
        transform: TransformChoice,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
    },
    /// Validate a (matching, prices) pair as an optimality certificate.
    Check {
        /// Instance file ("-" for stdin).
        input: PathBuf,
        /// Matching JSON as written by `solve`.
        #[arg(long)]
        matching: PathBuf,
        /// Prices JSON as written by `solve` or `duals`.
        #[arg(long)]
        prices: PathBuf,
        /// Accept ε-optimal pairs, e.g. "1/4".
        #[arg(long, default_value = "0")]
        epsilon: String,
    },
}

enum Failure {
    Infeasible(String),
    BadInput(String),
}

impl Failure {
    fn from_error(g: Option<&WeightedBipartiteGraph>, e: Error) -> Failure {
        match e {
            Error::Infeasible { vertex } => {
                let x = g.map_or(vertex, |g| g.original_vertex(vertex));
                let side = if x.side == Side::U { "U" } else { "V" };
                Failure::Infeasible(format!(
                    "no perfect matching: {side} vertex {} cannot be covered",
                    x.index + 1
                ))
            }
            Error::NotSquare { .. } | Error::CoverageRequired => Failure::Infeasible(e.to_string()),
            other => Failure::BadInput(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn read_source(path: &Path) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::BadInput(format!("stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure::BadInput(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> std::result::Result<WeightedBipartiteGraph, Failure> {
    let text = read_source(path)?;
    parse_instance(&text).map_err(|e| Failure::BadInput(format!("{}: {e}", path.display())))
}

fn load_prices(g: &WeightedBipartiteGraph, path: &Option<PathBuf>) -> std::result::Result<DualPrices, Failure> {
    match path {
        Some(path) => {
            let text = read_source(path)?;
            parse_prices(g, &text).map_err(|e| Failure::BadInput(format!("{}: {e}", path.display())))
        }
        None => solve_via_rounding(g).map(|r| r.prices).map_err(|e| Failure::from_error(Some(g), e)),
    }
}

fn parse_epsilon(text: &str) -> std::result::Result<Price, Failure> {
    let bad = || Failure::BadInput(format!("invalid epsilon '{text}'"));
    let eps = match text.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b <= 0 {
                return Err(bad());
            }
            Price::new(a, b)
        }
        None => Price::from_integer(text.trim().parse().map_err(|_| bad())?),
    };
    if eps < Price::from_integer(0) {
        return Err(bad());
    }
    Ok(eps)
}

fn emit_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::other)?;
    writeln!(out)
}

fn pairs_text(pairs: &[[usize; 2]]) -> String {
    pairs.iter().map(|[a, b]| format!("({a},{b})")).collect::<Vec<_>>().join(" ")
}

fn emit_matching(out: &mut dyn Write, format: Format, g: &WeightedBipartiteGraph, m: &Matching) -> io::Result<()> {
    let json = MatchingJson::new(g, m);
    match format {
        Format::Json => emit_json(out, &json),
        Format::Text => writeln!(
            out,
            "cardinality {}\nweight {}\nedges {}",
            json.cardinality,
            json.weight,
            pairs_text(&json.edges)
        ),
    }
}

fn emit_prices(out: &mut dyn Write, format: Format, g: &WeightedBipartiteGraph, p: &DualPrices) -> io::Result<()> {
    let json = prices_to_json(g, p);
    match format {
        Format::Json => emit_json(out, &json),
        Format::Text => writeln!(
            out,
            "den {}\npi {:?}\np {:?}",
            json.den(),
            json.pi_numerators(),
            json.p_numerators()
        ),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Outcome {
    let io_failure = |e: io::Error| Failure::BadInput(format!("write failed: {e}"));
    let format = cli.format;
    match cli.command {
        Command::Solve(SolveArgs { input, solver }) => {
            let g = load_graph(&input)?;
            let r = run_solver(&g, solver)?;
            match format {
                Format::Json => emit_json(out, &SolveResultJson::new(&g, &r)),
                Format::Text => emit_matching(out, format, &g, &r.matching)
                    .and_then(|_| emit_prices(out, format, &g, &r.prices)),
            }
            .map_err(io_failure)?;
        }
        Command::Duals(SolveArgs { input, solver }) => {
            let g = load_graph(&input)?;
            let r = run_solver(&g, solver)?;
            emit_prices(out, format, &g, &r.prices).map_err(io_failure)?;
        }
        Command::Gcs(PricedArgs { input, prices }) => {
            let g = load_graph(&input)?;
            let p = load_prices(&g, &prices)?;
            let gcs = build_gcs(&g, &p).map_err(|e| Failure::from_error(Some(&g), e))?;
            let json = TightSubgraphJson::new(&gcs);
            match format {
                Format::Json => emit_json(out, &json),
                Format::Text => writeln!(out, "tight {}\ndropped {}", pairs_text(&json.edges), json.dropped.len()),
            }
            .map_err(io_failure)?;
        }
        Command::OptEdges { priced: PricedArgs { input, prices }, transform, k } => {
            let g = load_graph(&input)?;
            let set = match transform {
                Some(t) => optimal_edges_general_with_k(&g, t.into(), k),
                None => {
                    let p = load_prices(&g, &prices)?;
                    optimal_edges(&g, &p)
                }
            }
            .map_err(|e| Failure::from_error(Some(&g), e))?;
            let json = EdgeSetJson::new(&g, &set);
            match format {
                Format::Json => emit_json(out, &json),
                Format::Text => writeln!(out, "edges {}", pairs_text(&json.edges)),
            }
            .map_err(io_failure)?;
        }
        Command::Enumerate { priced: PricedArgs { input, prices }, limit } => {
            let g = load_graph(&input)?;
            let p = load_prices(&g, &prices)?;
            let mut write_error = None;
            let mut callback = |m: &Matching| {
                if write_error.is_none() {
                    let json = MatchingJson::new(&g, m);
                    let res = match format {
                        Format::Json => emit_json(out, &json),
                        Format::Text => writeln!(out, "{} {}", json.weight, pairs_text(&json.edges)),
                    };
                    write_error = res.err();
                }
            };
            let result = match limit {
                Some(limit) => enumerate_min_weight_pms(&g, &p, &mut EnumerationSink::with_limit(&mut callback, limit)),
                None => enumerate_min_weight_pms(&g, &p, &mut EnumerationSink::new(&mut callback)),
            };
            result.map_err(|e| Failure::from_error(Some(&g), e))?;
            if let Some(e) = write_error {
                return Err(io_failure(e));
            }
        }
        Command::Preallocate { priced: PricedArgs { input, prices }, prefs } => {
            let g = load_graph(&input)?;
            let prefs_text = read_source(&prefs)?;
            let prefs = parse_preferences(&g, &prefs_text).map_err(|e| Failure::BadInput(format!("{}: {e}", prefs.display())))?;
            let p = load_prices(&g, &prices)?;
            let m = preallocate(&g, &p, &prefs).map_err(|e| Failure::from_error(Some(&g), e))?;
            emit_matching(out, format, &g, &m).map_err(io_failure)?;
        }
        Command::Optimum { input, transform, k } => {
            let g = load_graph(&input)?;
            let m = optimum_matching_with_k(&g, transform.into(), k).map_err(|e| Failure::from_error(Some(&g), e))?;
            emit_matching(out, format, &g, &m).map_err(io_failure)?;
        }
        Command::Check { input, matching, prices, epsilon } => {
            let g = load_graph(&input)?;
            let epsilon = parse_epsilon(&epsilon)?;
            let m_text = read_source(&matching)?;
            let m = serde_json::from_str::<MatchingJson>(&m_text)
                .map_err(Error::from)
                .and_then(|json| json.to_matching(&g))
                .map_err(|e| Failure::BadInput(format!("{}: {e}", matching.display())))?;
            let p = load_prices(&g, &Some(prices))?;
            let perfect = m.is_perfect();
            let valid = perfect && check_eps_optimal(&g, &m, &p, epsilon).map_err(|e| Failure::from_error(Some(&g), e))?;
            let violations = check_dual_feasible(&g, &p).len();
            let report = serde_json::json!({
                "optimal": valid,
                "perfect": perfect,
                "weight": m.weight(&g),
                "dual_violations": violations,
            });
            match format {
                Format::Json => emit_json(out, &report),
                Format::Text => writeln!(out, "{}", if valid { "valid" } else { "invalid" }),
            }
            .map_err(io_failure)?;
            if !valid {
                return Ok(EXIT_INFEASIBLE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_solver(g: &WeightedBipartiteGraph, solver: SolverChoice) -> std::result::Result<SolveResult, Failure> {
    let result = match solver {
        SolverChoice::Exact => solve_exact(g),
        SolverChoice::Auction => solve_auction(g, Price::new(1, g.n() as i64 + 1)),
        SolverChoice::Rounding => solve_via_rounding(g),
    };
    result.map_err(|e| Failure::from_error(Some(g), e))
}

/// Runs the CLI on `argv` (including the program name), writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure::Infeasible(msg)) => {
            let _ = writeln!(err, "infeasible: {msg}");
            EXIT_INFEASIBLE
        }
        Err(Failure::BadInput(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BAD_INPUT
        }
    }
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run_with(argv, &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}
