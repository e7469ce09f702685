//! Exact-rational dual prices for the assignment LP and their checkers.
//!
//! A [`DualPrices`] value holds integer numerators over one shared positive
//! denominator. The auction emits prices in units of `1/(n+1)`; optimal
//! prices produced by rounding or by the exact solver have denominator 1.
//! No floating point is involved anywhere, so the ceil/floor arithmetic of
//! the rounding step is exact.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, WeightedBipartiteGraph};
use crate::matching::Matching;

/// An exact rational price value.
pub type Price = Ratio<i64>;

/// The dual certificate `P = (π, p)`: `π` on U, `p` on V.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPrices {
    den: i64,
    pi: Vec<i64>,
    p: Vec<i64>,
}

/// An edge whose dual constraint `π(u) + p(v) <= w(uv)` fails, and by how much.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub edge: EdgeId,
    pub excess: Price,
}

impl DualPrices {
    /// Prices `pi[i] / den` and `p[j] / den`.
    ///
    /// # Panics
    /// If `den <= 0`.
    pub fn new(den: i64, pi: Vec<i64>, p: Vec<i64>) -> Self {
        assert!(den > 0, "price denominator must be positive");
        DualPrices { den, pi, p }
    }

    pub fn integral(pi: Vec<i64>, p: Vec<i64>) -> Self {
        DualPrices { den: 1, pi, p }
    }

    pub fn zeros(g: &WeightedBipartiteGraph) -> Self {
        DualPrices::integral(vec![0; g.n()], vec![0; g.s()])
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn pi_numerators(&self) -> &[i64] {
        &self.pi
    }

    pub fn p_numerators(&self) -> &[i64] {
        &self.p
    }

    pub fn pi(&self, u: usize) -> Price {
        Price::new(self.pi[u], self.den)
    }

    pub fn p(&self, v: usize) -> Price {
        Price::new(self.p[v], self.den)
    }

    pub fn p_values(&self) -> Vec<Price> {
        (0..self.p.len()).map(|v| self.p(v)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1 || self.pi.iter().chain(&self.p).all(|x| x % self.den == 0)
    }

    /// Same values with the denominator reduced to 1.
    ///
    /// # Panics
    /// If some price is not an integer.
    pub fn to_integral(&self) -> DualPrices {
        assert!(self.is_integral(), "prices are not integral");
        DualPrices::integral(
            self.pi.iter().map(|x| x / self.den).collect(),
            self.p.iter().map(|x| x / self.den).collect(),
        )
    }

    pub fn check_shape(&self, g: &WeightedBipartiteGraph) -> Result<()> {
        if self.pi.len() != g.n() || self.p.len() != g.s() || self.den <= 0 {
            return Err(Error::PriceShape { pi: self.pi.len(), p: self.p.len(), n: g.n(), s: g.s() });
        }
        Ok(())
    }

    /// `w(uv) - π(u) - p(v)` in units of `1/den`.
    pub(crate) fn slack_units(&self, g: &WeightedBipartiteGraph, id: EdgeId) -> i128 {
        let e = g.edge(id);
        e.w as i128 * self.den as i128 - self.pi[e.u] as i128 - self.p[e.v] as i128
    }

    /// The reduced cost `w(uv) - π(u) - p(v)` of an edge.
    pub fn slack(&self, g: &WeightedBipartiteGraph, id: EdgeId) -> Price {
        ratio_from_units(self.slack_units(g, id), self.den)
    }

    /// Exchanges the roles of `π` and `p`. Used by the file layer when the
    /// graph sides were swapped on load.
    pub fn swap_sides(self) -> DualPrices {
        DualPrices { den: self.den, pi: self.p, p: self.pi }
    }
}

fn ratio_from_units(units: i128, den: i64) -> Price {
    let g = units.gcd(&(den as i128));
    Price::new_raw((units / g) as i64, (den as i128 / g) as i64)
}

/// Every edge violating `π(u) + p(v) <= w(uv)`, with its excess. Empty iff feasible.
pub fn check_dual_feasible(g: &WeightedBipartiteGraph, prices: &DualPrices) -> Vec<Violation> {
    (0..g.m())
        .filter_map(|id| {
            let slack = prices.slack_units(g, id);
            (slack < 0).then(|| Violation { edge: id, excess: ratio_from_units(-slack, prices.den) })
        })
        .collect()
}

/// Optimality certificate: `M` perfect, `P` feasible, and every matched edge tight.
pub fn check_complementary_slackness(g: &WeightedBipartiteGraph, m: &Matching, prices: &DualPrices) -> Result<bool> {
    check_eps_optimal(g, m, prices, Price::from_integer(0))
}

/// ε-optimality: `π(u) + p(v) <= w(uv) + ε` on every edge, equality on matched edges.
pub fn check_eps_optimal(g: &WeightedBipartiteGraph, m: &Matching, prices: &DualPrices, epsilon: Price) -> Result<bool> {
    m.require_perfect(g)?;
    prices.check_shape(g)?;
    if epsilon < Price::from_integer(0) {
        return Ok(false);
    }
    // slack / den >= -eps.numer / eps.denom  <=>  slack * eps.denom >= -eps.numer * den
    let eps_num = *epsilon.numer() as i128;
    let eps_den = *epsilon.denom() as i128;
    let den = prices.den as i128;
    for id in 0..g.m() {
        let slack = prices.slack_units(g, id);
        if m.contains(g, id) {
            if slack != 0 {
                return Ok(false);
            }
        } else if slack * eps_den < -eps_num * den {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The dual objective `Σ π(u) + Σ p(v)`.
pub fn dual_objective(prices: &DualPrices) -> Price {
    let total: i128 = prices.pi.iter().chain(&prices.p).map(|&x| x as i128).sum();
    ratio_from_units(total, prices.den)
}

/// The residue forbidden by one price: `⌈(n+1)(⌈p⌉ - p)⌉ mod (n+1)`.
fn forbidden_shift(price: Price, n: usize) -> usize {
    let modulus = n as i64 + 1;
    let gap = (price.ceil() - price) * Price::from_integer(modulus);
    gap.ceil().to_integer().mod_floor(&modulus) as usize
}

/// Smallest `t ∈ {0, …, n}` that differs from every price's forbidden residue.
///
/// # Panics
/// If `p_eps.len() > n`; then all `n + 1` residues may be taken.
pub fn select_shift(p_eps: &[Price], n: usize) -> usize {
    let mut good = vec![true; n + 1];
    for &price in p_eps {
        good[forbidden_shift(price, n)] = false;
    }
    good.iter().position(|&ok| ok).expect("at most n prices forbid at most n of n+1 shifts")
}

/// Whether `⌊r + (t-1)/(n+1)⌋ = ⌊r + t/(n+1)⌋`.
pub fn floor_shift_equal(r: Price, n: usize, t: usize) -> bool {
    let step = Price::new(1, n as i64 + 1);
    let t = t as i64;
    (r + step * (t - 1)).floor() == (r + step * t).floor()
}

/// Rounds ε-optimal prices (ε <= 1/(n+1)) to integral optimal prices for the same matching.
///
/// `p(v) = ⌊p_ε(v) + t/(n+1)⌋` with `t` from [`select_shift`], then
/// `π(u) = w(uv) - p(v)` along each matched edge.
pub fn round_to_optimal(g: &WeightedBipartiteGraph, m: &Matching, p_eps: &DualPrices) -> Result<DualPrices> {
    m.require_perfect(g)?;
    p_eps.check_shape(g)?;
    let n = g.n();
    let modulus = n as i64 + 1;
    if modulus % p_eps.den != 0 {
        return Err(Error::PriceDenominator { den: p_eps.den, expected: modulus });
    }
    let epsilon = Price::new(1, modulus);
    if !check_eps_optimal(g, m, p_eps, epsilon)? {
        return Err(Error::NotEpsOptimal { epsilon: epsilon.to_string() });
    }

    let t = select_shift(&p_eps.p_values(), n) as i64;
    let scale = modulus / p_eps.den;
    let p: Vec<i64> = p_eps
        .p
        .iter()
        .map(|&a| Integer::div_floor(&(a * scale + t), &modulus))
        .collect();
    let pi = (0..n)
        .map(|u| {
            let e = g.edge(m.mate_of_u(u).expect("perfect matching"));
            e.w - p[e.v]
        })
        .collect();
    Ok(DualPrices::integral(pi, p))
}
