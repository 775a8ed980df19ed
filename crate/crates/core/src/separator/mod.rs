//! Balanced directed vertex separators.
//!
//! A separator of a balance set `U` is a triple `(S; U1, U2)` partitioning
//! `V(G)` where each side holds at most `α|U|` vertices of `U` and `S`
//! guards `U2`. Balance sets with at most one vertex are treated as
//! degenerate: the bounds are vacuous and `S = ∅` is accepted.

mod exact;
mod extract;
mod flow;
mod heuristic;

pub use exact::{dsn, find_sep_exact, DEFAULT_DSN_CAP, DEFAULT_EXACT_CAP};
pub use extract::separator_from_arboreal;
pub use heuristic::find_sep_heuristic;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::digraph::{is_guarding, Digraph};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A balance factor `α ∈ (0, 1)`, kept as an exact fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alpha(Ratio<u64>);

impl Alpha {
    pub const THREE_QUARTERS: Alpha = Alpha(Ratio::new_raw(3, 4));
    pub const SEVEN_EIGHTHS: Alpha = Alpha(Ratio::new_raw(7, 8));

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 || numer == 0 || numer >= denom {
            return Err(Error::invalid(format!("alpha {numer}/{denom} is not in (0,1)")));
        }
        Ok(Alpha(Ratio::new(numer, denom)))
    }

    pub fn ratio(self) -> Ratio<u64> {
        self.0
    }

    /// `⌊α · total⌋`, the most balance vertices one side may hold.
    pub fn side_limit(self, total: usize) -> usize {
        (total as u64 * self.0.numer() / self.0.denom()) as usize
    }
}

impl Default for Alpha {
    fn default() -> Self {
        Alpha::SEVEN_EIGHTHS
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Alpha {
    type Err = Error;

    /// Accepts `p/q` or a decimal such as `0.875`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::invalid(format!("cannot parse alpha `{s}`"));
        if let Some((p, q)) = s.split_once('/') {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q = q.trim().parse().map_err(|_| bad())?;
            return Alpha::new(p, q);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let denom = 10u64.pow(frac.len() as u32);
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        Alpha::new(int * denom + frac, denom)
    }
}

/// `(S; U1, U2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorResult {
    #[serde(rename = "S")]
    pub separator: VertexSet,
    #[serde(rename = "U1")]
    pub u1: VertexSet,
    #[serde(rename = "U2")]
    pub u2: VertexSet,
}

impl SeparatorResult {
    /// `S = U`, everything else on the first side.
    pub fn trivial(g: &Digraph, u: &VertexSet) -> Self {
        let separator = u.intersection(&g.vertex_set());
        Self {
            u1: g.vertex_set().difference(&separator),
            separator,
            u2: VertexSet::new(),
        }
    }

    fn degenerate(g: &Digraph) -> Self {
        Self {
            separator: VertexSet::new(),
            u1: g.vertex_set(),
            u2: VertexSet::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.separator.len()
    }
}

pub fn validate_separator(g: &Digraph, u: &VertexSet, alpha: Alpha, r: &SeparatorResult) -> bool {
    let all = g.vertex_set();
    let parts = [&r.separator, &r.u1, &r.u2];
    let disjoint = r.separator.is_disjoint(&r.u1)
        && r.separator.is_disjoint(&r.u2)
        && r.u1.is_disjoint(&r.u2);
    let covers = r.separator.union(&r.u1).union(&r.u2) == all;
    if !disjoint || !covers || parts.iter().any(|p| !p.is_subset(&all)) {
        return false;
    }
    let balanced = if u.len() <= 1 {
        true
    } else {
        let limit = alpha.side_limit(u.len());
        r.u1.intersection_len(u) <= limit && r.u2.intersection_len(u) <= limit
    };
    balanced && is_guarding(g, &r.u2, &r.separator)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyMode {
    /// Minimum-size separator by exhaustive search.
    Exact,
    /// Max-flow cuts with a guaranteed fallback.
    Heuristic,
    /// `S = U`.
    Trivial,
}

impl FromStr for StrategyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Self::Exact),
            "heuristic" => Ok(Self::Heuristic),
            "trivial" => Ok(Self::Trivial),
            other => Err(Error::invalid(format!("unknown separator strategy `{other}`"))),
        }
    }
}

/// How separators are found during a decomposition run.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparatorStrategy {
    pub mode: StrategyMode,
    pub alpha: Alpha,
    /// Largest graph the exact search accepts.
    pub size_cap: Option<usize>,
    /// Reported alongside telemetry; never used in any decision.
    pub beta: f64,
    pub rng_seed: u64,
}

impl Default for SeparatorStrategy {
    fn default() -> Self {
        Self {
            mode: StrategyMode::Exact,
            alpha: Alpha::default(),
            size_cap: None,
            beta: 1.0,
            rng_seed: 0,
        }
    }
}

impl SeparatorStrategy {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn heuristic(seed: u64) -> Self {
        Self {
            mode: StrategyMode::Heuristic,
            rng_seed: seed,
            ..Self::default()
        }
    }

    pub fn trivial() -> Self {
        Self {
            mode: StrategyMode::Trivial,
            ..Self::default()
        }
    }

    pub fn find(&self, g: &Digraph, u: &VertexSet) -> Result<SeparatorResult> {
        self.find_with(g, u, self.alpha)
    }

    /// Like [`find`](Self::find) with an explicit balance factor.
    pub fn find_with(&self, g: &Digraph, u: &VertexSet, alpha: Alpha) -> Result<SeparatorResult> {
        match self.mode {
            StrategyMode::Exact => {
                find_sep_exact(g, u, alpha, self.size_cap.unwrap_or(DEFAULT_EXACT_CAP))
            }
            StrategyMode::Heuristic => Ok(find_sep_heuristic(g, u, alpha, self.rng_seed)),
            StrategyMode::Trivial => Ok(if u.len() <= 1 {
                SeparatorResult::degenerate(g)
            } else {
                SeparatorResult::trivial(g, u)
            }),
        }
    }
}
