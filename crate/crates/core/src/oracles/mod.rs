//! Exact width oracles for small digraphs, and graph family generators.
//!
//! Every oracle refuses inputs above a size cap with
//! [`Error::CapExceeded`](crate::Error::CapExceeded). The defaults can be
//! overridden through `DWL_EXACT_CAPS`, e.g. `dtw=5,games=8,orderings=12`.

mod dtw;
mod elimination;
mod families;
mod games;
mod pathwidth;

pub use dtw::{dtw_exact_small, DtwWitness};
pub use elimination::{kellywidth_by_elimination, EliminationOrdering};
pub use families::{biorient, biorient_digraph, gen_family, ternary_tree, Family};
pub use games::{dagwidth_by_game, kellywidth_by_game};
pub use pathwidth::{dpw_by_ordering, ordering_bags, OrderingWitness};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::separator::{DEFAULT_DSN_CAP, DEFAULT_EXACT_CAP};

/// Size caps for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactCaps {
    pub dtw: usize,
    pub games: usize,
    pub orderings: usize,
    pub elimination: usize,
    pub sep: usize,
    pub dsn: usize,
}

impl Default for ExactCaps {
    fn default() -> Self {
        Self {
            dtw: 5,
            games: 8,
            orderings: 12,
            elimination: 9,
            sep: DEFAULT_EXACT_CAP,
            dsn: DEFAULT_DSN_CAP,
        }
    }
}

impl ExactCaps {
    pub const ENV: &'static str = "DWL_EXACT_CAPS";

    /// Defaults overridden by `DWL_EXACT_CAPS` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Applies comma-separated `key=value` overrides.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("cap override `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("cap override `{item}` has a bad value")))?;
            let slot = match key.trim() {
                "dtw" => &mut self.dtw,
                "games" => &mut self.games,
                "orderings" => &mut self.orderings,
                "elimination" => &mut self.elimination,
                "sep" => &mut self.sep,
                "dsn" => &mut self.dsn,
                other => return Err(Error::invalid(format!("unknown cap `{other}`"))),
            };
            *slot = value;
        }
        Ok(self)
    }
}

/// Out- and in-neighbourhoods as bitmasks; callers check `n ≤ 64` first.
pub(crate) fn masks(g: &Digraph) -> (Vec<u64>, Vec<u64>) {
    (g.out_masks().expect("n ≤ 64"), g.in_masks().expect("n ≤ 64"))
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Vertices reachable from `sources` without entering `blocked`.
pub(crate) fn reach(out: &[u64], sources: u64, blocked: u64) -> u64 {
    let mut seen = sources;
    let mut frontier = sources;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= out[v];
        }
        next &= !blocked & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

pub(crate) fn check_mask_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    Error::check_cap(what, n, cap.min(64))
}
