use std::cmp::Ordering;

use super::{Alpha, SeparatorResult};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::scc::scc_condensation_within;
use crate::vertex_set::VertexSet;

pub const DEFAULT_EXACT_CAP: usize = 16;
pub const DEFAULT_DSN_CAP: usize = 12;

/// Minimum-size `α`-balanced separator of `u`, by exhaustive search.
///
/// Candidate sets `S` are tried by size, then lexicographically. For the
/// first `S` that admits a split, `U2` is the out-closed union of strongly
/// connected components of `G ∖ S` that is most balanced, ties going to the
/// lexicographically smallest.
pub fn find_sep_exact(g: &Digraph, u: &VertexSet, alpha: Alpha, cap: usize) -> Result<SeparatorResult> {
    let n = g.vertex_count();
    Error::check_cap("exact separator search", n, cap.min(64))?;
    if !u.is_subset(&g.vertex_set()) {
        return Err(Error::invalid("balance set is not a subset of the vertices"));
    }
    if u.len() <= 1 {
        return Ok(SeparatorResult::degenerate(g));
    }
    let search = Search::new(g, u, alpha);
    for size in 0..=n {
        let mut found = None;
        for_each_combination(n, size, |s| {
            found = search.split(s);
            found.is_some()
        });
        if let Some(r) = found {
            return Ok(r);
        }
    }
    unreachable!("S = V always admits a split")
}

/// The `α`-directed separator number: the largest exact separator size
/// over all balance sets.
pub fn dsn(g: &Digraph, alpha: Alpha, cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    Error::check_cap("directed separator number", n, cap.min(20))?;
    let mut best = 0;
    for mask in 0u64..(1u64 << n) {
        let u = VertexSet::from_mask(mask);
        best = best.max(find_sep_exact(g, &u, alpha, 64)?.size());
    }
    Ok(best)
}

struct Search<'a> {
    g: &'a Digraph,
    u: &'a VertexSet,
    limit: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Digraph, u: &'a VertexSet, alpha: Alpha) -> Self {
        Self {
            g,
            u,
            limit: alpha.side_limit(u.len()),
        }
    }

    fn split(&self, s: &VertexSet) -> Option<SeparatorResult> {
        let rest = self.g.vertex_set().difference(s);
        let total = rest.intersection_len(self.u);
        if total > 2 * self.limit {
            return None;
        }
        let cond = scc_condensation_within(self.g, &rest);
        let comps = &cond.components;
        let weights: Vec<usize> = comps.iter().map(|c| c.intersection_len(self.u)).collect();
        // successor components of each component
        let succ: Vec<Vec<usize>> = comps
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut out: Vec<usize> = c
                    .iter()
                    .flat_map(|v| self.g.out_neighbors(v))
                    .filter_map(|&w| cond.component_of(w))
                    .filter(|&j| j != i)
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();

        let mut best: Option<(usize, VertexSet)> = None;
        let mut chosen = vec![false; comps.len()];
        let ctx = Downsets {
            comps,
            weights: &weights,
            succ: &succ,
            limit: self.limit,
            total,
        };
        ctx.enumerate(comps.len(), 0, &mut chosen, &mut best);
        let (_, u2) = best?;
        Some(SeparatorResult {
            separator: s.clone(),
            u1: rest.difference(&u2),
            u2,
        })
    }
}

struct Downsets<'a> {
    comps: &'a [VertexSet],
    weights: &'a [usize],
    succ: &'a [Vec<usize>],
    limit: usize,
    total: usize,
}

impl Downsets<'_> {
    /// Decides components `k-1, k-2, ..., 0`; every successor of a
    /// component comes later in topological order, so it is already decided.
    fn enumerate(&self, k: usize, w2: usize, chosen: &mut [bool], best: &mut Option<(usize, VertexSet)>) {
        if w2 > self.limit {
            return;
        }
        if k == 0 {
            if self.total - w2 > self.limit {
                return;
            }
            let score = w2.max(self.total - w2);
            let u2: VertexSet = self
                .comps
                .iter()
                .zip(chosen.iter())
                .filter(|(_, &c)| c)
                .flat_map(|(c, _)| c.iter())
                .collect();
            let better = match best {
                None => true,
                Some((bs, bu)) => match score.cmp(bs) {
                    Ordering::Less => true,
                    Ordering::Equal => u2 < *bu,
                    Ordering::Greater => false,
                },
            };
            if better {
                *best = Some((score, u2));
            }
            return;
        }
        let c = k - 1;
        chosen[c] = false;
        self.enumerate(c, w2, chosen, best);
        if self.succ[c].iter().all(|&j| chosen[j]) {
            chosen[c] = true;
            self.enumerate(c, w2 + self.weights[c], chosen, best);
            chosen[c] = false;
        }
    }
}

/// Calls `f` on each `size`-subset of `0..n` in lexicographic order until it
/// returns true.
fn for_each_combination(n: usize, size: usize, mut f: impl FnMut(&VertexSet) -> bool) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let set: VertexSet = idx.iter().copied().collect();
        if f(&set) {
            return;
        }
        let Some(pos) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
            return;
        };
        idx[pos] += 1;
        for i in pos + 1..size {
            idx[i] = idx[i - 1] + 1;
        }
    }
}
