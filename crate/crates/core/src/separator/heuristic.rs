use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::flow::min_vertex_cut;
use super::{Alpha, SeparatorResult};
use crate::digraph::Digraph;
use crate::scc::scc_condensation_within;
use crate::vertex_set::VertexSet;

const TRIALS: usize = 6;
const PAIRS_PER_STEP: usize = 4;

/// A valid `α`-balanced separator found by repeated minimum vertex cuts.
///
/// Each trial starts from `S = ∅` and, while no suffix of the topologically
/// sorted components of `G ∖ S` is balanced, cuts the component holding the
/// most of `U` between sampled pairs. The smallest result over all trials,
/// after greedy pruning, is returned; `S = U` is the fallback.
pub fn find_sep_heuristic(g: &Digraph, u: &VertexSet, alpha: Alpha, seed: u64) -> SeparatorResult {
    let u = u.intersection(&g.vertex_set());
    if u.len() <= 1 {
        return SeparatorResult::degenerate(g);
    }
    let limit = alpha.side_limit(u.len());
    let mut best = SeparatorResult::trivial(g, &u);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..TRIALS {
        let s = grow(g, &u, limit, &mut rng);
        let s = prune(g, &u, limit, s);
        if s.len() < best.size() {
            let (u1, u2) = split(g, &u, limit, &s).expect("pruning keeps a split");
            best = SeparatorResult { separator: s, u1, u2 };
        }
    }
    best
}

/// The most balanced split of `V ∖ s` into a prefix and an out-closed
/// suffix of its components.
fn split(g: &Digraph, u: &VertexSet, limit: usize, s: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    let rest = g.vertex_set().difference(s);
    let total = rest.intersection_len(u);
    if total > 2 * limit {
        return None;
    }
    let cond = scc_condensation_within(g, &rest);
    let mut w2 = 0;
    let mut best: Option<(usize, usize)> = None;
    for k in (0..=cond.len()).rev() {
        if k < cond.len() {
            w2 += cond.components[k].intersection_len(u);
        }
        if w2 <= limit && total - w2 <= limit {
            let score = w2.max(total - w2);
            if best.is_none_or(|(b, _)| score < b) {
                best = Some((score, k));
            }
        }
    }
    let (_, k) = best?;
    let u2: VertexSet = cond.components[k..].iter().flat_map(|c| c.iter()).collect();
    Some((rest.difference(&u2), u2))
}

fn grow(g: &Digraph, u: &VertexSet, limit: usize, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut s = VertexSet::new();
    while split(g, u, limit, &s).is_none() {
        let rest = g.vertex_set().difference(&s);
        let cond = scc_condensation_within(g, &rest);
        let heavy = cond
            .components
            .iter()
            .max_by_key(|c| (c.intersection_len(u), std::cmp::Reverse(c.first())))
            .expect("an unbalanced split leaves some component");
        let mut pool = heavy.intersection(u).to_vec();
        if pool.len() < 2 {
            pool = heavy.to_vec();
        }
        let mut cut: Option<VertexSet> = None;
        if pool.len() >= 2 {
            for _ in 0..PAIRS_PER_STEP {
                let pair: Vec<usize> = pool.choose_multiple(rng, 2).copied().collect();
                if let Some(c) = min_vertex_cut(g, heavy, pair[0], pair[1]) {
                    if cut.as_ref().is_none_or(|b| c.len() < b.len()) {
                        cut = Some(c);
                    }
                }
            }
        }
        match cut {
            Some(c) if !c.is_empty() => s.union_with(&c),
            _ => {
                s.insert(*pool.choose(rng).expect("components are nonempty"));
            }
        }
    }
    s
}

fn prune(g: &Digraph, u: &VertexSet, limit: usize, mut s: VertexSet) -> VertexSet {
    for v in s.to_vec() {
        s.remove(v);
        if split(g, u, limit, &s).is_none() {
            s.insert(v);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::fixtures::*;
    use crate::separator::validate_separator;

    #[test]
    fn cycle_result_is_valid() {
        let g = c3();
        let u = g.vertex_set();
        let r = find_sep_heuristic(&g, &u, Alpha::SEVEN_EIGHTHS, 0);
        assert!(validate_separator(&g, &u, Alpha::SEVEN_EIGHTHS, &r));
        assert!(r.size() <= 3);
    }

    #[test]
    fn trivial_fallback_is_valid() {
        let g = bi_clique(2);
        let u = g.vertex_set();
        let r = SeparatorResult::trivial(&g, &u);
        assert_eq!(r.separator, u);
        assert!(r.u1.is_empty() && r.u2.is_empty());
        assert!(validate_separator(&g, &u, Alpha::THREE_QUARTERS, &r));
    }

    #[test]
    fn clique_result_is_small() {
        let g = bi_clique(8);
        let u = g.vertex_set();
        let r = find_sep_heuristic(&g, &u, Alpha::THREE_QUARTERS, 3);
        assert!(validate_separator(&g, &u, Alpha::THREE_QUARTERS, &r));
        assert_eq!(r.size(), 2);
    }
}
