//! Monotone cops-and-robber games.
//!
//! Both solvers work on positions `(X, R)`: cops on `X`, and `R` the
//! robber's territory. A cop move announces `X'`; it is only legal if the
//! robber cannot gain territory by it.

use std::collections::{HashMap, HashSet};

use super::{bits, check_mask_cap, full_mask, masks, reach};
use crate::digraph::Digraph;
use crate::error::Result;

/// Every cop placement with at most `k` cops, smaller placements first.
fn moves(n: usize, k: usize) -> Vec<u64> {
    let mut layer = vec![0u64];
    let mut all = layer.clone();
    for _ in 0..k.min(n) {
        layer = layer
            .iter()
            .flat_map(|&m| {
                let top = 64 - m.leading_zeros() as usize;
                (top..n).map(move |v| m | 1 << v)
            })
            .collect();
        all.extend(&layer);
    }
    all
}

/// DAG-width via the visible, dynamic robber: the least `k` such that `k`
/// cops win the robber-monotone game.
///
/// The robber sees the announcement and runs along cop-free paths while
/// the cops staying put block him; `R` is the set reachable from his
/// position in `G ∖ X`.
pub fn dagwidth_by_game(g: &Digraph, n_cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    check_mask_cap("visible game", n, n_cap)?;
    let (out, _) = masks(g);
    Ok((1..=n).find(|&k| visible_cops_win(&out, n, k)).unwrap_or(0))
}

/// Robber answers to `X → X'` from territory `R`, or `None` if the move is
/// not monotone.
fn visible_answers(out: &[u64], x: u64, r: u64, x2: u64) -> Option<Vec<u64>> {
    let escape = reach(out, r, x & x2) & !x2;
    if escape & !r != 0 {
        return None;
    }
    let mut answers: Vec<u64> = bits(escape).map(|v| reach(out, 1 << v, x2)).collect();
    answers.sort_unstable();
    answers.dedup();
    Some(answers)
}

fn visible_cops_win(out: &[u64], n: usize, k: usize) -> bool {
    let moves = moves(n, k);
    let start = (0u64, full_mask(n));
    let mut index: HashMap<(u64, u64), usize> = HashMap::from([(start, 0)]);
    let mut states = vec![start];
    let mut i = 0;
    while i < states.len() {
        let (x, r) = states[i];
        for &x2 in &moves {
            for r2 in visible_answers(out, x, r, x2).into_iter().flatten() {
                index.entry((x2, r2)).or_insert_with(|| {
                    states.push((x2, r2));
                    states.len() - 1
                });
            }
        }
        i += 1;
    }
    let mut winning = vec![false; states.len()];
    loop {
        let mut changed = false;
        for (i, &(x, r)) in states.iter().enumerate() {
            if winning[i] {
                continue;
            }
            let wins = moves.iter().any(|&x2| {
                visible_answers(out, x, r, x2)
                    .is_some_and(|answers| answers.iter().all(|&r2| winning[index[&(x2, r2)]]))
            });
            if wins {
                winning[i] = true;
                changed = true;
            }
        }
        if winning[0] || !changed {
            return winning[0];
        }
    }
}

/// Kelly-width via the invisible, inert robber: the least `k` such that `k`
/// cops win the monotone game.
///
/// `R` is the contaminated set. The robber only moves when a cop lands on
/// him, so after `X → X'` the contamination becomes
/// `(R ∖ X') ∪ (Reach_{G ∖ (X ∩ X')}(R ∩ X') ∖ X')`, which must not exceed `R`.
pub fn kellywidth_by_game(g: &Digraph, n_cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    check_mask_cap("invisible game", n, n_cap)?;
    let (out, _) = masks(g);
    Ok((1..=n).find(|&k| inert_cops_win(&out, n, k)).unwrap_or(0))
}

fn inert_cops_win(out: &[u64], n: usize, k: usize) -> bool {
    let moves = moves(n, k);
    let start = (0u64, full_mask(n));
    let mut seen: HashSet<(u64, u64)> = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some((x, r)) = stack.pop() {
        let mut next: Vec<(u32, u64, u64)> = Vec::new();
        for &x2 in &moves {
            let r2 = (r & !x2) | (reach(out, r & x2, x & x2) & !x2);
            if r2 & !r != 0 {
                continue;
            }
            if r2 == 0 {
                return true;
            }
            if seen.insert((x2, r2)) {
                next.push((r2.count_ones(), x2, r2));
            }
        }
        // most promising last, so it is popped first
        next.sort_unstable_by(|a, b| b.cmp(a));
        stack.extend(next.into_iter().map(|(_, x2, r2)| (x2, r2)));
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::fixtures::*;

    #[test]
    fn visible_game() {
        assert_eq!(dagwidth_by_game(&bi_clique(2), 8).unwrap(), 2);
        assert_eq!(dagwidth_by_game(&bi_clique(4), 8).unwrap(), 4);
        assert_eq!(dagwidth_by_game(&dag2(), 8).unwrap(), 1);
        assert_eq!(dagwidth_by_game(&c3(), 8).unwrap(), 2);
        assert_eq!(dagwidth_by_game(&Digraph::new(0), 8).unwrap(), 0);
    }

    #[test]
    fn invisible_game() {
        assert_eq!(kellywidth_by_game(&bi_clique(4), 8).unwrap(), 4);
        assert_eq!(kellywidth_by_game(&Digraph::new(1), 8).unwrap(), 1);
        assert_eq!(kellywidth_by_game(&c3(), 8).unwrap(), 2);
        assert_eq!(kellywidth_by_game(&dag2(), 8).unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(dagwidth_by_game(&Digraph::new(9), 8).is_err());
        assert!(kellywidth_by_game(&Digraph::new(9), 8).is_err());
    }
}
