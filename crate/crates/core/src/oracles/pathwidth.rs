use std::collections::HashSet;

use super::{bits, check_mask_cap, full_mask, masks};
use crate::decomposition::DirectedPathDecomposition;
use crate::digraph::Digraph;
use crate::error::Result;
use crate::vertex_set::VertexSet;

/// Largest input solved by the table over all vertex subsets; beyond it a
/// bounded search over prefixes takes over.
const SUBSET_TABLE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingWitness {
    pub width: usize,
    /// The lexicographically least optimal vertex order.
    pub order: Vec<usize>,
    pub decomposition: DirectedPathDecomposition,
}

/// Bag `i` holds `v_i` and every earlier vertex with an in-neighbour among
/// `v_i, ..., v_n`.
pub fn ordering_bags(g: &Digraph, order: &[usize]) -> DirectedPathDecomposition {
    let mut position = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // last position from which some arc enters v
    let last_in: Vec<usize> = (0..g.vertex_count())
        .map(|v| g.in_neighbors(v).iter().map(|&u| position[u]).max().unwrap_or(0))
        .collect();
    let bags = (0..order.len())
        .map(|i| {
            let mut bag = VertexSet::singleton(order[i]);
            bag.extend(order[..i].iter().copied().filter(|&v| last_in[v] >= i));
            bag
        })
        .collect();
    DirectedPathDecomposition::new(bags)
}

/// Vertices of `prefix` with an in-neighbour outside it.
fn boundary(inc: &[u64], prefix: u64) -> u32 {
    bits(prefix).filter(|&v| inc[v] & !prefix != 0).count() as u32
}

/// Directed pathwidth (largest bag) as the least, over vertex orders, of
/// `1 + |∂(P)|` maximised over proper prefixes `P`.
pub fn dpw_by_ordering(g: &Digraph, n_cap: usize) -> Result<OrderingWitness> {
    let n = g.vertex_count();
    check_mask_cap("ordering search", n, n_cap)?;
    let (_, inc) = masks(g);
    let order = if n <= SUBSET_TABLE_LIMIT {
        table_order(&inc, n)
    } else {
        (1..=n as u32)
            .find_map(|k| bounded_order(&inc, n, k))
            .expect("width n always succeeds")
    };
    let decomposition = ordering_bags(g, &order);
    Ok(OrderingWitness {
        width: decomposition.width(),
        order,
        decomposition,
    })
}

fn table_order(inc: &[u64], n: usize) -> Vec<usize> {
    let full = full_mask(n);
    // rest[P]: least achievable largest cost over the steps after prefix P
    let mut rest = vec![0u32; 1 << n];
    for p in (0..full).rev() {
        let step = bits(full & !p).map(|v| rest[(p | 1 << v) as usize]).min().expect("p ≠ V");
        rest[p as usize] = step.max(1 + boundary(inc, p));
    }
    let mut order = Vec::with_capacity(n);
    let mut p = 0u64;
    let target = rest[0];
    while p != full {
        let v = bits(full & !p)
            .find(|&v| rest[(p | 1 << v) as usize] <= target)
            .expect("an optimal continuation exists");
        order.push(v);
        p |= 1 << v;
    }
    order
}

/// Lexicographically first order whose prefixes all cost at most `k`.
fn bounded_order(inc: &[u64], n: usize, k: u32) -> Option<Vec<usize>> {
    let full = full_mask(n);
    let mut dead: HashSet<u64> = HashSet::new();
    let mut order = Vec::with_capacity(n);
    // (prefix, next candidate to try)
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some(&mut (p, ref mut next)) = stack.last_mut() {
        if p == full {
            return Some(order);
        }
        let candidate = (*next..n).find(|&v| p & 1 << v == 0);
        match candidate {
            Some(v) => {
                *next = v + 1;
                let q = p | 1 << v;
                let fits = q == full || boundary(inc, q) < k;
                if fits && !dead.contains(&q) {
                    order.push(v);
                    stack.push((q, 0));
                }
            }
            None => {
                dead.insert(p);
                stack.pop();
                order.pop();
            }
        }
    }
    None
}
