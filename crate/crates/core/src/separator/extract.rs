use num_rational::Ratio;

use super::SeparatorResult;
use crate::decomposition::{subtree_unions, validate_arboreal, ArborealDecomposition};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::scc::scc_condensation_within;
use crate::vertex_set::VertexSet;

type Q = Ratio<i64>;

/// A `3/4`-balanced separator of `u` of size at most `width(d) + 1`, read
/// off an arboreal decomposition of `g`.
///
/// `q` is the deepest node whose subtree holds at least half of `u` (ties
/// to the smallest id) and `S = W_q ∪ X_{∼q}`. The components of `G ∖ S`
/// are then grouped by one of three cases.
pub fn separator_from_arboreal(g: &Digraph, d: &ArborealDecomposition, u: &VertexSet) -> Result<SeparatorResult> {
    if d.universe != g.vertex_set() {
        return Err(Error::invalid("decomposition universe is not V(G)"));
    }
    if !u.is_subset(&g.vertex_set()) {
        return Err(Error::invalid("balance set is not a subset of the vertices"));
    }
    if !validate_arboreal(g, d)?.passed() {
        return Err(Error::invalid("not a valid arboreal decomposition"));
    }
    let size = u.len() as i64;
    let unions = subtree_unions(&d.skeleton, &d.bags);
    let depths = d.skeleton.depths();
    let q = (0..d.skeleton.node_count())
        .filter(|&i| 2 * unions[i].intersection_len(u) as i64 >= size)
        .max_by_key(|&i| (depths[i], std::cmp::Reverse(i)))
        .expect("the root holds all of U");
    let separator = d.node_loads().swap_remove(q);

    let rest = g.vertex_set().difference(&separator);
    let comps = scc_condensation_within(g, &rest).components;
    let weight = |c: &VertexSet| Q::from(c.intersection_len(u) as i64);
    let whole = Q::from(size);
    let quarter = whole / 4;
    let union_of = |cs: &[VertexSet]| -> VertexSet { cs.iter().flat_map(|c| c.iter()).collect() };

    let (u1, u2) = if weight(&rest) <= whole * Q::new(3, 4) {
        (rest.clone(), VertexSet::new())
    } else if let Some(i) = comps.iter().position(|c| weight(c) >= quarter) {
        let theta = weight(&comps[i]) / whole - Q::new(1, 4);
        let a = union_of(&comps[..i]);
        let b = union_of(&comps[i + 1..]);
        if weight(&a) <= (Q::new(3, 8) - theta / 2) * whole {
            (a.union(&comps[i]), b)
        } else {
            (a, comps[i].union(&b))
        }
    } else {
        let mut acc = Q::from(0);
        let mut j = comps.len();
        for (k, c) in comps.iter().enumerate() {
            acc += weight(c);
            if acc >= quarter {
                j = k + 1;
                break;
            }
        }
        (union_of(&comps[..j]), union_of(&comps[j..]))
    };
    Ok(SeparatorResult { separator, u1, u2 })
}
