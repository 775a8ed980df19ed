use std::collections::HashMap;

use super::{bits, check_mask_cap, full_mask};
use crate::decomposition::{trivial_arboreal, ArborealDecomposition, Skeleton, SkeletonKind};
use crate::digraph::{is_normal, Digraph};
use crate::error::Result;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtwWitness {
    pub width: usize,
    pub decomposition: ArborealDecomposition,
}

/// How to decompose `W` below an arc carrying `X`: the root bag, then each
/// child's part and arc bag.
struct Plan {
    bag: u64,
    children: Vec<(u64, u64)>,
}

/// Directed treewidth by exhaustive search over arboreal decompositions.
///
/// For each width `k` it computes, as a least fixpoint, which pairs
/// `(W, X)` with `W` `X`-normal admit a decomposition of `W` whose root
/// load, including the incoming arc bag `X`, has at most `k + 1` vertices.
/// The root bag is any subset of `W` and the rest of `W` is split into
/// child parts in every possible way.
pub fn dtw_exact_small(g: &Digraph, n_cap: usize) -> Result<DtwWitness> {
    let n = g.vertex_count();
    check_mask_cap("arboreal search", n, n_cap.min(8))?;
    if n == 0 {
        return Ok(DtwWitness {
            width: 0,
            decomposition: trivial_arboreal(VertexSet::new()),
        });
    }
    let search = Search::new(g);
    for k in 0..n {
        if let Some(plans) = search.solve(k + 1) {
            let decomposition = search.build(&plans);
            debug_assert_eq!(decomposition.width(), k);
            return Ok(DtwWitness { width: k, decomposition });
        }
    }
    unreachable!("the trivial decomposition has width n - 1")
}

struct Search {
    full: u64,
    /// normal[w][x] for disjoint w, x
    normal: HashMap<(u64, u64), bool>,
}

impl Search {
    fn new(g: &Digraph) -> Self {
        let full = full_mask(g.vertex_count());
        let mut normal = HashMap::new();
        for w in 1..=full {
            let wset = VertexSet::from_mask(w);
            let others = full & !w;
            let mut x = others;
            loop {
                normal.insert((w, x), is_normal(g, &wset, &VertexSet::from_mask(x)));
                if x == 0 {
                    break;
                }
                x = (x - 1) & others;
            }
        }
        Self { full, normal }
    }

    fn solve(&self, load: usize) -> Option<HashMap<(u64, u64), Plan>> {
        let root = (self.full, 0);
        let mut plans: HashMap<(u64, u64), Plan> = HashMap::new();
        let states: Vec<(u64, u64)> = self
            .normal
            .iter()
            .filter(|&(&(_, x), &ok)| ok && x.count_ones() as usize <= load)
            .map(|(&key, _)| key)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        loop {
            let mut changed = false;
            for &(w, x) in &states {
                if plans.contains_key(&(w, x)) {
                    continue;
                }
                if let Some(plan) = self.plan(w, x, load, &plans) {
                    plans.insert((w, x), plan);
                    changed = true;
                }
            }
            if plans.contains_key(&root) {
                return Some(plans);
            }
            if !changed {
                return None;
            }
        }
    }

    fn plan(&self, w: u64, x: u64, load: usize, plans: &HashMap<(u64, u64), Plan>) -> Option<Plan> {
        // larger root bags first; b = w is the leaf case
        let mut b = w;
        loop {
            let base = b | x;
            if base.count_ones() as usize <= load {
                let rest = w & !b;
                let mut children = Vec::new();
                if self.split(rest, base, load, plans, &mut children) {
                    return Some(Plan { bag: b, children });
                }
            }
            if b == 0 {
                return None;
            }
            b = (b - 1) & w;
        }
    }

    /// Splits `rest` into child parts with arc bags, keeping the running
    /// root load within `load`.
    fn split(
        &self,
        rest: u64,
        used: u64,
        load: usize,
        plans: &HashMap<(u64, u64), Plan>,
        children: &mut Vec<(u64, u64)>,
    ) -> bool {
        if rest == 0 {
            return true;
        }
        let low = rest & rest.wrapping_neg();
        let others = rest & !low;
        let mut extra = others;
        loop {
            let part = low | extra;
            let room = self.full & !part;
            let mut xi = room;
            loop {
                let grown = used | xi;
                if grown.count_ones() as usize <= load && plans.contains_key(&(part, xi)) {
                    children.push((part, xi));
                    if self.split(rest & !part, grown, load, plans, children) {
                        return true;
                    }
                    children.pop();
                }
                if xi == 0 {
                    break;
                }
                xi = (xi - 1) & room;
            }
            if extra == 0 {
                return false;
            }
            extra = (extra - 1) & others;
        }
    }

    fn build(&self, plans: &HashMap<(u64, u64), Plan>) -> ArborealDecomposition {
        let mut bags = Vec::new();
        let mut arcs = Vec::new();
        let mut arc_bags = Vec::new();
        let mut stack = vec![(self.full, 0u64, None::<usize>)];
        while let Some((w, x, parent)) = stack.pop() {
            let id = bags.len();
            let plan = &plans[&(w, x)];
            bags.push(VertexSet::from_mask(plan.bag));
            if let Some(p) = parent {
                arcs.push((p, id));
                arc_bags.push(VertexSet::from_mask(x));
            }
            for &(part, xi) in plan.children.iter().rev() {
                stack.push((part, xi, Some(id)));
            }
        }
        let mut order: Vec<usize> = (0..arcs.len()).collect();
        order.sort_by_key(|&k| arcs[k]);
        let arc_bags = order.iter().map(|&k| arc_bags[k].clone()).collect();
        let skeleton = Skeleton::new(bags.len(), arcs, SkeletonKind::Arborescence).expect("a tree");
        let universe = bits(self.full).collect();
        ArborealDecomposition::new(skeleton, bags, arc_bags, universe).expect("consistent sizes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate_arboreal;
    use crate::digraph::fixtures::*;

    fn check(g: &Digraph, expected: usize) {
        let w = dtw_exact_small(g, 5).unwrap();
        assert_eq!(w.width, expected);
        assert_eq!(w.decomposition.width(), expected);
        assert!(validate_arboreal(g, &w.decomposition).unwrap().passed());
    }

    #[test]
    fn examples() {
        check(&c3(), 1);
        check(&dag2(), 0);
        check(&bi_clique(4), 3);
        check(&Digraph::new(3), 0);
        assert!(dtw_exact_small(&Digraph::new(6), 5).is_err());
    }
}
