//! Strongly connected components in a canonical topological order.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::digraph::Digraph;
use crate::vertex_set::VertexSet;

/// The strongly connected components of a digraph, listed so that every
/// arc between two components goes from the earlier one to the later one.
///
/// Among the valid orders, the one chosen always emits the available
/// component with the smallest vertex first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccCondensation {
    pub components: Vec<VertexSet>,
    component_of: Vec<Option<usize>>,
}

impl SccCondensation {
    /// Index of the component holding `v`, if `v` was part of the graph.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.component_of.get(v).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

pub fn scc_condensation(g: &Digraph) -> SccCondensation {
    scc_condensation_within(g, &g.vertex_set())
}

/// Components of `G[active]`, in the ids of `g`.
pub fn scc_condensation_within(g: &Digraph, active: &VertexSet) -> SccCondensation {
    let n = g.vertex_count();
    let raw = tarjan(g, active);

    let mut component_of = vec![None; n];
    for (c, comp) in raw.iter().enumerate() {
        for v in comp {
            component_of[v] = Some(c);
        }
    }

    let k = raw.len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut indegree = vec![0usize; k];
    for (c, comp) in raw.iter().enumerate() {
        for u in comp {
            for &v in g.out_neighbors(u) {
                if let Some(d) = component_of[v] {
                    if d != c && !succ[c].contains(&d) {
                        succ[c].push(d);
                        indegree[d] += 1;
                    }
                }
            }
        }
    }

    let key = |c: usize| raw[c].first().unwrap_or(usize::MAX);
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..k)
        .filter(|&c| indegree[c] == 0)
        .map(|c| Reverse((key(c), c)))
        .collect();
    let mut order = Vec::with_capacity(k);
    while let Some(Reverse((_, c))) = heap.pop() {
        order.push(c);
        for &d in &succ[c] {
            indegree[d] -= 1;
            if indegree[d] == 0 {
                heap.push(Reverse((key(d), d)));
            }
        }
    }

    let mut position = vec![0; k];
    for (i, &c) in order.iter().enumerate() {
        position[c] = i;
    }
    for slot in component_of.iter_mut().flatten() {
        *slot = position[*slot];
    }
    let mut slots: Vec<Option<VertexSet>> = raw.into_iter().map(Some).collect();
    let components = order.iter().map(|&c| slots[c].take().unwrap()).collect();
    SccCondensation {
        components,
        component_of,
    }
}

/// Iterative Tarjan restricted to `active`.
fn tarjan(g: &Digraph, active: &VertexSet) -> Vec<VertexSet> {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut comps = Vec::new();

    for root in active.iter().filter(|&v| v < n) {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, position in its out-list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let outs = g.out_neighbors(v);
            if *pos < outs.len() {
                let w = outs[*pos];
                *pos += 1;
                if !active.contains(w) {
                    continue;
                }
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = VertexSet::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.insert(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}
