//! Simple digraphs and the path predicates everything else is built on.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple digraph on the vertices `0..n`.
///
/// Neighbour lists are kept sorted, so arc iteration is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    arc_count: usize,
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            out: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::invalid(format!("arc ({u},{v}) out of range for n={n}")));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        match self.out[u].binary_search(&v) {
            Ok(_) => Err(Error::invalid(format!("duplicate arc ({u},{v})"))),
            Err(pos) => {
                self.out[u].insert(pos, v);
                let pos = self.inc[v].binary_search(&u).unwrap_err();
                self.inc[v].insert(pos, u);
                self.arc_count += 1;
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Out-neighbourhoods as bitmasks; `None` above 64 vertices.
    pub fn out_masks(&self) -> Option<Vec<u64>> {
        (self.vertex_count() <= 64).then(|| {
            self.out
                .iter()
                .map(|outs| outs.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect()
        })
    }

    pub fn in_masks(&self) -> Option<Vec<u64>> {
        (self.vertex_count() <= 64).then(|| {
            self.inc
                .iter()
                .map(|ins| ins.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect()
        })
    }

    /// `G[set]`, renumbered densely, remembering the original identities.
    pub fn induced(&self, set: &VertexSet) -> Subgraph {
        let original: Vec<usize> = set.iter().filter(|&v| v < self.vertex_count()).collect();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = Digraph::new(original.len());
        for (i, &v) in original.iter().enumerate() {
            for &w in &self.out[v] {
                if local[w] != usize::MAX {
                    graph.out[i].push(local[w]);
                    graph.inc[local[w]].push(i);
                    graph.arc_count += 1;
                }
            }
        }
        for ins in &mut graph.inc {
            ins.sort_unstable();
        }
        Subgraph { graph, original }
    }
}

/// An induced subgraph together with the map back to the parent's vertex ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Digraph,
    pub original: Vec<usize>,
}

impl Subgraph {
    pub fn to_original(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }

    /// Translates a set of parent ids into local ids, dropping vertices
    /// outside the subgraph.
    pub fn to_local(&self, set: &VertexSet) -> VertexSet {
        self.original
            .iter()
            .enumerate()
            .filter(|(_, &v)| set.contains(v))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Vertices reachable from `sources` by directed paths avoiding `blocked`.
/// Sources are included.
pub fn reachable_set(g: &Digraph, sources: &VertexSet, blocked: &VertexSet) -> Result<VertexSet> {
    if !sources.is_disjoint(blocked) {
        return Err(Error::invalid("sources and blocked vertices overlap"));
    }
    Ok(reach_avoiding(g, sources, blocked))
}

pub(crate) fn reach_avoiding(g: &Digraph, sources: &VertexSet, blocked: &VertexSet) -> VertexSet {
    let mut seen = sources.clone();
    let mut queue: VecDeque<usize> = sources.iter().collect();
    while let Some(u) = queue.pop_front() {
        for &v in g.out_neighbors(u) {
            if !blocked.contains(v) && seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Whether `x` guards `w`: the sets are disjoint and every arc leaving `w`
/// lands in `x`.
pub fn is_guarding(g: &Digraph, w: &VertexSet, x: &VertexSet) -> bool {
    guard_escape(g, w, x).is_none() && w.is_disjoint(x)
}

/// The lexicographically smallest arc `(u, v)` with `u ∈ w` and
/// `v ∉ w ∪ x`, if any.
pub(crate) fn guard_escape(g: &Digraph, w: &VertexSet, x: &VertexSet) -> Option<(usize, usize)> {
    w.iter().filter(|&u| u < g.vertex_count()).find_map(|u| {
        g.out_neighbors(u)
            .iter()
            .find(|&&v| !w.contains(v) && !x.contains(v))
            .map(|&v| (u, v))
    })
}

/// Whether `w` is `x`-normal: disjoint from `x`, and no directed walk in
/// `G \ x` leaves `w` and comes back.
pub fn is_normal(g: &Digraph, w: &VertexSet, x: &VertexSet) -> bool {
    if !w.is_disjoint(x) {
        return false;
    }
    // Vertices outside w ∪ x that some walk from w reaches without passing x.
    let mut outside = VertexSet::new();
    let mut queue = VecDeque::new();
    for u in w.iter().filter(|&u| u < g.vertex_count()) {
        for &v in g.out_neighbors(u) {
            if !w.contains(v) && !x.contains(v) && outside.insert(v) {
                queue.push_back(v);
            }
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.out_neighbors(u) {
            if w.contains(v) {
                return false;
            }
            if !x.contains(v) && outside.insert(v) {
                queue.push_back(v);
            }
        }
    }
    true
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Digraph;

    /// a→b→c→a
    pub fn c3() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// a→b
    pub fn dag2() -> Digraph {
        Digraph::from_arcs(2, [(0, 1)]).unwrap()
    }

    pub fn bi_clique(k: usize) -> Digraph {
        let mut g = Digraph::new(k);
        for u in 0..k {
            for v in 0..k {
                if u != v {
                    g.add_arc(u, v).unwrap();
                }
            }
        }
        g
    }
}
