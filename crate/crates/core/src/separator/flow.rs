//! Unit vertex-capacity max-flow for minimum vertex cuts.

use std::collections::VecDeque;

use crate::digraph::Digraph;
use crate::vertex_set::VertexSet;

const INF: u32 = u32::MAX / 2;

struct Edge {
    to: usize,
    cap: u32,
}

struct Network {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            edges: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.edges.len());
        self.edges.push(Edge { to, cap });
        self.adj[to].push(self.edges.len());
        self.edges.push(Edge { to: from, cap: 0 });
    }

    /// Nodes reachable from `source` in the residual network, and the
    /// predecessor edge used to reach each.
    fn residual_bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut pred = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.adj[x] {
                let y = self.edges[e].to;
                if !seen[y] && self.edges[e].cap > 0 {
                    seen[y] = true;
                    pred[y] = Some(e);
                    queue.push_back(y);
                }
            }
        }
        pred[source] = Some(usize::MAX);
        pred
    }

    fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit {
            let pred = self.residual_bfs(source);
            if pred[sink].is_none() {
                break;
            }
            let mut x = sink;
            while x != source {
                let e = pred[x].unwrap();
                self.edges[e].cap -= 1;
                self.edges[e ^ 1].cap += 1;
                x = self.edges[e ^ 1].to;
            }
            flow += 1;
        }
        flow
    }
}

/// A minimum set of vertices of `within ∖ {s, t}` meeting every `s → t`
/// path of `G[within]`. `None` if `s → t` is an arc.
pub(crate) fn min_vertex_cut(g: &Digraph, within: &VertexSet, s: usize, t: usize) -> Option<VertexSet> {
    if g.has_arc(s, t) {
        return None;
    }
    let verts = within.to_vec();
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    // node 2i is the entry of vertex i, 2i+1 its exit
    let mut net = Network::new(2 * verts.len());
    for (i, &v) in verts.iter().enumerate() {
        let cap = if v == s || v == t { INF } else { 1 };
        net.add(2 * i, 2 * i + 1, cap);
        for &w in g.out_neighbors(v) {
            if within.contains(w) {
                net.add(2 * i + 1, 2 * local[w], INF);
            }
        }
    }
    net.max_flow(2 * local[s] + 1, 2 * local[t], verts.len() as u32);
    let reach = net.residual_bfs(2 * local[s] + 1);
    Some(
        verts
            .iter()
            .enumerate()
            .filter(|&(i, _)| reach[2 * i].is_some() && reach[2 * i + 1].is_none())
            .map(|(_, &v)| v)
            .collect(),
    )
}
