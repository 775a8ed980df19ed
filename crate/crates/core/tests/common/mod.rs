#![allow(dead_code)]

use dwl_core::oracles::{gen_family, Family};
use dwl_core::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded random digraph with `n` drawn from `lo..=hi` and a random
/// arc density.
pub fn random_digraph(seed: u64, lo: usize, hi: usize) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.1..0.7);
    gen_family(&Family::RandomDigraph { n, p }, rng.gen()).unwrap()
}

/// A seeded random undirected graph as an edge list.
pub fn random_undirected(seed: u64, lo: usize, hi: usize) -> (usize, Vec<(usize, usize)>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.2..0.9);
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    (n, edges)
}

/// Treewidth of an undirected graph by trying every elimination order.
pub fn treewidth(n: usize, edges: &[(usize, usize)]) -> usize {
    if n == 0 {
        return 0;
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut order, 0, &mut |perm| {
        let mut a = adj.clone();
        let mut gone = vec![false; n];
        let mut width = 0;
        for &v in perm {
            let nbrs: Vec<usize> = (0..n).filter(|&u| !gone[u] && a[v][u]).collect();
            width = width.max(nbrs.len());
            for &x in &nbrs {
                for &y in &nbrs {
                    if x != y {
                        a[x][y] = true;
                    }
                }
            }
            gone[v] = true;
        }
        best = best.min(width);
    });
    best
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// reach[u][v]: a directed path from `u` to `v` avoiding `blocked`
/// (endpoints included only when not blocked).
pub fn closure(g: &Digraph, blocked: &[bool]) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut r = vec![vec![false; n]; n];
    for u in 0..n {
        if !blocked[u] {
            r[u][u] = true;
            for &v in g.out_neighbors(u) {
                if !blocked[v] {
                    r[u][v] = true;
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

/// Minimum separator size by trying every `(S, U2)`.
pub fn brute_force_separator(g: &Digraph, u: &[bool], num: usize, den: usize) -> usize {
    let n = g.vertex_count();
    let total = u.iter().filter(|&&b| b).count();
    if total <= 1 {
        return 0;
    }
    let limit = total * num / den;
    let mut best = n;
    for s in 0u32..1 << n {
        if s.count_ones() as usize >= best {
            continue;
        }
        let rest = !s & ((1 << n) - 1);
        let mut u2 = rest;
        loop {
            let u1 = rest & !u2;
            let w = |m: u32| (0..n).filter(|&v| m >> v & 1 == 1 && u[v]).count();
            let guarded = g
                .arcs()
                .all(|(a, b)| u2 >> a & 1 == 0 || (u2 | s) >> b & 1 == 1);
            if guarded && w(u1) <= limit && w(u2) <= limit {
                best = s.count_ones() as usize;
                break;
            }
            if u2 == 0 {
                break;
            }
            u2 = (u2 - 1) & rest;
        }
    }
    best
}
