use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Named digraph families with canonical vertex numbering.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    BiorientClique(usize),
    BiorientPath(usize),
    /// Complete ternary tree of the given height, numbered breadth-first.
    BiorientTernaryTree(usize),
    DirectedCycle(usize),
    RandomDag { n: usize, p: f64 },
    RandomDigraph { n: usize, p: f64 },
}

impl Family {
    pub fn parse(name: &str, params: &[&str]) -> Result<Self> {
        let count = |i: usize| -> Result<usize> {
            params
                .get(i)
                .ok_or_else(|| Error::invalid(format!("family `{name}` needs {} parameter(s)", i + 1)))?
                .parse()
                .map_err(|_| Error::invalid(format!("bad integer parameter `{}`", params[i])))
        };
        let prob = |i: usize| -> Result<f64> {
            let p: f64 = params
                .get(i)
                .ok_or_else(|| Error::invalid(format!("family `{name}` needs a probability")))?
                .parse()
                .map_err(|_| Error::invalid(format!("bad probability `{}`", params[i])))?;
            if (0.0..=1.0).contains(&p) {
                Ok(p)
            } else {
                Err(Error::invalid(format!("probability {p} is not in [0,1]")))
            }
        };
        let arity = match name {
            "random-dag" | "random-digraph" => 2,
            _ => 1,
        };
        if params.len() != arity {
            return Err(Error::invalid(format!(
                "family `{name}` takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(match name {
            "biorient-clique" => Family::BiorientClique(count(0)?),
            "biorient-path" => Family::BiorientPath(count(0)?),
            "biorient-ternary-tree" => Family::BiorientTernaryTree(count(0)?),
            "directed-cycle" => Family::DirectedCycle(count(0)?),
            "random-dag" => Family::RandomDag { n: count(0)?, p: prob(1)? },
            "random-digraph" => Family::RandomDigraph { n: count(0)?, p: prob(1)? },
            other => return Err(Error::invalid(format!("unknown family `{other}`"))),
        })
    }
}

pub fn gen_family(family: &Family, seed: u64) -> Result<Digraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *family {
        Family::BiorientClique(k) => {
            let edges: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
            biorient(k, &edges)
        }
        Family::BiorientPath(k) => biorient(k, &(1..k).map(|v| (v - 1, v)).collect::<Vec<_>>()),
        Family::BiorientTernaryTree(height) => {
            let (n, edges) = ternary_tree(height)?;
            biorient(n, &edges)
        }
        Family::DirectedCycle(n) => {
            if n < 2 {
                return Err(Error::invalid("a directed cycle needs at least 2 vertices"));
            }
            Digraph::from_arcs(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::RandomDag { n, p } => {
            let arcs: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Digraph::from_arcs(n, arcs)
        }
        Family::RandomDigraph { n, p } => {
            let arcs: Vec<_> = (0..n)
                .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Digraph::from_arcs(n, arcs)
        }
    }
}

/// Vertex count and edges of the complete ternary tree of the given height;
/// the children of `v` are `3v + 1`, `3v + 2`, `3v + 3`.
pub fn ternary_tree(height: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    if height > 10 {
        return Err(Error::invalid("ternary tree height above 10"));
    }
    let n = (3usize.pow(height as u32 + 1) - 1) / 2;
    Ok((n, (1..n).map(|v| ((v - 1) / 3, v)).collect()))
}

/// Each undirected edge `{u, v}` becomes the arcs `(u, v)` and `(v, u)`.
pub fn biorient(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
    let mut g = Digraph::new(n);
    for &(u, v) in edges {
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        for (a, b) in [(u, v), (v, u)] {
            if !g.has_arc(a, b) {
                g.add_arc(a, b)?;
            }
        }
    }
    Ok(g)
}

/// The symmetric closure of `g`, reading every arc as an undirected edge.
pub fn biorient_digraph(g: &Digraph) -> Digraph {
    let edges: Vec<_> = g.arcs().collect();
    biorient(g.vertex_count(), &edges).expect("arcs of a simple digraph")
}
