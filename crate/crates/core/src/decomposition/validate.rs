use std::fmt;

use serde::Serialize;

use super::{
    subtree_unions, ArborealDecomposition, DagDecomposition, DirectedPathDecomposition,
    KellyDecomposition, SkeletonKind,
};
use crate::digraph::{guard_escape, is_normal, Digraph};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    #[serde(rename = "DGW-1")]
    Dgw1,
    #[serde(rename = "DGW-2")]
    Dgw2,
    #[serde(rename = "DGW-3")]
    Dgw3,
    #[serde(rename = "DPW")]
    Dpw,
    #[serde(rename = "KW-1")]
    Kw1,
    #[serde(rename = "KW-2")]
    Kw2,
    #[serde(rename = "KW-3")]
    Kw3,
    #[serde(rename = "KPW")]
    Kpw,
    #[serde(rename = "DTW-1")]
    Dtw1,
    #[serde(rename = "DTW-2")]
    Dtw2,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            Condition::Dgw1 => "DGW-1",
            Condition::Dgw2 => "DGW-2",
            Condition::Dgw3 => "DGW-3",
            Condition::Dpw => "DPW",
            Condition::Kw1 => "KW-1",
            Condition::Kw2 => "KW-2",
            Condition::Kw3 => "KW-3",
            Condition::Kpw => "KPW",
            Condition::Dtw1 => "DTW-1",
            Condition::Dtw2 => "DTW-2",
        };
        f.write_str(label)
    }
}

/// The object that makes a condition fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertex(usize),
    /// An arc of the digraph.
    Arc(usize, usize),
    /// A node of the skeleton.
    Node(usize),
    SkeletonArc(usize, usize),
    /// Nodes `i ⪯ j ⪯ k` with `vertex ∈ W_i ∩ W_k` but not in `W_j`.
    Triple {
        nodes: (usize, usize, usize),
        vertex: usize,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Arc(u, v) => write!(f, "arc ({u},{v})"),
            Witness::Node(i) => write!(f, "node {i}"),
            Witness::SkeletonArc(i, j) => write!(f, "skeleton arc ({i},{j})"),
            Witness::Triple {
                nodes: (i, j, k),
                vertex,
            } => write!(f, "nodes ({i},{j},{k}) lose vertex {vertex}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub condition: Condition,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from_witness(condition: Condition, witness: Option<Witness>) -> Self {
        Self {
            condition,
            passed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub verdicts: Vec<Verdict>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn verdict(&self, condition: Condition) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.condition == condition)
    }

    pub fn failed(&self, condition: Condition) -> bool {
        self.verdict(condition).is_some_and(|v| !v.passed)
    }

    pub fn witness(&self, condition: Condition) -> Option<Witness> {
        self.verdict(condition).and_then(|v| v.witness)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            write!(f, "{}: {}", v.condition, if v.passed { "pass" } else { "fail" })?;
            if let Some(w) = &v.witness {
                write!(f, " ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_in_range<'a>(g: &Digraph, sets: impl IntoIterator<Item = &'a VertexSet>) -> Result<()> {
    let n = g.vertex_count();
    for s in sets {
        if s.bound() > n {
            return Err(Error::invalid(format!(
                "bag {s} references a vertex outside 0..{n}"
            )));
        }
    }
    Ok(())
}

/// Smallest uncovered vertex.
fn cover_witness(g: &Digraph, bags: &[VertexSet]) -> Option<Witness> {
    let mut covered = VertexSet::new();
    for b in bags {
        covered.union_with(b);
    }
    g.vertex_set().difference(&covered).first().map(Witness::Vertex)
}

/// Smallest vertex that is missing from, or repeated in, a partition of `universe`.
fn partition_witness(universe: &VertexSet, parts: &[VertexSet]) -> Option<Witness> {
    let mut seen = VertexSet::new();
    let mut repeated = VertexSet::new();
    for p in parts {
        repeated.union_with(&seen.intersection(p));
        seen.union_with(p);
    }
    let bad = repeated
        .union(&universe.difference(&seen))
        .union(&seen.difference(universe));
    bad.first().map(Witness::Vertex)
}

pub fn validate_dag_decomposition(g: &Digraph, d: &DagDecomposition) -> Result<ValidationReport> {
    check_in_range(g, &d.bags)?;
    if d.bags.len() != d.skeleton.node_count() {
        return Err(Error::invalid("bag count differs from node count"));
    }
    let sk = &d.skeleton;
    let desc = sk.descendants();

    let dgw2 = (|| {
        let k = sk.node_count();
        for i in 0..k {
            for j in desc[i].iter().filter(|&j| j != i) {
                for kk in desc[j].iter().filter(|&kk| kk != j) {
                    let lost = d.bags[i].intersection(&d.bags[kk]).difference(&d.bags[j]);
                    if let Some(vertex) = lost.first() {
                        return Some(Witness::Triple {
                            nodes: (i, j, kk),
                            vertex,
                        });
                    }
                }
            }
        }
        None
    })();

    let below = subtree_unions(sk, &d.bags);
    let mut escapes: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in sk.arcs() {
        let guard = d.bags[i].intersection(&d.bags[j]);
        let target = below[j].difference(&d.bags[i]);
        escapes.extend(guard_escape(g, &target, &guard));
    }
    for r in sk.roots() {
        escapes.extend(guard_escape(g, &below[r], &VertexSet::new()));
    }
    let dgw3 = escapes.into_iter().min().map(|(u, v)| Witness::Arc(u, v));

    Ok(ValidationReport {
        verdicts: vec![
            Verdict::from_witness(Condition::Dgw1, cover_witness(g, &d.bags)),
            Verdict::from_witness(Condition::Dgw2, dgw2),
            Verdict::from_witness(Condition::Dgw3, dgw3),
        ],
    })
}

/// Checks DGW-1, DGW-2 and the arc condition DPW on a path decomposition.
pub fn validate_dpd(g: &Digraph, d: &DirectedPathDecomposition) -> Result<ValidationReport> {
    check_in_range(g, &d.bags)?;
    let n = g.vertex_count();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    for (i, bag) in d.bags.iter().enumerate() {
        for v in bag {
            first[v] = first[v].min(i);
            last[v] = i;
        }
    }

    let mut dgw2: Option<(usize, usize, usize, usize)> = None;
    for v in 0..n {
        if first[v] == usize::MAX {
            continue;
        }
        let gap = (first[v]..=last[v]).find(|&i| !d.bags[i].contains(v));
        if let Some(j) = gap {
            let k = (j..=last[v]).find(|&i| d.bags[i].contains(v)).unwrap();
            let candidate = (first[v], j, k, v);
            if dgw2.is_none_or(|best| candidate < best) {
                dgw2 = Some(candidate);
            }
        }
    }

    let dpw = g
        .arcs()
        .find(|&(u, v)| first[u] != usize::MAX && first[v] != usize::MAX && first[u] > last[v])
        .map(|(u, v)| Witness::Arc(u, v));

    Ok(ValidationReport {
        verdicts: vec![
            Verdict::from_witness(Condition::Dgw1, cover_witness(g, &d.bags)),
            Verdict::from_witness(
                Condition::Dgw2,
                dgw2.map(|(i, j, k, vertex)| Witness::Triple {
                    nodes: (i, j, k),
                    vertex,
                }),
            ),
            Verdict::from_witness(Condition::Dpw, dpw),
        ],
    })
}

/// Checks KW-1..KW-3; path skeletons also get a KPW verdict.
///
/// The enumeration in KW-3 is found by greedy saturation: a child may be
/// placed once its guard lies inside what is already placed, and placing
/// it only grows that set, so a stall means no enumeration exists.
pub fn validate_kelly(g: &Digraph, d: &KellyDecomposition) -> Result<ValidationReport> {
    check_in_range(g, d.parts.iter().chain(&d.guards))?;
    let sk = &d.skeleton;
    if d.parts.len() != sk.node_count() || d.guards.len() != sk.node_count() {
        return Err(Error::invalid("bag count differs from node count"));
    }
    let below = subtree_unions(sk, &d.parts);

    let kw1 = partition_witness(&g.vertex_set(), &d.parts);

    let kw2 = (0..sk.node_count()).find_map(|i| {
        if let Some(v) = d.guards[i].intersection(&below[i]).first() {
            return Some(Witness::Vertex(v));
        }
        guard_escape(g, &below[i], &d.guards[i]).map(|(u, v)| Witness::Arc(u, v))
    });

    let saturate = |start: VertexSet, candidates: &[usize]| -> Option<Witness> {
        let mut placed = start;
        let mut pending: Vec<usize> = candidates.to_vec();
        pending.sort_unstable();
        while !pending.is_empty() {
            let pick = pending.iter().position(|&j| d.guards[j].is_subset(&placed));
            match pick {
                Some(p) => {
                    let j = pending.remove(p);
                    placed.union_with(&below[j]);
                }
                None => return Some(Witness::Node(pending[0])),
            }
        }
        None
    };
    let kw3 = saturate(VertexSet::new(), &sk.roots()).or_else(|| {
        (0..sk.node_count())
            .find_map(|i| saturate(d.parts[i].union(&d.guards[i]), sk.children(i)))
    });

    let mut verdicts = vec![
        Verdict::from_witness(Condition::Kw1, kw1),
        Verdict::from_witness(Condition::Kw2, kw2),
        Verdict::from_witness(Condition::Kw3, kw3),
    ];
    if sk.path_order().is_some() {
        let kpw = sk.arcs().iter().find_map(|&(i, j)| {
            d.guards[j]
                .difference(&d.parts[i].union(&d.guards[i]))
                .first()
                .map(Witness::Vertex)
        });
        verdicts.push(Verdict::from_witness(Condition::Kpw, kpw));
    }
    Ok(ValidationReport { verdicts })
}

/// Checks DTW-1 against the decomposition's own universe and DTW-2 on
/// every skeleton arc.
pub fn validate_arboreal(g: &Digraph, d: &ArborealDecomposition) -> Result<ValidationReport> {
    check_in_range(g, d.bags.iter().chain(&d.arc_bags).chain([&d.universe]))?;
    if d.skeleton.kind() != SkeletonKind::Arborescence {
        return Err(Error::invalid("arboreal skeleton must be an arborescence"));
    }
    if d.bags.len() != d.skeleton.node_count() || d.arc_bags.len() != d.skeleton.arcs().len() {
        return Err(Error::invalid("bag count differs from skeleton size"));
    }
    let below = subtree_unions(&d.skeleton, &d.bags);
    let dtw1 = partition_witness(&d.universe, &d.bags);
    let dtw2 = d
        .skeleton
        .arcs()
        .iter()
        .zip(&d.arc_bags)
        .find(|(&(_, j), x)| !is_normal(g, &below[j], x))
        .map(|(&(i, j), _)| Witness::SkeletonArc(i, j));
    Ok(ValidationReport {
        verdicts: vec![
            Verdict::from_witness(Condition::Dtw1, dtw1),
            Verdict::from_witness(Condition::Dtw2, dtw2),
        ],
    })
}
