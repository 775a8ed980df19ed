//! ```json
//! {"kind": "arboreal", "universe": [0, 1, 2],
//!  "nodes": [{"id": 0, "bag": [0]}, {"id": 1, "bag": [1, 2]}],
//!  "arcs": [{"from": 0, "to": 1, "bag": [0]}]}
//! ```
//!
//! Kelly nodes carry a `guard`, arboreal arcs a `bag`. A `dpd` without
//! arcs is read as a path in id order.

use serde::{Deserialize, Serialize};

use crate::decomposition::{
    ArborealDecomposition, DagDecomposition, Decomposition, DecompositionKind, DirectedPathDecomposition,
    KellyDecomposition, Skeleton, SkeletonKind,
};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    kind: DecompositionKind,
    #[serde(default)]
    universe: Option<Vec<usize>>,
    nodes: Vec<NodeRepr>,
    #[serde(default)]
    arcs: Vec<ArcRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeRepr {
    id: usize,
    bag: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    guard: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcRepr {
    from: usize,
    to: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bag: Option<Vec<usize>>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn set_of(values: &[usize], path: String) -> Result<VertexSet> {
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(schema(path, "vertex arrays must be strictly ascending"));
    }
    Ok(values.iter().copied().collect())
}

fn write_node(id: usize, bag: &VertexSet, guard: Option<&VertexSet>) -> NodeRepr {
    NodeRepr {
        id,
        bag: bag.to_vec(),
        guard: guard.map(VertexSet::to_vec),
    }
}

fn plain_arcs(skeleton: &Skeleton) -> Vec<ArcRepr> {
    skeleton
        .arcs()
        .iter()
        .map(|&(from, to)| ArcRepr { from, to, bag: None })
        .collect()
}

pub fn serialize_decomposition(d: &Decomposition) -> String {
    let (universe, nodes, arcs) = match d {
        Decomposition::Path(p) => (
            p.bags.iter().flat_map(|b| b.iter()).collect::<VertexSet>(),
            p.bags.iter().enumerate().map(|(i, b)| write_node(i, b, None)).collect(),
            plain_arcs(&p.skeleton()),
        ),
        Decomposition::Dag(dag) => (
            dag.bags.iter().flat_map(|b| b.iter()).collect(),
            dag.bags.iter().enumerate().map(|(i, b)| write_node(i, b, None)).collect(),
            plain_arcs(&dag.skeleton),
        ),
        Decomposition::Kelly(k) => (
            k.parts.iter().flat_map(|b| b.iter()).collect(),
            k.parts
                .iter()
                .zip(&k.guards)
                .enumerate()
                .map(|(i, (w, x))| write_node(i, w, Some(x)))
                .collect(),
            plain_arcs(&k.skeleton),
        ),
        Decomposition::Arboreal(a) => (
            a.universe.clone(),
            a.bags.iter().enumerate().map(|(i, b)| write_node(i, b, None)).collect(),
            a.skeleton
                .arcs()
                .iter()
                .zip(&a.arc_bags)
                .map(|(&(from, to), bag)| ArcRepr {
                    from,
                    to,
                    bag: Some(bag.to_vec()),
                })
                .collect(),
        ),
    };
    let repr = FileRepr {
        kind: d.kind(),
        universe: Some(universe.to_vec()),
        nodes,
        arcs,
    };
    let mut text = serde_json::to_string_pretty(&repr).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn parse_decomposition(text: &str) -> Result<Decomposition> {
    let mut de = serde_json::Deserializer::from_str(text);
    let repr: FileRepr = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner().to_string())
    })?;
    let kind = repr.kind;

    let count = repr.nodes.len();
    let mut bags = vec![None; count];
    let mut guards = vec![None; count];
    for (i, node) in repr.nodes.iter().enumerate() {
        let here = format!("nodes[{i}]");
        if node.id >= count || bags[node.id].is_some() {
            return Err(schema(format!("{here}.id"), "node ids must be distinct and below the node count"));
        }
        bags[node.id] = Some(set_of(&node.bag, format!("{here}.bag"))?);
        match (&node.guard, kind) {
            (Some(g), DecompositionKind::Kelly) => {
                guards[node.id] = Some(set_of(g, format!("{here}.guard"))?);
            }
            (None, DecompositionKind::Kelly) => {
                return Err(schema(here, "missing field `guard`"));
            }
            (Some(_), _) => return Err(schema(format!("{here}.guard"), format!("`guard` is not allowed for {kind}"))),
            (None, _) => {}
        }
    }
    let bags: Vec<VertexSet> = bags.into_iter().map(|b| b.expect("ids form 0..count")).collect();

    let mut arcs = Vec::with_capacity(repr.arcs.len());
    let mut arc_bags = Vec::new();
    for (i, arc) in repr.arcs.iter().enumerate() {
        let here = format!("arcs[{i}]");
        arcs.push((arc.from, arc.to));
        match (&arc.bag, kind) {
            (Some(b), DecompositionKind::Arboreal) => arc_bags.push(set_of(b, format!("{here}.bag"))?),
            (None, DecompositionKind::Arboreal) => return Err(schema(here, "missing field `bag`")),
            (Some(_), _) => return Err(schema(format!("{here}.bag"), format!("`bag` is not allowed for {kind}"))),
            (None, _) => {}
        }
    }
    let universe = match &repr.universe {
        Some(u) => Some(set_of(u, "universe".into())?),
        None => None,
    };
    let bag_union: VertexSet = bags.iter().flat_map(|b| b.iter()).collect();

    let skeleton_kind = match kind {
        DecompositionKind::Arboreal => SkeletonKind::Arborescence,
        _ => SkeletonKind::Dag,
    };
    let structural = |e: Error| schema("arcs", e.to_string());
    let skeleton = if kind == DecompositionKind::Dpd && arcs.is_empty() {
        Skeleton::path(count)
    } else {
        Skeleton::new(count, arcs.clone(), skeleton_kind).map_err(structural)?
    };
    let decomposition = match kind {
        DecompositionKind::Dpd => {
            let order = skeleton
                .path_order()
                .ok_or_else(|| schema("arcs", "a dpd skeleton must be a directed path"))?;
            Decomposition::Path(DirectedPathDecomposition::new(
                order.iter().map(|&i| bags[i].clone()).collect(),
            ))
        }
        DecompositionKind::Dag => Decomposition::Dag(DagDecomposition::new(skeleton, bags).map_err(structural)?),
        DecompositionKind::Kelly => {
            let guards = guards.into_iter().map(|g| g.expect("checked per node")).collect();
            let skeleton = match skeleton.path_order() {
                Some(_) => skeleton.with_kind(SkeletonKind::Path).map_err(structural)?,
                None => skeleton,
            };
            Decomposition::Kelly(KellyDecomposition::new(skeleton, bags, guards).map_err(structural)?)
        }
        DecompositionKind::Arboreal => {
            // arc bags must follow the skeleton's sorted arc order
            let mut order: Vec<usize> = (0..arcs.len()).collect();
            order.sort_by_key(|&k| arcs[k]);
            let arc_bags = order.iter().map(|&k| arc_bags[k].clone()).collect();
            let universe = universe.clone().ok_or_else(|| schema("universe", "missing field `universe`"))?;
            Decomposition::Arboreal(ArborealDecomposition::new(skeleton, bags, arc_bags, universe).map_err(structural)?)
        }
    };
    if kind != DecompositionKind::Arboreal {
        if let Some(u) = universe {
            if u != bag_union {
                return Err(schema("universe", "universe must equal the union of the bags"));
            }
        }
    }
    Ok(decomposition)
}
