//! The four decomposition shapes, their validators and the conversions
//! between directed path decompositions and Kelly path decompositions.

mod convert;
mod validate;

pub(crate) use convert::trivial_arboreal;

pub use convert::{
    dpd_to_kelly_path, kelly_path_to_dpd, normalize_dpd, trivial_decomposition,
};
pub use validate::{
    validate_arboreal, validate_dag_decomposition, validate_dpd, validate_kelly, Condition,
    ValidationReport, Verdict, Witness,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SkeletonKind {
    Dag,
    Path,
    Arborescence,
}

/// The DAG underlying a decomposition. Nodes are `0..node_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    node_count: usize,
    arcs: Vec<(usize, usize)>,
    kind: SkeletonKind,
    children: Vec<Vec<usize>>,
    parents: Vec<Vec<usize>>,
}

impl Skeleton {
    /// Builds a skeleton and checks it has the claimed shape.
    pub fn new(node_count: usize, mut arcs: Vec<(usize, usize)>, kind: SkeletonKind) -> Result<Self> {
        arcs.sort_unstable();
        if arcs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("skeleton has a repeated arc"));
        }
        let mut children = vec![Vec::new(); node_count];
        let mut parents = vec![Vec::new(); node_count];
        for &(i, j) in &arcs {
            if i >= node_count || j >= node_count || i == j {
                return Err(Error::invalid(format!("bad skeleton arc ({i},{j})")));
            }
            children[i].push(j);
            parents[j].push(i);
        }
        let skeleton = Self {
            node_count,
            arcs,
            kind,
            children,
            parents,
        };
        if skeleton.topological_order().is_none() {
            return Err(Error::invalid("skeleton has a cycle"));
        }
        match kind {
            SkeletonKind::Dag => {}
            SkeletonKind::Path => {
                if skeleton.path_order().is_none() {
                    return Err(Error::invalid("skeleton is not a directed path"));
                }
            }
            SkeletonKind::Arborescence => {
                if !skeleton.is_arborescence() {
                    return Err(Error::invalid("skeleton is not an arborescence"));
                }
            }
        }
        Ok(skeleton)
    }

    /// The path `0 → 1 → ... → len-1`.
    pub fn path(len: usize) -> Self {
        let arcs = (1..len).map(|i| (i - 1, i)).collect();
        Self::new(len, arcs, SkeletonKind::Path).expect("path skeleton")
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn kind(&self) -> SkeletonKind {
        self.kind
    }

    /// Same graph, relabelled kind. Fails if the shape does not fit.
    pub fn with_kind(&self, kind: SkeletonKind) -> Result<Self> {
        Self::new(self.node_count, self.arcs.clone(), kind)
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn parents(&self, i: usize) -> &[usize] {
        &self.parents[i]
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.node_count)
            .filter(|&i| self.parents[i].is_empty())
            .collect()
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indegree: Vec<usize> = self.parents.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..self.node_count).rev().filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(self.node_count);
        while let Some(i) = ready.pop() {
            order.push(i);
            for &j in self.children[i].iter().rev() {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(j);
                }
            }
        }
        (order.len() == self.node_count).then_some(order)
    }

    /// Nodes in path order, if the skeleton is a single directed path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if self.node_count == 0 {
            return Some(Vec::new());
        }
        let roots = self.roots();
        if roots.len() != 1 || self.arcs.len() != self.node_count - 1 {
            return None;
        }
        let mut order = vec![roots[0]];
        while let Some(&last) = order.last() {
            match self.children[last].as_slice() {
                [] => break,
                [next] => order.push(*next),
                _ => return None,
            }
        }
        (order.len() == self.node_count).then_some(order)
    }

    fn is_arborescence(&self) -> bool {
        let roots = self.roots();
        roots.len() == 1
            && self.arcs.len() + 1 == self.node_count
            && (0..self.node_count).all(|i| self.parents[i].len() <= 1)
            && self.descendants()[roots[0]].len() == self.node_count
    }

    /// For every node `i`, the set of nodes `j` with `i ⪯ j`.
    pub fn descendants(&self) -> Vec<VertexSet> {
        let mut desc: Vec<VertexSet> = (0..self.node_count).map(VertexSet::singleton).collect();
        if let Some(order) = self.topological_order() {
            for &i in order.iter().rev() {
                for &j in &self.children[i] {
                    let below = desc[j].clone();
                    desc[i].union_with(&below);
                }
            }
        }
        desc
    }

    /// Depth of every node below the root of an arborescence.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.node_count];
        if let Some(order) = self.topological_order() {
            for &i in &order {
                for &j in &self.children[i] {
                    depth[j] = depth[j].max(depth[i] + 1);
                }
            }
        }
        depth
    }
}

/// `W_{⪰i}` for every node.
pub(crate) fn subtree_unions(skeleton: &Skeleton, bags: &[VertexSet]) -> Vec<VertexSet> {
    skeleton
        .descendants()
        .iter()
        .map(|desc| {
            let mut union = VertexSet::new();
            for j in desc {
                union.union_with(&bags[j]);
            }
            union
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DagDecomposition {
    pub skeleton: Skeleton,
    pub bags: Vec<VertexSet>,
}

/// A DAG-decomposition on a path, stored as its bag sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DirectedPathDecomposition {
    pub bags: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KellyDecomposition {
    pub skeleton: Skeleton,
    /// `W_i`, a partition of the vertex set.
    pub parts: Vec<VertexSet>,
    /// `X_i`, the guard of node `i`.
    pub guards: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArborealDecomposition {
    pub skeleton: Skeleton,
    pub bags: Vec<VertexSet>,
    /// `X_e`, parallel to `skeleton.arcs()`.
    pub arc_bags: Vec<VertexSet>,
    /// The set partitioned by the node bags.
    pub universe: VertexSet,
}

impl DagDecomposition {
    pub fn new(skeleton: Skeleton, bags: Vec<VertexSet>) -> Result<Self> {
        if bags.len() != skeleton.node_count() {
            return Err(Error::invalid("bag count differs from node count"));
        }
        Ok(Self { skeleton, bags })
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

impl DirectedPathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        Self { bags }
    }

    pub fn skeleton(&self) -> Skeleton {
        Skeleton::path(self.bags.len())
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// The same bags viewed as a DAG-decomposition.
    pub fn to_dag(&self) -> DagDecomposition {
        let skeleton = Skeleton::path(self.bags.len())
            .with_kind(SkeletonKind::Dag)
            .expect("a path is a DAG");
        DagDecomposition {
            skeleton,
            bags: self.bags.clone(),
        }
    }

    /// Reads a DAG-decomposition whose skeleton happens to be a path.
    pub fn from_dag(dag: &DagDecomposition) -> Result<Self> {
        let order = dag
            .skeleton
            .path_order()
            .ok_or_else(|| Error::invalid("skeleton is not a directed path"))?;
        Ok(Self {
            bags: order.iter().map(|&i| dag.bags[i].clone()).collect(),
        })
    }
}

impl KellyDecomposition {
    pub fn new(skeleton: Skeleton, parts: Vec<VertexSet>, guards: Vec<VertexSet>) -> Result<Self> {
        if parts.len() != skeleton.node_count() || guards.len() != skeleton.node_count() {
            return Err(Error::invalid("bag count differs from node count"));
        }
        Ok(Self {
            skeleton,
            parts,
            guards,
        })
    }

    /// `max |W_i ∪ X_i|`.
    pub fn width(&self) -> usize {
        self.parts
            .iter()
            .zip(&self.guards)
            .map(|(w, x)| w.union(x).len())
            .max()
            .unwrap_or(0)
    }
}

impl ArborealDecomposition {
    pub fn new(
        skeleton: Skeleton,
        bags: Vec<VertexSet>,
        arc_bags: Vec<VertexSet>,
        universe: VertexSet,
    ) -> Result<Self> {
        if skeleton.kind() != SkeletonKind::Arborescence {
            return Err(Error::invalid("arboreal skeleton must be an arborescence"));
        }
        if bags.len() != skeleton.node_count() || arc_bags.len() != skeleton.arcs().len() {
            return Err(Error::invalid("bag count differs from skeleton size"));
        }
        Ok(Self {
            skeleton,
            bags,
            arc_bags,
            universe,
        })
    }

    pub fn root(&self) -> usize {
        self.skeleton.roots()[0]
    }

    /// `W_i ∪ X_{∼i}` for every node.
    pub fn node_loads(&self) -> Vec<VertexSet> {
        let mut loads = self.bags.clone();
        for (&(i, j), bag) in self.skeleton.arcs().iter().zip(&self.arc_bags) {
            loads[i].union_with(bag);
            loads[j].union_with(bag);
        }
        loads
    }

    /// `max |W_i ∪ X_{∼i}| - 1`, floored at zero.
    pub fn width(&self) -> usize {
        self.node_loads()
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecompositionKind {
    Dpd,
    Dag,
    Kelly,
    Arboreal,
}

impl DecompositionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DecompositionKind::Dpd => "dpd",
            DecompositionKind::Dag => "dag",
            DecompositionKind::Kelly => "kelly",
            DecompositionKind::Arboreal => "arboreal",
        }
    }
}

impl fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for DecompositionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dpd" => Ok(Self::Dpd),
            "dag" => Ok(Self::Dag),
            "kelly" => Ok(Self::Kelly),
            "arboreal" => Ok(Self::Arboreal),
            other => Err(Error::invalid(format!("unknown decomposition kind `{other}`"))),
        }
    }
}

/// Any of the four decompositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Path(DirectedPathDecomposition),
    Dag(DagDecomposition),
    Kelly(KellyDecomposition),
    Arboreal(ArborealDecomposition),
}

impl Decomposition {
    pub fn kind(&self) -> DecompositionKind {
        match self {
            Decomposition::Path(_) => DecompositionKind::Dpd,
            Decomposition::Dag(_) => DecompositionKind::Dag,
            Decomposition::Kelly(_) => DecompositionKind::Kelly,
            Decomposition::Arboreal(_) => DecompositionKind::Arboreal,
        }
    }

    pub fn width(&self) -> usize {
        match self {
            Decomposition::Path(d) => d.width(),
            Decomposition::Dag(d) => d.width(),
            Decomposition::Kelly(d) => d.width(),
            Decomposition::Arboreal(d) => d.width(),
        }
    }

    pub fn validate(&self, g: &crate::Digraph) -> Result<ValidationReport> {
        match self {
            Decomposition::Path(d) => validate_dpd(g, d),
            Decomposition::Dag(d) => validate_dag_decomposition(g, d),
            Decomposition::Kelly(d) => validate_kelly(g, d),
            Decomposition::Arboreal(d) => validate_arboreal(g, d),
        }
    }
}
