use super::{
    validate_dpd, validate_kelly, ArborealDecomposition, DagDecomposition, Decomposition,
    DecompositionKind, DirectedPathDecomposition, KellyDecomposition, Skeleton, SkeletonKind,
};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

fn require_valid(report: super::ValidationReport, what: &str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::invalid(format!("{what} is not valid:\n{report}")))
    }
}

/// Drops every bag that is contained in a neighbouring bag.
///
/// Deleting such a bag keeps every vertex's bags contiguous and keeps the
/// arc condition, so validity is preserved and the width cannot grow.
pub fn normalize_dpd(g: &Digraph, d: &DirectedPathDecomposition) -> Result<DirectedPathDecomposition> {
    require_valid(validate_dpd(g, d)?, "directed path decomposition")?;
    Ok(normalize_bags(d))
}

pub(crate) fn normalize_bags(d: &DirectedPathDecomposition) -> DirectedPathDecomposition {
    let mut bags: Vec<VertexSet> = Vec::with_capacity(d.bags.len());
    for bag in &d.bags {
        if bags.last().is_some_and(|prev| bag.is_subset(prev)) {
            continue;
        }
        while bags.last().is_some_and(|prev| prev.is_subset(bag)) {
            bags.pop();
        }
        bags.push(bag.clone());
    }
    DirectedPathDecomposition { bags }
}

/// `W'_1 = W_1`, `W'_i = W_i \ W_{i-1}`; `X'_1 = ∅`, `X'_i = W_i ∩ W_{i-1}`.
pub fn dpd_to_kelly_path(g: &Digraph, d: &DirectedPathDecomposition) -> Result<KellyDecomposition> {
    require_valid(validate_dpd(g, d)?, "directed path decomposition")?;
    let mut parts = Vec::with_capacity(d.len());
    let mut guards = Vec::with_capacity(d.len());
    for (i, bag) in d.bags.iter().enumerate() {
        match i.checked_sub(1).map(|p| &d.bags[p]) {
            None => {
                parts.push(bag.clone());
                guards.push(VertexSet::new());
            }
            Some(prev) => {
                parts.push(bag.difference(prev));
                guards.push(bag.intersection(prev));
            }
        }
    }
    KellyDecomposition::new(Skeleton::path(d.len()), parts, guards)
}

/// `W_i = W'_i ∪ X'_i` along the path.
pub fn kelly_path_to_dpd(g: &Digraph, d: &KellyDecomposition) -> Result<DirectedPathDecomposition> {
    let order = d
        .skeleton
        .path_order()
        .ok_or_else(|| Error::invalid("Kelly decomposition is not on a path"))?;
    require_valid(validate_kelly(g, d)?, "Kelly path decomposition")?;
    Ok(DirectedPathDecomposition {
        bags: order
            .iter()
            .map(|&i| d.parts[i].union(&d.guards[i]))
            .collect(),
    })
}

/// The one-node decomposition whose bag is `u`.
///
/// Only arboreal decompositions may take `u ≠ V(G)`.
pub fn trivial_decomposition(g: &Digraph, u: &VertexSet, kind: DecompositionKind) -> Result<Decomposition> {
    if !u.is_subset(&g.vertex_set()) {
        return Err(Error::invalid("trivial bag is not a subset of V(G)"));
    }
    if kind != DecompositionKind::Arboreal && *u != g.vertex_set() {
        return Err(Error::invalid(format!("a trivial {kind} decomposition must cover V(G)")));
    }
    Ok(match kind {
        DecompositionKind::Dpd => Decomposition::Path(DirectedPathDecomposition::new(vec![u.clone()])),
        DecompositionKind::Dag => Decomposition::Dag(DagDecomposition::new(
            Skeleton::new(1, vec![], SkeletonKind::Dag)?,
            vec![u.clone()],
        )?),
        DecompositionKind::Kelly => Decomposition::Kelly(KellyDecomposition::new(
            Skeleton::path(1),
            vec![u.clone()],
            vec![VertexSet::new()],
        )?),
        DecompositionKind::Arboreal => Decomposition::Arboreal(trivial_arboreal(u.clone())),
    })
}

pub(crate) fn trivial_arboreal(u: VertexSet) -> ArborealDecomposition {
    let skeleton = Skeleton::new(1, vec![], SkeletonKind::Arborescence).expect("single node");
    ArborealDecomposition::new(skeleton, vec![u.clone()], vec![], u).expect("single node")
}
