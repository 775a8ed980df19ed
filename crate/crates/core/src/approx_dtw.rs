//! Divide-and-conquer arboreal decompositions.
//!
//! [`make_arbdec`] decomposes `G` with respect to a `Y`-normal set `W`. It
//! separates `Y` in all of `G`, splits `W ∖ S` into the strongly connected
//! pieces that survive removing `S` and then `Y`, recurses on each piece and
//! hangs the results below a new root holding `S ∩ W`.

use crate::approx_dpw::RunTelemetry;
use crate::decomposition::{trivial_arboreal, validate_arboreal, ArborealDecomposition, Skeleton, SkeletonKind};
use crate::digraph::{is_normal, Digraph};
use crate::error::{Error, Result};
use crate::scc::scc_condensation_within;
use crate::separator::{Alpha, SeparatorStrategy};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementPart {
    pub vertices: VertexSet,
    /// The component of `G ∖ S` containing `vertices`.
    pub parent: VertexSet,
}

/// The pieces of `W ∖ S` relative to `Y` and `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub w: VertexSet,
    pub y: VertexSet,
    pub s: VertexSet,
    pub parts: Vec<RefinementPart>,
}

impl Refinement {
    /// `S ∪ (Y ∩ parent)`, the guard handed to part `j`.
    pub fn guard(&self, j: usize) -> VertexSet {
        self.s.union(&self.y.intersection(&self.parts[j].parent))
    }
}

/// Each part is a strongly connected component of `C ∖ Y`, for `C` a
/// component of `G ∖ S`, lying inside `W`. Parts are ordered by the
/// topological position of `C`, then by smallest vertex.
pub fn refine(g: &Digraph, w: &VertexSet, y: &VertexSet, s: &VertexSet) -> Result<Refinement> {
    let all = g.vertex_set();
    if !w.is_subset(&all) || !y.is_subset(&all) || !s.is_subset(&all) {
        return Err(Error::invalid("refinement sets must be subsets of V(G)"));
    }
    if !w.is_disjoint(y) || !is_normal(g, w, y) {
        return Err(Error::invalid("W is not Y-normal"));
    }
    if w.is_disjoint(s) {
        return Err(Error::invalid("S does not meet W"));
    }
    let outer = scc_condensation_within(g, &all.difference(s));
    let mut parts = Vec::new();
    for parent in &outer.components {
        let inner = scc_condensation_within(g, &parent.difference(y));
        let mut here: Vec<&VertexSet> = inner.components.iter().filter(|c| c.is_subset(w)).collect();
        here.sort_by_key(|c| c.first());
        parts.extend(here.into_iter().map(|c| RefinementPart {
            vertices: c.clone(),
            parent: parent.clone(),
        }));
    }
    Ok(Refinement {
        w: w.clone(),
        y: y.clone(),
        s: s.clone(),
        parts,
    })
}

/// A new root with bag `S ∩ W`, and one arc with bag
/// [`Refinement::guard`] down to the root of each child.
pub fn glue(children: &[ArborealDecomposition], r: &Refinement) -> Result<ArborealDecomposition> {
    if children.len() != r.parts.len() {
        return Err(Error::invalid(format!(
            "{} children for {} refinement parts",
            children.len(),
            r.parts.len()
        )));
    }
    let mut bags = vec![r.s.intersection(&r.w)];
    let mut arcs = Vec::new();
    let mut arc_bags = Vec::new();
    for (j, child) in children.iter().enumerate() {
        if child.universe != r.parts[j].vertices {
            return Err(Error::invalid(format!("child {j} does not decompose its refinement part")));
        }
        let offset = bags.len();
        arcs.push((0, offset + child.root()));
        arc_bags.push(r.guard(j));
        for (&(a, b), bag) in child.skeleton.arcs().iter().zip(&child.arc_bags) {
            arcs.push((a + offset, b + offset));
            arc_bags.push(bag.clone());
        }
        bags.extend(child.bags.iter().cloned());
    }
    // arc bags must follow the skeleton's sorted arc order
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&k| arcs[k]);
    let arc_bags = order.iter().map(|&k| arc_bags[k].clone()).collect();
    let skeleton = Skeleton::new(bags.len(), arcs, SkeletonKind::Arborescence)?;
    ArborealDecomposition::new(skeleton, bags, arc_bags, r.w.clone())
}

/// An arboreal decomposition of `G` with respect to the `Y`-normal set `W`.
///
/// Separators of `Y` are requested at balance `7/8` whatever the strategy's
/// own `alpha`.
pub fn make_arbdec(
    g: &Digraph,
    w: &VertexSet,
    y: &VertexSet,
    strategy: &SeparatorStrategy,
) -> Result<(ArborealDecomposition, RunTelemetry)> {
    if !w.is_disjoint(y) || !w.is_subset(&g.vertex_set()) || !is_normal(g, w, y) {
        return Err(Error::invalid("W is not Y-normal"));
    }
    let mut telemetry = RunTelemetry::default();
    let d = recurse(g, w, y, strategy, 1, &mut telemetry)?;
    debug_assert!(
        w != &g.vertex_set() || validate_arboreal(g, &d).is_ok_and(|r| r.passed()),
        "glued decomposition is invalid"
    );
    Ok((d, telemetry))
}

fn recurse(
    g: &Digraph,
    w: &VertexSet,
    y: &VertexSet,
    strategy: &SeparatorStrategy,
    depth: usize,
    telemetry: &mut RunTelemetry,
) -> Result<ArborealDecomposition> {
    telemetry.enter(depth);
    telemetry.max_guard_size = telemetry.max_guard_size.max(y.len());
    if w.len() <= y.len() {
        telemetry.max_node_load = telemetry.max_node_load.max(w.len() + y.len());
        return Ok(trivial_arboreal(w.clone()));
    }
    let mut s = strategy.find_with(g, y, Alpha::SEVEN_EIGHTHS)?.separator;
    if s.is_disjoint(w) {
        s.insert(w.first().expect("|W| > |Y| ≥ 0"));
    }
    telemetry.separator(s.len());
    telemetry.max_node_load = telemetry.max_node_load.max(s.len() + y.len());
    let r = refine(g, w, y, &s)?;
    let mut children = Vec::with_capacity(r.parts.len());
    for j in 0..r.parts.len() {
        let yj = r.guard(j);
        let wj = &r.parts[j].vertices;
        debug_assert!(is_normal(g, wj, &yj), "refinement part is not normal to its guard");
        children.push(recurse(g, wj, &yj, strategy, depth + 1, telemetry)?);
    }
    glue(&children, &r)
}
