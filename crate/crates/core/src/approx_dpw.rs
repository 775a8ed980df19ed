//! Divide-and-conquer directed path decompositions from balanced separators.
//!
//! [`make_dpdec`] splits `G[U]` with a separator `(S; U1, U2)`, decomposes
//! both sides and concatenates the results with `S` added to every bag.
//! The same path doubles as a DAG-decomposition and, after normalising,
//! converts into a Kelly path decomposition.

use serde::Serialize;

use crate::decomposition::{
    dpd_to_kelly_path, normalize_dpd, validate_dpd, DagDecomposition, DirectedPathDecomposition,
    KellyDecomposition,
};
use crate::digraph::Digraph;
use crate::error::Result;
use crate::separator::{Alpha, SeparatorStrategy};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq)]
pub struct DpwRunConfig {
    pub strategy: SeparatorStrategy,
    /// Parts this small are not split further. `None` picks
    /// [`default_threshold`] for the input size.
    pub termination_threshold: Option<usize>,
    pub alpha_prime: Alpha,
}

impl Default for DpwRunConfig {
    fn default() -> Self {
        Self {
            strategy: SeparatorStrategy::default(),
            termination_threshold: None,
            alpha_prime: Alpha::SEVEN_EIGHTHS,
        }
    }
}

impl DpwRunConfig {
    pub fn with_strategy(strategy: SeparatorStrategy) -> Self {
        Self {
            strategy,
            ..Self::default()
        }
    }

    pub fn threshold(mut self, threshold: usize) -> Self {
        self.termination_threshold = Some(threshold);
        self
    }

    pub fn threshold_for(&self, n: usize) -> usize {
        self.termination_threshold.unwrap_or_else(|| default_threshold(n)).max(1)
    }
}

/// `max(2, 2^⌈log2 ⌈log2(n)^1.5⌉⌉)`.
pub fn default_threshold(n: usize) -> usize {
    let log = if n > 1 { (n as f64).log2() } else { 0.0 };
    let target = log.powf(1.5).ceil() as usize;
    target.next_power_of_two().max(2)
}

/// Counters collected during one decomposition run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunTelemetry {
    /// Levels of the recursion tree, the top call being level 1.
    pub recursion_depth: usize,
    pub max_separator_size: usize,
    pub separator_count: usize,
    /// Largest balance set `Y` seen (arboreal runs only).
    pub max_guard_size: usize,
    /// Largest `|S| + |Y|` at a split or `|W| + |Y|` at a leaf (arboreal
    /// runs only).
    pub max_node_load: usize,
}

impl RunTelemetry {
    pub(crate) fn enter(&mut self, depth: usize) {
        self.recursion_depth = self.recursion_depth.max(depth);
    }

    pub(crate) fn separator(&mut self, size: usize) {
        self.separator_count += 1;
        self.max_separator_size = self.max_separator_size.max(size);
    }
}

/// `D1` followed by `D2`, with `S` added to every bag.
pub fn merge(
    d1: &DirectedPathDecomposition,
    d2: &DirectedPathDecomposition,
    s: &VertexSet,
) -> DirectedPathDecomposition {
    let mut bags: Vec<VertexSet> = d1.bags.iter().chain(&d2.bags).map(|b| b.union(s)).collect();
    if bags.is_empty() && !s.is_empty() {
        bags.push(s.clone());
    }
    DirectedPathDecomposition { bags }
}

/// A directed path decomposition of `G[U]`.
pub fn make_dpdec(g: &Digraph, u: &VertexSet, cfg: &DpwRunConfig) -> Result<(DirectedPathDecomposition, RunTelemetry)> {
    if !u.is_subset(&g.vertex_set()) {
        return Err(crate::Error::invalid("U is not a subset of V(G)"));
    }
    let threshold = cfg.threshold_for(u.len());
    let mut telemetry = RunTelemetry::default();
    let d = recurse(g, u, cfg, threshold, 1, &mut telemetry)?;
    Ok((d, telemetry))
}

fn recurse(
    g: &Digraph,
    u: &VertexSet,
    cfg: &DpwRunConfig,
    threshold: usize,
    depth: usize,
    telemetry: &mut RunTelemetry,
) -> Result<DirectedPathDecomposition> {
    telemetry.enter(depth);
    if u.is_empty() {
        return Ok(DirectedPathDecomposition::default());
    }
    if u.len() <= threshold {
        return Ok(DirectedPathDecomposition::new(vec![u.clone()]));
    }
    let sub = g.induced(u);
    let local = sub.graph.vertex_set();
    let r = cfg.strategy.find_with(&sub.graph, &local, cfg.alpha_prime)?;
    telemetry.separator(r.separator.len());
    let s = sub.to_original(&r.separator);
    let d1 = recurse(g, &sub.to_original(&r.u1), cfg, threshold, depth + 1, telemetry)?;
    let d2 = recurse(g, &sub.to_original(&r.u2), cfg, threshold, depth + 1, telemetry)?;
    let merged = merge(&d1, &d2, &s);
    debug_assert!(
        validate_dpd(&sub.graph, &local_bags(&sub, &merged)).is_ok_and(|r| r.passed()),
        "merge produced an invalid decomposition"
    );
    Ok(merged)
}

fn local_bags(sub: &crate::digraph::Subgraph, d: &DirectedPathDecomposition) -> DirectedPathDecomposition {
    DirectedPathDecomposition::new(d.bags.iter().map(|b| sub.to_local(b)).collect())
}

/// [`make_dpdec`] on all of `G`, read as a DAG-decomposition.
pub fn approx_dagwidth(g: &Digraph, cfg: &DpwRunConfig) -> Result<(DagDecomposition, RunTelemetry)> {
    let (d, telemetry) = make_dpdec(g, &g.vertex_set(), cfg)?;
    Ok((d.to_dag(), telemetry))
}

/// [`make_dpdec`] on all of `G`, normalised and converted to a Kelly path
/// decomposition of the same width.
pub fn approx_kellywidth(g: &Digraph, cfg: &DpwRunConfig) -> Result<(KellyDecomposition, RunTelemetry)> {
    let (d, telemetry) = make_dpdec(g, &g.vertex_set(), cfg)?;
    let d = normalize_dpd(g, &d)?;
    Ok((dpd_to_kelly_path(g, &d)?, telemetry))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{validate_dag_decomposition, validate_kelly};
    use crate::digraph::fixtures::*;

    fn bags(d: &DirectedPathDecomposition) -> Vec<Vec<usize>> {
        d.bags.iter().map(VertexSet::to_vec).collect()
    }

    fn exact(threshold: usize) -> DpwRunConfig {
        DpwRunConfig::default().threshold(threshold)
    }

    #[test]
    fn merge_examples() {
        let one = |v| DirectedPathDecomposition::new(vec![VertexSet::singleton(v)]);
        let m = merge(&one(0), &one(1), &VertexSet::new());
        assert_eq!(bags(&m), vec![vec![0], vec![1]]);
        assert!(validate_dpd(&dag2(), &m).unwrap().passed());

        let m = merge(&one(1), &one(2), &VertexSet::from([0]));
        assert_eq!(bags(&m), vec![vec![0, 1], vec![0, 2]]);
        assert!(validate_dpd(&c3(), &m).unwrap().passed());
        assert_eq!(m.width(), 2);

        let empty = DirectedPathDecomposition::default();
        let m = merge(&empty, &empty, &VertexSet::from([3]));
        assert_eq!(bags(&m), vec![vec![3]]);
    }

    #[test]
    fn threshold_defaults() {
        assert_eq!(default_threshold(0), 2);
        assert_eq!(default_threshold(2), 2);
        assert_eq!(default_threshold(16), 8);
        assert_eq!(default_threshold(1000), 32);
    }

    #[test]
    fn cycle() {
        let g = c3();
        let (d, t) = make_dpdec(&g, &g.vertex_set(), &exact(1)).unwrap();
        assert!(validate_dpd(&g, &d).unwrap().passed());
        assert!(d.width() <= 2);
        assert!(t.separator_count >= 1);
    }

    #[test]
    fn small_input_is_trivial() {
        let g = bi_clique(3);
        let (d, t) = make_dpdec(&g, &g.vertex_set(), &exact(3)).unwrap();
        assert_eq!(bags(&d), vec![vec![0, 1, 2]]);
        assert_eq!(t.recursion_depth, 1);
    }

    #[test]
    fn edgeless() {
        let g = Digraph::new(4);
        let (d, t) = make_dpdec(&g, &g.vertex_set(), &exact(1)).unwrap();
        assert!(validate_dpd(&g, &d).unwrap().passed());
        assert_eq!(d.width(), 1);
        assert_eq!(t.max_separator_size, 0);
    }

    #[test]
    fn dag_and_kelly_views() {
        let k2 = bi_clique(2);
        let (d, _) = approx_dagwidth(&c3(), &exact(1)).unwrap();
        assert!(validate_dag_decomposition(&c3(), &d).unwrap().passed());
        assert!(d.width() <= 2);
        let (d, _) = approx_dagwidth(&k2, &exact(1)).unwrap();
        assert_eq!(d.width(), 2);
        let (k, _) = approx_kellywidth(&k2, &exact(1)).unwrap();
        assert!(validate_kelly(&k2, &k).unwrap().passed());
        assert_eq!(k.width(), 2);
        let (k, _) = approx_kellywidth(&Digraph::new(3), &exact(1)).unwrap();
        assert_eq!(k.width(), 1);
        let (k, _) = approx_kellywidth(&Digraph::new(1), &DpwRunConfig::default()).unwrap();
        assert_eq!(k.width(), 1);
    }
}
