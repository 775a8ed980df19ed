mod common;

use common::{brute_force_separator, closure};
use dwl_core::approx_dpw::{make_dpdec, DpwRunConfig};
use dwl_core::approx_dtw::make_arbdec;
use dwl_core::decomposition::{
    normalize_dpd, validate_arboreal, validate_dag_decomposition, validate_dpd, DirectedPathDecomposition,
};
use dwl_core::io::{parse_decomposition, parse_digraph, serialize_decomposition, serialize_digraph};
use dwl_core::oracles::{dagwidth_by_game, dpw_by_ordering, kellywidth_by_elimination, kellywidth_by_game};
use dwl_core::separator::{find_sep_exact, find_sep_heuristic, validate_separator, Alpha};
use dwl_core::{
    is_guarding, is_normal, reachable_set, scc_condensation, Decomposition, Digraph, SeparatorStrategy, VertexSet,
};
use proptest::prelude::*;

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * n).prop_map(move |bits| {
            let arcs = (0..n * n)
                .filter(|&i| bits[i] && i / n != i % n)
                .map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|bits| (0..bits.len()).filter(|&v| bits[v]).collect())
}

fn with_sets(max_n: usize) -> impl Strategy<Value = (Digraph, VertexSet, VertexSet)> {
    digraph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), subset(n), subset(n))
    })
}

/// `W` is `X`-normal when no walk in `G ∖ X` runs from `W` through a vertex
/// outside `W ∪ X` and back into `W`.
fn normal_by_closure(g: &Digraph, w: &VertexSet, x: &VertexSet) -> bool {
    if !w.is_disjoint(x) {
        return false;
    }
    let blocked: Vec<bool> = g.vertices().map(|v| x.contains(v)).collect();
    let r = closure(g, &blocked);
    let outside: Vec<usize> = g.vertices().filter(|&z| !w.contains(z) && !x.contains(z)).collect();
    !w.iter()
        .any(|a| outside.iter().any(|&z| r[a][z] && w.iter().any(|b| r[z][b])))
}

fn bools(g: &Digraph, s: &VertexSet) -> Vec<bool> {
    g.vertices().map(|v| s.contains(v)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normality_matches_walk_definition((g, w, x) in with_sets(7)) {
        let x = x.difference(&w);
        prop_assert_eq!(is_normal(&g, &w, &x), normal_by_closure(&g, &w, &x));
    }

    #[test]
    fn normal_sets_are_unions_of_components((g, w, x) in with_sets(7)) {
        let x = x.difference(&w);
        prop_assume!(is_normal(&g, &w, &x));
        let sub = g.induced(&g.vertex_set().difference(&x));
        for c in scc_condensation(&sub.graph).components {
            let c = sub.to_original(&c);
            prop_assert!(c.is_subset(&w) || c.is_disjoint(&w));
        }
    }

    #[test]
    fn guarding_implies_normal((g, w, x) in with_sets(7)) {
        if is_guarding(&g, &w, &x) {
            prop_assert!(is_normal(&g, &w, &x));
        }
    }

    #[test]
    fn blocking_more_reaches_less((g, a, b) in with_sets(7)) {
        prop_assume!(!a.is_empty());
        let src = VertexSet::singleton(a.first().unwrap());
        let small = b.difference(&src);
        let big = small.union(&a.difference(&src));
        let r_small = reachable_set(&g, &src, &small).unwrap();
        let r_big = reachable_set(&g, &src, &big).unwrap();
        prop_assert!(r_big.is_subset(&r_small));
    }

    #[test]
    fn condensation_partitions_in_topological_order(g in digraph(8)) {
        let cond = scc_condensation(&g);
        let mut seen = VertexSet::new();
        for c in &cond.components {
            prop_assert!(c.is_disjoint(&seen));
            seen.union_with(c);
        }
        prop_assert_eq!(seen, g.vertex_set());
        let r = closure(&g, &vec![false; g.vertex_count()]);
        for (u, v) in g.arcs() {
            let (cu, cv) = (cond.component_of(u).unwrap(), cond.component_of(v).unwrap());
            prop_assert!(cu <= cv);
            prop_assert_eq!(cu == cv, r[v][u]);
        }
    }

    #[test]
    fn path_and_dag_validity_agree(g in digraph(6), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut bags = Vec::new();
        let mut state = seed;
        for _ in 0..(n + 1) {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            bags.push(VertexSet::from_mask((state >> 20) & ((1u64 << n) - 1)));
        }
        let d = DirectedPathDecomposition::new(bags);
        let path = validate_dpd(&g, &d).unwrap().passed();
        let dag = validate_dag_decomposition(&g, &d.to_dag()).unwrap().passed();
        prop_assert_eq!(path, dag);
    }

    #[test]
    fn graph_text_round_trips(g in digraph(8)) {
        prop_assert_eq!(parse_digraph(&serialize_digraph(&g)).unwrap(), g);
    }

    #[test]
    fn decomposition_json_round_trips(g in digraph(7)) {
        let (d, _) = make_arbdec(&g, &g.vertex_set(), &VertexSet::new(), &SeparatorStrategy::exact()).unwrap();
        let d = Decomposition::Arboreal(d);
        prop_assert_eq!(parse_decomposition(&serialize_decomposition(&d)).unwrap(), d);
        let (p, _) = make_dpdec(&g, &g.vertex_set(), &DpwRunConfig::default().threshold(1)).unwrap();
        let p = Decomposition::Path(p);
        prop_assert_eq!(parse_decomposition(&serialize_decomposition(&p)).unwrap(), p);
    }

    #[test]
    fn normalizing_is_idempotent_and_keeps_validity(g in digraph(7)) {
        let (d, _) = make_dpdec(&g, &g.vertex_set(), &DpwRunConfig::default().threshold(1)).unwrap();
        let once = normalize_dpd(&g, &d).unwrap();
        prop_assert!(validate_dpd(&g, &once).unwrap().passed());
        prop_assert!(once.width() <= d.width());
        prop_assert_eq!(normalize_dpd(&g, &once).unwrap(), once.clone());
        for pair in once.bags.windows(2) {
            prop_assert!(!pair[0].is_subset(&pair[1]) && !pair[1].is_subset(&pair[0]));
        }
    }

    #[test]
    fn exact_separators_are_valid_and_minimal((g, u, _) in with_sets(6)) {
        let alpha = Alpha::THREE_QUARTERS;
        let r = find_sep_exact(&g, &u, alpha, 16).unwrap();
        prop_assert!(validate_separator(&g, &u, alpha, &r));
        prop_assert_eq!(r.size(), brute_force_separator(&g, &bools(&g, &u), 3, 4));
    }

    #[test]
    fn heuristic_separators_are_valid((g, u, _) in with_sets(9), seed in any::<u64>()) {
        for alpha in [Alpha::THREE_QUARTERS, Alpha::SEVEN_EIGHTHS] {
            let r = find_sep_heuristic(&g, &u, alpha, seed);
            prop_assert!(validate_separator(&g, &u, alpha, &r));
        }
    }

    #[test]
    fn approximations_are_valid(g in digraph(8), seed in any::<u64>()) {
        for strategy in [SeparatorStrategy::exact(), SeparatorStrategy::heuristic(seed), SeparatorStrategy::trivial()] {
            let cfg = DpwRunConfig::with_strategy(strategy.clone()).threshold(1);
            let (d, _) = make_dpdec(&g, &g.vertex_set(), &cfg).unwrap();
            prop_assert!(validate_dpd(&g, &d).unwrap().passed());
            let (d, _) = make_arbdec(&g, &g.vertex_set(), &VertexSet::new(), &strategy).unwrap();
            prop_assert!(validate_arboreal(&g, &d).unwrap().passed());
        }
    }

    #[test]
    fn width_oracles_are_ordered(g in digraph(5)) {
        let dgw = dagwidth_by_game(&g, 8).unwrap();
        let kw_game = kellywidth_by_game(&g, 8).unwrap();
        let (kw, _) = kellywidth_by_elimination(&g, 9).unwrap();
        let dpw = dpw_by_ordering(&g, 12).unwrap();
        prop_assert_eq!(kw, kw_game);
        prop_assert!(dgw <= dpw.width);
        prop_assert!(kw <= dpw.width);
        prop_assert!(validate_dpd(&g, &dpw.decomposition).unwrap().passed());
    }
}
