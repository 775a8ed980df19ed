//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so that every criterion reports even
//! when an earlier one fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::{random_digraph, random_undirected, treewidth};
use dwl_core::approx_dpw::{approx_dagwidth, approx_kellywidth, make_dpdec, DpwRunConfig};
use dwl_core::approx_dtw::make_arbdec;
use dwl_core::decomposition::{
    dpd_to_kelly_path, kelly_path_to_dpd, normalize_dpd, validate_arboreal, validate_dag_decomposition,
    validate_dpd, validate_kelly, DirectedPathDecomposition,
};
use dwl_core::oracles::{
    biorient, dagwidth_by_game, dpw_by_ordering, dtw_exact_small, gen_family, kellywidth_by_elimination,
    kellywidth_by_game, Family,
};
use dwl_core::separator::{dsn, separator_from_arboreal, validate_separator, Alpha};
use dwl_core::{Digraph, SeparatorStrategy, VertexSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strategies(seed: u64) -> [SeparatorStrategy; 2] {
    [SeparatorStrategy::exact(), SeparatorStrategy::heuristic(seed)]
}

/// Every approximate construction passes its validator.
fn validator_sweep() -> Outcome {
    let graphs = 500;
    let mut runs = 0;
    for seed in 0..graphs {
        let g = random_digraph(seed, 1, 8);
        for strategy in strategies(seed) {
            for threshold in [1, 2] {
                let cfg = DpwRunConfig::with_strategy(strategy.clone()).threshold(threshold);
                let (d, _) = make_dpdec(&g, &g.vertex_set(), &cfg).map_err(|e| e.to_string())?;
                let report = validate_dpd(&g, &d).unwrap();
                ensure(report.passed(), || format!("make_dpdec, seed {seed}:\n{report}"))?;
                let (d, _) = approx_dagwidth(&g, &cfg).map_err(|e| e.to_string())?;
                let report = validate_dag_decomposition(&g, &d).unwrap();
                ensure(report.passed(), || format!("approx_dagwidth, seed {seed}:\n{report}"))?;
                let (d, _) = approx_kellywidth(&g, &cfg).map_err(|e| e.to_string())?;
                let report = validate_kelly(&g, &d).unwrap();
                ensure(report.passed(), || format!("approx_kellywidth, seed {seed}:\n{report}"))?;
                runs += 3;
            }
            let (d, _) = make_arbdec(&g, &g.vertex_set(), &VertexSet::new(), &strategy).map_err(|e| e.to_string())?;
            let report = validate_arboreal(&g, &d).unwrap();
            ensure(report.passed(), || format!("make_arbdec, seed {seed}:\n{report}"))?;
            runs += 1;
        }
    }
    Ok(format!("{graphs} digraphs, {runs} runs valid"))
}

fn check_conversion(g: &Digraph, d: &DirectedPathDecomposition, label: &str) -> Result<(), String> {
    let d = normalize_dpd(g, d).map_err(|e| e.to_string())?;
    let k = dpd_to_kelly_path(g, &d).map_err(|e| format!("{label}: {e}"))?;
    ensure(validate_kelly(g, &k).unwrap().passed(), || format!("{label}: Kelly path invalid"))?;
    ensure(k.width() == d.width(), || {
        format!("{label}: Kelly width {} vs dpd width {}", k.width(), d.width())
    })?;
    let back = kelly_path_to_dpd(g, &k).map_err(|e| format!("{label}: {e}"))?;
    ensure(validate_dpd(g, &back).unwrap().passed(), || format!("{label}: round trip invalid"))?;
    ensure(back == d, || format!("{label}: round trip changed the bags"))?;
    Ok(())
}

/// Converting a normalised dpd to a Kelly path decomposition and back is
/// exact.
fn conversion_exactness() -> Outcome {
    let mut checked = 0;
    for seed in 0..300 {
        let g = random_digraph(1000 + seed, 1, 8);
        let cfg = DpwRunConfig::default().threshold(1);
        let (d, _) = make_dpdec(&g, &g.vertex_set(), &cfg).unwrap();
        check_conversion(&g, &d, &format!("approx seed {seed}"))?;
        let w = dpw_by_ordering(&g, 12).unwrap();
        check_conversion(&g, &w.decomposition, &format!("oracle seed {seed}"))?;
        checked += 2;
    }
    Ok(format!("{checked} normalised decompositions, widths preserved exactly"))
}

/// On biorientations, both games give treewidth + 1 and the arboreal
/// oracle gives treewidth.
fn biorientation_equalities() -> Outcome {
    let corpus = 120;
    let mut dtw_checked = 0;
    for seed in 0..corpus {
        let (n, edges) = random_undirected(2000 + seed, 1, 6);
        let g = biorient(n, &edges).unwrap();
        let tw = treewidth(n, &edges);
        let dgw = dagwidth_by_game(&g, 8).unwrap();
        let kw = kellywidth_by_game(&g, 8).unwrap();
        ensure(dgw == tw + 1 && kw == tw + 1, || {
            format!("seed {seed}: tw {tw}, dag-width {dgw}, Kelly-width {kw}")
        })?;
        if n <= 5 {
            let dtw = dtw_exact_small(&g, 5).unwrap().width;
            ensure(dtw == tw, || format!("seed {seed}: tw {tw}, directed treewidth {dtw}"))?;
            dtw_checked += 1;
        }
    }
    Ok(format!("{corpus} graphs H (n ≤ 6), {dtw_checked} with n ≤ 5 also checked for dtw"))
}

/// The separator number bounds every width parameter from below.
fn separator_number_bounds() -> Outcome {
    let graphs = 120;
    for seed in 0..graphs {
        let g = random_digraph(3000 + seed, 1, 5);
        let s = dsn(&g, Alpha::THREE_QUARTERS, 12).unwrap() as i64;
        let dtw = dtw_exact_small(&g, 5).unwrap().width as i64;
        let dgw = dagwidth_by_game(&g, 8).unwrap() as i64;
        let kw = kellywidth_by_game(&g, 8).unwrap() as i64;
        let dpw = dpw_by_ordering(&g, 12).unwrap().width as i64;
        ensure(
            s - 1 <= dtw && s - 2 <= 3 * dgw && s < 6 * kw && s - 2 <= 3 * dpw,
            || format!("seed {seed}: dsn {s}, dtw {dtw}, dgw {dgw}, kw {kw}, dpw {dpw}"),
        )?;
    }
    Ok(format!("{graphs} digraphs (n ≤ 5)"))
}

/// Separators read off optimal arboreal decompositions are balanced and
/// small.
fn arboreal_separators() -> Outcome {
    let graphs = 120;
    let mut sets = 0;
    for seed in 0..graphs {
        let g = random_digraph(4000 + seed, 1, 5);
        let best = dtw_exact_small(&g, 5).unwrap();
        let n = g.vertex_count();
        for mask in 0u64..1 << n {
            let u = VertexSet::from_mask(mask);
            let r = separator_from_arboreal(&g, &best.decomposition, &u).map_err(|e| e.to_string())?;
            ensure(validate_separator(&g, &u, Alpha::THREE_QUARTERS, &r), || {
                format!("seed {seed}, U = {u}: invalid separator {r:?}")
            })?;
            ensure(r.size() <= best.width + 1, || {
                format!("seed {seed}, U = {u}: |S| = {} > dtw + 1 = {}", r.size(), best.width + 1)
            })?;
            sets += 1;
        }
    }
    Ok(format!("{graphs} digraphs, {sets} balance sets"))
}

/// Bidirected ternary trees keep Kelly-width 2 while directed pathwidth
/// grows with the height.
fn ternary_tree_gap() -> Outcome {
    let mut dpw = Vec::new();
    for height in [2usize, 3] {
        let g = gen_family(&Family::BiorientTernaryTree(height), 0).unwrap();
        let kw = kellywidth_by_game(&g, g.vertex_count()).unwrap();
        ensure(kw == 2, || format!("height {height}: Kelly-width {kw}"))?;
        let w = dpw_by_ordering(&g, g.vertex_count()).unwrap();
        ensure(validate_dpd(&g, &w.decomposition).unwrap().passed(), || {
            format!("height {height}: invalid certificate")
        })?;
        ensure(w.width == height || w.width == height + 1, || {
            format!("height {height}: directed pathwidth {}", w.width)
        })?;
        dpw.push(w.width);
    }
    ensure(dpw[0] < dpw[1], || format!("directed pathwidth did not grow: {dpw:?}"))?;
    Ok(format!(
        "heights 2 and 3 (n = 13, 40): Kelly-width 2, 2; directed pathwidth {}, {}",
        dpw[0], dpw[1]
    ))
}

/// Widths respect the recursion accounting of both constructions.
fn width_accounting() -> Outcome {
    let graphs = 300;
    let mut runs = 0;
    for seed in 0..graphs {
        let g = random_digraph(5000 + seed, 1, 8);
        for strategy in strategies(seed) {
            for threshold in [1, 2, 3] {
                let cfg = DpwRunConfig::with_strategy(strategy.clone()).threshold(threshold);
                let (d, t) = make_dpdec(&g, &g.vertex_set(), &cfg).unwrap();
                ensure(d.width() <= t.recursion_depth * t.max_separator_size + threshold, || {
                    format!("seed {seed}: dpd width {} with telemetry {t:?}", d.width())
                })?;
                runs += 1;
            }
            let (d, t) = make_arbdec(&g, &g.vertex_set(), &VertexSet::new(), &strategy).unwrap();
            ensure(d.width() < t.max_node_load.max(1), || {
                format!("seed {seed}: arboreal width {} with telemetry {t:?}", d.width())
            })?;
            ensure(t.max_guard_size <= 8 * t.max_separator_size, || {
                format!("seed {seed}: guard sizes exceed 8 × separator size: {t:?}")
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs on {graphs} digraphs"))
}

/// Smallest width over every assignment of vertices to intervals of
/// `0..2n`, the most positions a path decomposition ever needs.
fn brute_force_dpw(g: &Digraph) -> usize {
    let n = g.vertex_count();
    let slots = 2 * n;
    let intervals: Vec<(usize, usize)> = (0..slots).flat_map(|a| (a..slots).map(move |b| (a, b))).collect();
    let arcs: Vec<(usize, usize)> = g.arcs().collect();
    (1..=n)
        .find(|&width| {
            let mut chosen = vec![(0, 0); n];
            let mut load = vec![0; slots];
            assign(0, width, &intervals, &arcs, &mut chosen, &mut load)
        })
        .unwrap_or(0)
}

fn assign(
    v: usize,
    width: usize,
    intervals: &[(usize, usize)],
    arcs: &[(usize, usize)],
    chosen: &mut Vec<(usize, usize)>,
    load: &mut Vec<usize>,
) -> bool {
    if v == chosen.len() {
        return arcs.iter().all(|&(a, b)| chosen[a].0 <= chosen[b].1);
    }
    for &(first, last) in intervals {
        if (first..=last).any(|i| load[i] == width) {
            continue;
        }
        chosen[v] = (first, last);
        (first..=last).for_each(|i| load[i] += 1);
        let ok = assign(v + 1, width, intervals, arcs, chosen, load);
        (first..=last).for_each(|i| load[i] -= 1);
        if ok {
            return true;
        }
    }
    false
}

/// The two Kelly-width oracles agree, and the pathwidth certificate is
/// valid and minimal.
fn oracle_consistency() -> Outcome {
    let graphs = 220;
    for seed in 0..graphs {
        let g = random_digraph(6000 + seed, 1, 5);
        let game = kellywidth_by_game(&g, 8).unwrap();
        let (elim, _) = kellywidth_by_elimination(&g, 9).unwrap();
        ensure(game == elim, || format!("seed {seed}: game {game}, elimination {elim}"))?;
    }
    let small = 80;
    for seed in 0..small {
        let g = random_digraph(7000 + seed, 1, 4);
        let w = dpw_by_ordering(&g, 12).unwrap();
        ensure(validate_dpd(&g, &w.decomposition).unwrap().passed(), || {
            format!("seed {seed}: invalid certificate")
        })?;
        let brute = brute_force_dpw(&g);
        ensure(brute == w.width, || format!("seed {seed}: oracle {}, exhaustive {brute}", w.width))?;
    }
    Ok(format!("{graphs} digraphs (n ≤ 5) agree; {small} certificates (n ≤ 4) valid and minimal"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 validator soundness sweep", validator_sweep),
        ("2 path/Kelly conversion exactness", conversion_exactness),
        ("3 biorientation width equalities", biorientation_equalities),
        ("4 separator number inequalities", separator_number_bounds),
        ("5 separators from arboreal decompositions", arboreal_separators),
        ("6 ternary tree gap family", ternary_tree_gap),
        ("7 width accounting bounds", width_accounting),
        ("8 oracle cross-consistency", oracle_consistency),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail}; {secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail}; {secs:.1}s)");
            }
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
