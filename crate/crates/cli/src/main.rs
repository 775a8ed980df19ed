//! `dwl`: compute, validate, convert and compare directed width
//! decompositions.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dwl_core::approx_dpw::{approx_dagwidth, approx_kellywidth, make_dpdec, DpwRunConfig, RunTelemetry};
use dwl_core::approx_dtw::make_arbdec;
use dwl_core::decomposition::{dpd_to_kelly_path, kelly_path_to_dpd, normalize_dpd};
use dwl_core::io::{parse_decomposition, parse_digraph, serialize_decomposition, serialize_digraph};
use dwl_core::oracles::{
    biorient_digraph, dagwidth_by_game, dpw_by_ordering, dtw_exact_small, gen_family, kellywidth_by_elimination,
    ExactCaps, Family,
};
use dwl_core::{
    Alpha, Decomposition, DecompositionKind, Digraph, Error, SeparatorStrategy, StrategyMode, VertexSet,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "dwl", version, about = "Directed width decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    /// Directed pathwidth
    Dpw,
    /// DAG-width
    Dagw,
    /// Kelly-width
    Kw,
    /// Directed treewidth
    Dtw,
}

impl Param {
    const ALL: [Param; 4] = [Param::Dpw, Param::Dagw, Param::Kw, Param::Dtw];

    fn name(self) -> &'static str {
        match self {
            Param::Dpw => "dpw",
            Param::Dagw => "dagw",
            Param::Kw => "kw",
            Param::Dtw => "dtw",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Approx,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Exact,
    Heuristic,
    Trivial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Dpd,
    Dag,
    Kelly,
    Arboreal,
}

impl From<Kind> for DecompositionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Dpd => DecompositionKind::Dpd,
            Kind::Dag => DecompositionKind::Dag,
            Kind::Kelly => DecompositionKind::Kelly,
            Kind::Arboreal => DecompositionKind::Arboreal,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a decomposition and print its width and run statistics.
    Compute {
        #[arg(long, value_enum)]
        param: Param,
        #[arg(long, value_enum, default_value = "approx")]
        algo: Algo,
        #[arg(long, value_enum, default_value = "exact")]
        strategy: Strategy,
        /// Balance factor for separators, as p/q or a decimal.
        #[arg(long)]
        alpha: Option<Alpha>,
        /// Parts this small are not split further.
        #[arg(long)]
        threshold: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        input: PathBuf,
        /// Where to write the decomposition.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a decomposition against a graph; exits 1 if any condition fails.
    Validate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        decomposition: PathBuf,
    },
    /// Exact width of a small graph.
    Oracle {
        #[arg(long, value_enum)]
        param: Param,
        #[arg(short, long)]
        input: PathBuf,
        /// Where to write the optimal decomposition, when there is one.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find a balanced directed vertex separator.
    Sep {
        #[arg(long, default_value = "7/8")]
        alpha: Alpha,
        /// Whitespace-separated balance set; all vertices if omitted.
        #[arg(long)]
        subset: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "exact")]
        strategy: Strategy,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Convert between directed path and Kelly path decompositions.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        decomposition: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a graph from a named family.
    Gen {
        /// biorient-clique, biorient-path, biorient-ternary-tree,
        /// directed-cycle, random-dag, random-digraph or biorient.
        #[arg(long)]
        family: String,
        #[arg(long, num_args = 1..)]
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Undirected input for `biorient`, in graph format.
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare approximate and exact widths for every parameter.
    Compare {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Capability(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Capability(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<Digraph, Failure> {
    parse_digraph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_decomposition(path: &Path) -> Result<Decomposition, Failure> {
    parse_decomposition(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn strategy(mode: Strategy, alpha: Option<Alpha>, seed: u64, caps: &ExactCaps) -> SeparatorStrategy {
    let mode = match mode {
        Strategy::Exact => StrategyMode::Exact,
        Strategy::Heuristic => StrategyMode::Heuristic,
        Strategy::Trivial => StrategyMode::Trivial,
    };
    SeparatorStrategy {
        mode,
        alpha: alpha.unwrap_or_default(),
        size_cap: Some(caps.sep),
        rng_seed: seed,
        ..SeparatorStrategy::default()
    }
}

fn approx(g: &Digraph, param: Param, cfg: &DpwRunConfig) -> Result<(Decomposition, RunTelemetry), Failure> {
    Ok(match param {
        Param::Dpw => {
            let (d, t) = make_dpdec(g, &g.vertex_set(), cfg)?;
            (Decomposition::Path(d), t)
        }
        Param::Dagw => {
            let (d, t) = approx_dagwidth(g, cfg)?;
            (Decomposition::Dag(d), t)
        }
        Param::Kw => {
            let (d, t) = approx_kellywidth(g, cfg)?;
            (Decomposition::Kelly(d), t)
        }
        Param::Dtw => {
            let (d, t) = make_arbdec(g, &g.vertex_set(), &VertexSet::new(), &cfg.strategy)?;
            (Decomposition::Arboreal(d), t)
        }
    })
}

/// Exact width, with an optimal decomposition when the oracle yields one.
fn oracle(g: &Digraph, param: Param, caps: &ExactCaps) -> Result<(usize, Option<Decomposition>), Failure> {
    Ok(match param {
        Param::Dpw => {
            let w = dpw_by_ordering(g, caps.orderings)?;
            (w.width, Some(Decomposition::Path(w.decomposition)))
        }
        Param::Dagw => (dagwidth_by_game(g, caps.games)?, None),
        Param::Kw => (kellywidth_by_elimination(g, caps.elimination)?.0, None),
        Param::Dtw => {
            let w = dtw_exact_small(g, caps.dtw)?;
            (w.width, Some(Decomposition::Arboreal(w.decomposition)))
        }
    })
}

fn caps() -> Result<ExactCaps, Failure> {
    Ok(ExactCaps::from_env()?)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute {
            param,
            algo,
            strategy: mode,
            alpha,
            threshold,
            seed,
            input,
            output,
        } => {
            let caps = caps()?;
            let g = read_graph(&input)?;
            let (width, decomposition, telemetry) = match algo {
                Algo::Approx => {
                    let mut cfg = DpwRunConfig::with_strategy(strategy(mode, alpha, seed, &caps));
                    cfg.termination_threshold = threshold;
                    if let Some(a) = alpha {
                        cfg.alpha_prime = a;
                    }
                    let (d, t) = approx(&g, param, &cfg)?;
                    (d.width(), Some(d), Some(t))
                }
                Algo::Oracle => {
                    let (w, d) = oracle(&g, param, &caps)?;
                    (w, d, None)
                }
            };
            if let (Some(path), Some(d)) = (&output, &decomposition) {
                write_or_print(Some(path), &serialize_decomposition(d))?;
            }
            let report = json!({
                "param": param.name(),
                "algo": match algo { Algo::Approx => "approx", Algo::Oracle => "oracle" },
                "width": width,
                "telemetry": telemetry,
            });
            println!("{report}");
            Ok(())
        }
        Command::Validate {
            kind,
            graph,
            decomposition,
        } => {
            let g = read_graph(&graph)?;
            let d = read_decomposition(&decomposition)?;
            let kind = DecompositionKind::from(kind);
            if d.kind() != kind {
                return Err(Failure::Usage(format!("expected a {kind} decomposition, found {}", d.kind())));
            }
            let report = d.validate(&g)?;
            print!("{report}");
            if report.passed() {
                println!("valid, width {}", d.width());
                Ok(())
            } else {
                Err(Failure::Invalid("decomposition is not valid".into()))
            }
        }
        Command::Oracle { param, input, output } => {
            let caps = caps()?;
            let g = read_graph(&input)?;
            let (width, d) = oracle(&g, param, &caps)?;
            println!("{width}");
            if let (Some(path), Some(d)) = (&output, &d) {
                write_or_print(Some(path), &serialize_decomposition(d))?;
                println!("certificate: {}", path.display());
            }
            Ok(())
        }
        Command::Sep {
            alpha,
            subset,
            strategy: mode,
            seed,
            input,
        } => {
            let caps = caps()?;
            let g = read_graph(&input)?;
            let u = match subset {
                Some(path) => parse_subset(&read(&path)?, g.vertex_count())?,
                None => g.vertex_set(),
            };
            let r = strategy(mode, Some(alpha), seed, &caps).find(&g, &u)?;
            println!("{}", serde_json::to_string(&r).expect("plain data"));
            Ok(())
        }
        Command::Convert {
            from,
            to,
            graph,
            decomposition,
            output,
        } => {
            let g = read_graph(&graph)?;
            let d = read_decomposition(&decomposition)?;
            let converted = match (from, to, d) {
                (Kind::Dpd, Kind::Kelly, Decomposition::Path(p)) => {
                    Decomposition::Kelly(dpd_to_kelly_path(&g, &normalize_dpd(&g, &p)?)?)
                }
                (Kind::Kelly, Kind::Dpd, Decomposition::Kelly(k)) => Decomposition::Path(kelly_path_to_dpd(&g, &k)?),
                (Kind::Dpd, Kind::Kelly, _) | (Kind::Kelly, Kind::Dpd, _) => {
                    return Err(Failure::Usage(format!("input is not a {} decomposition", DecompositionKind::from(from))))
                }
                _ => return Err(Failure::Usage("only dpd → kelly and kelly → dpd are supported".into())),
            };
            write_or_print(output.as_deref(), &serialize_decomposition(&converted))
        }
        Command::Gen {
            family,
            params,
            seed,
            input,
            output,
        } => {
            let g = if family == "biorient" {
                let path = input.ok_or_else(|| Failure::Usage("biorient needs an input graph (-i)".into()))?;
                biorient_digraph(&read_graph(&path)?)
            } else {
                let params: Vec<&str> = params.iter().map(String::as_str).collect();
                gen_family(&Family::parse(&family, &params)?, seed)?
            };
            write_or_print(output.as_deref(), &serialize_digraph(&g))
        }
        Command::Compare { input, seed } => {
            let caps = caps()?;
            let g = read_graph(&input)?;
            let mode = if g.vertex_count() <= caps.sep {
                Strategy::Exact
            } else {
                Strategy::Heuristic
            };
            let cfg = DpwRunConfig::with_strategy(strategy(mode, None, seed, &caps));
            println!("{:<6} {:>7} {:>7} {:>7}", "param", "approx", "exact", "ratio");
            for param in Param::ALL {
                let (d, _) = approx(&g, param, &cfg)?;
                let approx_width = d.width();
                let (exact, ratio) = match oracle(&g, param, &caps) {
                    Ok((w, _)) => {
                        let ratio = if w == 0 {
                            if approx_width == 0 { "1.00".to_string() } else { "inf".to_string() }
                        } else {
                            format!("{:.2}", approx_width as f64 / w as f64)
                        };
                        (w.to_string(), ratio)
                    }
                    Err(Failure::Capability(_)) => ("-".to_string(), "-".to_string()),
                    Err(other) => return Err(other),
                };
                println!("{:<6} {:>7} {:>7} {:>7}", param.name(), approx_width, exact, ratio);
            }
            Ok(())
        }
    }
}

fn parse_subset(text: &str, n: usize) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::new();
    for token in text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
    {
        let v: usize = token
            .parse()
            .map_err(|_| Failure::Usage(format!("subset entry `{token}` is not a vertex")))?;
        if v >= n {
            return Err(Failure::Usage(format!("subset vertex {v} is outside 0..{n}")));
        }
        set.insert(v);
    }
    Ok(set)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("dwl: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("dwl: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capability(msg)) => {
            eprintln!("dwl: {msg}");
            ExitCode::from(3)
        }
    }
}
