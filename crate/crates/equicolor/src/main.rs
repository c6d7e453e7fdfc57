//! Thin command-line front end. Exit codes: 0 success, 1 verification
//! failure, 2 invalid input, 3 improvement search exhausted, 4 oracle
//! infeasible under --require-feasible.

use clap::{Parser, Subcommand, ValueEnum};
use equicolor::coloring::ColoringJson;
use equicolor::solver::{SolverStats, TraceJson};
use equicolor::{
    equitable_color, gen, io, oracle, verify_equitable, verify_proper, Error, Graph, Mode,
    SearchBudget, SolverConfig,
};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(name = "equicolor", about = "Equitable r-coloring of sparse graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    OnePlanar,
    HsFallback,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::OnePlanar => Mode::OnePlanar,
            CliMode::HsFallback => Mode::HsFallback,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute an equitable r-coloring of an edge-list graph.
    Color {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "one-planar")]
        mode: CliMode,
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        /// Coloring JSON output (stdout when omitted).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Also write the move trace JSON.
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
        /// RNG seed (falls back to EQUICOLOR_SEED, then 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Reject inputs violating the edge bound or 7-degeneracy.
        #[arg(long)]
        strict: bool,
        /// Run invariant audits at every improvement entry.
        #[arg(long)]
        audit: bool,
    },
    /// Check a coloring JSON against a graph: proper and equitable.
    Verify {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
    },
    /// Exact brute-force equitable k-colorability on small graphs.
    Oracle {
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        /// Exit 4 instead of reporting infeasibility.
        #[arg(long)]
        require_feasible: bool,
    },
    /// Build a generator instance from a JSON spec.
    Gen {
        /// e.g. {"family":"grid_diag","rows":5,"cols":5}
        #[arg(long)]
        spec: String,
        /// Edge-list output (stdout when omitted).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Re-run a recorded solve and compare move traces.
    Trace {
        #[command(subcommand)]
        cmd: TraceCommand,
    },
    /// Time the solver over a fixed instance suite.
    Bench {
        /// JSON output (stdout when omitted).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TraceCommand {
    Verify {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long, value_name = "FILE")]
        trace: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ImprovementNotFound(_) => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> equicolor::Result<i32> {
    match cli.command {
        Command::Color {
            r,
            mode,
            r#in,
            out,
            trace,
            seed,
            strict,
            audit,
        } => {
            let g = io::read_graph(&r#in)?;
            let cfg = SolverConfig {
                r,
                mode: mode.into(),
                budget: SearchBudget::default(),
                seed: seed.unwrap_or_else(env_seed),
                strict_validation: strict,
                audit,
            };
            let sol = equitable_color(&g, &cfg)?;
            let coloring_json = ColoringJson::from_coloring(&sol.coloring)?;
            emit(out.as_deref(), &coloring_json)?;
            if let Some(path) = trace {
                io::write_json_pretty(&path, &TraceJson::new(&g, &cfg, &sol))?;
            }
            eprintln!(
                "colored n={} m={} r={r}: {} fix phases, {} improvement rounds",
                g.n(),
                g.m(),
                sol.stats.fix_phases,
                sol.stats.improvement_rounds
            );
            Ok(0)
        }
        Command::Verify { r#in, coloring } => {
            let g = io::read_graph(&r#in)?;
            let c = io::read_coloring_json(&coloring)?.into_coloring()?;
            if c.n() != g.n() {
                return Err(Error::invalid(format!(
                    "coloring covers {} vertices, graph has {}",
                    c.n(),
                    g.n()
                )));
            }
            let proper = verify_proper(&g, &c)?;
            let equitable = verify_equitable(&c);
            if proper && equitable {
                println!("ok: proper and equitable with r={}", c.r());
                Ok(0)
            } else {
                println!(
                    "failed: proper={proper} equitable={equitable} sizes={:?}",
                    c.class_sizes()
                );
                Ok(1)
            }
        }
        Command::Oracle {
            k,
            r#in,
            require_feasible,
        } => {
            let g = io::read_graph(&r#in)?;
            match oracle::brute_force_equitable(&g, k)? {
                Some(c) => {
                    emit(None, &ColoringJson::from_coloring(&c)?)?;
                    Ok(0)
                }
                None => {
                    println!("infeasible: no equitable {k}-coloring");
                    Ok(if require_feasible { 4 } else { 0 })
                }
            }
        }
        Command::Gen { spec, out } => {
            let spec: gen::GenSpec =
                serde_json::from_str(&spec).map_err(|e| Error::invalid(format!("bad spec: {e}")))?;
            let g = spec.build()?;
            match out {
                Some(path) => io::write_graph(&path, &g)?,
                None => print!("{}", io::edge_list_string(&g)),
            }
            Ok(0)
        }
        Command::Trace {
            cmd: TraceCommand::Verify { r#in, trace },
        } => {
            let g = io::read_graph(&r#in)?;
            let recorded: TraceJson = serde_json::from_str(&std::fs::read_to_string(&trace)?)?;
            if recorded.n != g.n() || recorded.m != g.m() {
                return Err(Error::invalid("trace was recorded on a different graph"));
            }
            let cfg = SolverConfig {
                r: recorded.r,
                mode: match recorded.mode.as_str() {
                    "one_planar" => Mode::OnePlanar,
                    "hs_fallback" => Mode::HsFallback,
                    other => return Err(Error::invalid(format!("unknown mode {other}"))),
                },
                budget: SearchBudget::default(),
                seed: recorded.seed,
                strict_validation: false,
                audit: false,
            };
            let sol = equitable_color(&g, &cfg)?;
            if sol.trace == recorded.moves {
                println!("ok: {} moves replayed identically", recorded.moves.len());
                Ok(0)
            } else {
                println!(
                    "mismatch: recorded {} moves, re-run produced {}",
                    recorded.moves.len(),
                    sol.trace.len()
                );
                Ok(1)
            }
        }
        Command::Bench { out } => bench(out.as_deref()),
    }
}

#[derive(Serialize)]
struct BenchRow {
    name: String,
    n: usize,
    m: usize,
    r: usize,
    millis: u128,
    #[serde(flatten)]
    stats: SolverStats,
}

#[derive(Serialize)]
struct BenchReport {
    schema: u32,
    rows: Vec<BenchRow>,
}

fn bench(out: Option<&Path>) -> equicolor::Result<i32> {
    let suite: Vec<(String, Graph, usize)> = vec![
        ("grid_diag_8x8".into(), gen::gen_grid_diagonals(8, 8)?, 13),
        ("grid_diag_10x10".into(), gen::gen_grid_diagonals(10, 10)?, 14),
        ("grid_diag_16x16".into(), gen::gen_grid_diagonals(16, 16)?, 13),
        ("grid_diag_20x25".into(), gen::gen_grid_diagonals(20, 25)?, 16),
        ("rhombi_diag".into(), gen::gen_rhombicuboctahedron_diagonals(), 13),
    ];
    let mut rows = Vec::new();
    for (name, g, r) in suite {
        let cfg = SolverConfig::new(r, Mode::OnePlanar);
        let start = Instant::now();
        let sol = equitable_color(&g, &cfg)?;
        let millis = start.elapsed().as_millis();
        eprintln!(
            "{name:<18} n={:<4} m={:<5} r={r:<3} {millis:>6} ms  fixes={}",
            g.n(),
            g.m(),
            sol.stats.fix_phases
        );
        rows.push(BenchRow {
            name,
            n: g.n(),
            m: g.m(),
            r,
            millis,
            stats: sol.stats,
        });
    }
    emit(out, &BenchReport { schema: 1, rows })?;
    Ok(0)
}

fn env_seed() -> u64 {
    std::env::var("EQUICOLOR_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn emit<T: Serialize>(path: Option<&Path>, value: &T) -> equicolor::Result<()> {
    match path {
        Some(p) => io::write_json_pretty(p, value),
        None => {
            println!("{}", serde_json::to_string_pretty(value)?);
            Ok(())
        }
    }
}
