//! End-to-end equitable coloring: divisibility reduction, edge peeling down
//! to the empty graph, round-robin base coloring, and re-adding edges one at
//! a time while repairing conflicts through insertion and accessibility
//! improvement.

use crate::coloring::{greedy_balanced_extend, verify_equitable, verify_proper, Coloring};
use crate::digraph::ClassId;
use crate::error::{Error, Result};
use crate::graph::{check_edge_bound, degeneracy_order, EdgeBound, Graph};
use crate::moves::{claim_audit, FixState, Move, SearchBudget};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Requires r >= 13 and max degree <= r; edge peeling insists on a
    /// min-degree vertex of degree <= 7, which the edge bounds guarantee.
    OnePlanar,
    /// Requires r >= max degree + 1; no structural assumptions, improvement
    /// may escalate into the fallback search.
    HsFallback,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub r: usize,
    pub mode: Mode,
    pub budget: SearchBudget,
    pub seed: u64,
    /// Reject inputs violating the edge bound or 7-degeneracy up front
    /// (one-planar mode only).
    pub strict_validation: bool,
    /// Run the invariant audit and weight-identity sampling at every
    /// improvement entry.
    pub audit: bool,
}

impl SolverConfig {
    pub fn new(r: usize, mode: Mode) -> SolverConfig {
        SolverConfig {
            r,
            mode,
            budget: SearchBudget::default(),
            seed: 0,
            strict_validation: false,
            audit: false,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SolverStats {
    /// Conflict repairs (one per monochromatic edge re-add).
    pub fix_phases: u64,
    /// Successful accessibility improvements across all repairs.
    pub improvement_rounds: u64,
    /// Improvements that only the fallback search resolved.
    pub fallback_rounds: u64,
    pub pattern_fired: BTreeMap<String, u64>,
    /// Invariant-audit entries and any violations found (audit mode).
    pub claim_entries: u64,
    pub claim_violations: Vec<String>,
    /// Exact weight-identity samples checked and failures (audit mode).
    pub weight_samples: u64,
    pub weight_violations: u64,
    /// Vertices added or removed by the divisibility reduction.
    pub padded: usize,
    pub stripped: usize,
}

#[derive(Debug)]
pub struct Solution {
    pub coloring: Coloring,
    pub trace: Vec<Move>,
    pub stats: SolverStats,
}

/// One peel step: the edge xy was deleted while x had the minimum positive
/// degree.
pub type PeelStep = (u32, u32);

/// Peels edges one at a time, always from a vertex of minimum positive
/// degree. With `max_low_degree` = 7 this errors on graphs that are not
/// 7-degenerate edge by edge.
pub fn peel_schedule(g: &Graph, max_low_degree: usize) -> Result<Vec<PeelStep>> {
    let mut cur = g.clone();
    let mut steps = Vec::with_capacity(g.m());
    while cur.m() > 0 {
        let x = cur
            .vertices()
            .filter(|&v| cur.degree(v) > 0)
            .min_by_key(|&v| (cur.degree(v), v))
            .expect("positive edge count");
        if cur.degree(x) > max_low_degree {
            return Err(Error::invalid(format!(
                "minimum positive degree {} exceeds {max_low_degree}; input violates the degeneracy assumption",
                cur.degree(x)
            )));
        }
        let y = cur.neighbors(x)[0];
        steps.push((x, y));
        cur = cur.delete_edge(x, y)?;
    }
    Ok(steps)
}

enum Recipe {
    Identity,
    /// Clique vertices n..n+t were appended; drop them afterwards.
    Pad { original_n: usize },
    /// Leading degeneracy-order vertices were removed; refill them in
    /// reverse order with the class-size cap.
    Strip {
        kept: Vec<u32>,
        removed: Vec<u32>,
        cap: usize,
    },
}

/// Computes an equitable r-coloring of `g` under the given mode, along with
/// the full move trace and solver statistics.
pub fn equitable_color(g: &Graph, cfg: &SolverConfig) -> Result<Solution> {
    validate(g, cfg)?;
    let n = g.n();
    let r = cfg.r;
    let mut stats = SolverStats::default();

    let t = (r - n % r) % r;
    let (core, recipe) = if t == 0 {
        (g.clone(), Recipe::Identity)
    } else if cfg.mode == Mode::OnePlanar && t >= 7 {
        // strip r - t leading vertices of a degeneracy order; the core has
        // r(s-1) vertices and each stripped vertex sees at most 7 colored
        // neighbors plus fewer than r - 7 refilled ones when it returns
        let order = degeneracy_order(g).order;
        let removed: Vec<u32> = order[..r - t].to_vec();
        let mut removed_sorted = removed.clone();
        removed_sorted.sort_unstable();
        let kept: Vec<u32> = g
            .vertices()
            .filter(|v| removed_sorted.binary_search(v).is_err())
            .collect();
        stats.stripped = removed.len();
        let core = g.induced(&kept)?;
        let cap = core.n() / r + 1;
        (core, Recipe::Strip { kept, removed, cap })
    } else {
        // append a t-clique; its vertices have degree t - 1 <= 5 in
        // one-planar mode and <= r - 1 always
        stats.padded = t;
        (
            g.disjoint_union(&crate::gen::gen_complete(t)),
            Recipe::Pad { original_n: n },
        )
    };

    let (core_coloring, trace) = color_divisible(&core, cfg, &mut stats)?;

    let coloring = match recipe {
        Recipe::Identity => core_coloring,
        Recipe::Pad { original_n } => {
            let assignment = core_coloring.total_assignment()?;
            Coloring::from_assignment(&assignment[..original_n], r)?
        }
        Recipe::Strip { kept, removed, cap } => {
            let core_assignment = core_coloring.total_assignment()?;
            let mut c = Coloring::empty(n, r);
            for (idx, &orig) in kept.iter().enumerate() {
                c.assign(orig, core_assignment[idx]);
            }
            let refill_order: Vec<u32> = removed.into_iter().rev().collect();
            greedy_balanced_extend(g, c, &refill_order, cap)?
        }
    };

    debug_assert!(verify_proper(g, &coloring)?);
    debug_assert!(verify_equitable(&coloring));
    if !verify_proper(g, &coloring)? || !verify_equitable(&coloring) {
        return Err(Error::invalid("internal: produced coloring failed self-check"));
    }
    Ok(Solution {
        coloring,
        trace,
        stats,
    })
}

fn validate(g: &Graph, cfg: &SolverConfig) -> Result<()> {
    if cfg.r == 0 {
        return Err(Error::invalid("r must be positive"));
    }
    match cfg.mode {
        Mode::OnePlanar => {
            if cfg.r < 13 {
                return Err(Error::invalid(format!("one-planar mode requires r >= 13, got {}", cfg.r)));
            }
            if g.max_degree() > cfg.r {
                return Err(Error::invalid(format!(
                    "max degree {} exceeds r = {}",
                    g.max_degree(),
                    cfg.r
                )));
            }
            if cfg.strict_validation {
                if !check_edge_bound(g, EdgeBound::General) {
                    return Err(Error::invalid(format!(
                        "edge count {} violates the 4n-8 bound",
                        g.m()
                    )));
                }
                let deg = degeneracy_order(g).degeneracy;
                if deg > 7 {
                    return Err(Error::invalid(format!("degeneracy {deg} exceeds 7")));
                }
            }
        }
        Mode::HsFallback => {
            if cfg.r < g.max_degree() + 1 {
                return Err(Error::invalid(format!(
                    "fallback mode requires r >= max degree + 1 = {}, got {}",
                    g.max_degree() + 1,
                    cfg.r
                )));
            }
        }
    }
    Ok(())
}

/// Colors a graph whose order is divisible by r: peel all edges, color the
/// edgeless remainder round-robin, then re-add edges in reverse and repair
/// each monochromatic one.
fn color_divisible(
    g: &Graph,
    cfg: &SolverConfig,
    stats: &mut SolverStats,
) -> Result<(Coloring, Vec<Move>)> {
    let r = cfg.r;
    debug_assert_eq!(g.n() % r, 0);
    if g.n() == 0 {
        return Ok((Coloring::empty(0, r), Vec::new()));
    }
    let max_low = match cfg.mode {
        Mode::OnePlanar => 7,
        Mode::HsFallback => usize::MAX,
    };
    let schedule = peel_schedule(g, max_low)?;

    let assignment: Vec<usize> = (0..g.n()).map(|v| v % r).collect();
    let mut coloring = Coloring::from_assignment(&assignment, r)?;

    let mut cur = Graph::edgeless(g.n());
    let mut trace: Vec<Move> = Vec::new();
    for &(x, y) in schedule.iter().rev() {
        cur = cur.add_edge(x, y)?;
        if coloring.class_of(x) == coloring.class_of(y) {
            coloring = fix_conflict(&cur, coloring, x, cfg, stats, &mut trace)?;
        }
    }
    debug_assert_eq!(cur, *g);
    Ok((coloring, trace))
}

/// Repairs the coloring after re-adding an edge made `x` conflict: hold x
/// out, then alternate insertion attempts with accessibility improvements.
fn fix_conflict(
    g: &Graph,
    coloring: Coloring,
    x: u32,
    cfg: &SolverConfig,
    stats: &mut SolverStats,
    trace: &mut Vec<Move>,
) -> Result<Coloring> {
    stats.fix_phases += 1;
    let mut st = FixState::hold_out(g, coloring, x)?;
    let max_rounds = cfg.r + 2;
    for _ in 0..max_rounds {
        if st.insert_heldout(x)? {
            trace.append(&mut st.trace);
            return Ok(st.coloring);
        }
        if cfg.audit {
            audit_entry(&st, cfg, stats)?;
        }
        let tag = improve_with_escalation(&mut st, cfg)?;
        stats.improvement_rounds += 1;
        if tag == "fallback" {
            stats.fallback_rounds += 1;
        }
        *stats.pattern_fired.entry(tag.to_string()).or_insert(0) += 1;
    }
    Err(Error::ImprovementNotFound(format!(
        "vertex {x} still stuck after {max_rounds} improvement rounds"
    )))
}

fn improve_with_escalation(st: &mut FixState<'_>, cfg: &SolverConfig) -> Result<&'static str> {
    match cfg.mode {
        Mode::OnePlanar => st.improve_accessibility(&cfg.budget, true),
        Mode::HsFallback => {
            let mut budget = cfg.budget;
            loop {
                match st.improve_accessibility(&budget, true) {
                    Ok(tag) => return Ok(tag),
                    Err(Error::ImprovementNotFound(_)) if budget.max_fallback_depth < 64 => {
                        budget.max_fallback_depth *= 2;
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
}

/// Invariant audit at an improvement entry: the structural claims plus one
/// randomly sampled weight identity with a nonempty halved set.
fn audit_entry(st: &FixState<'_>, cfg: &SolverConfig, stats: &mut SolverStats) -> Result<()> {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    let d = st.digraph()?;
    stats.claim_entries += 1;
    let violations = claim_audit(st, &d)?;
    // claim_audit checks the empty-W identity once per accessible class
    stats.weight_samples += d.a() as u64;
    for v in &violations {
        if v.contains("weight sum") {
            stats.weight_violations += 1;
        }
    }
    stats.claim_violations.extend(violations);

    // one extra sample with a random halved subset of the non-accessible
    // classes, seeded for reproducibility
    let b_classes = d.nonaccessible_classes();
    if !b_classes.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ stats.claim_entries);
        let w: Vec<ClassId> = b_classes
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        for i in d.accessible_classes() {
            let wq = crate::digraph::weight(st.g, &st.coloring, &st.counts, &d, i, &w)?;
            let s = st.s() as i64;
            let expected = BigRational::from(BigInt::from(s))
                * (BigRational::from(BigInt::from((d.b() - w.len()) as i64))
                    + BigRational::new(BigInt::from(w.len() as i64), BigInt::from(2)));
            stats.weight_samples += 1;
            if wq.total() != expected {
                stats.weight_violations += 1;
                stats
                    .claim_violations
                    .push(format!("sampled weight sum over class {i} with |W|={} failed", w.len()));
            }
        }
    }
    Ok(())
}

/// Equitable coloring for any graph with r >= max degree + 1.
pub fn hs_color(g: &Graph, r: usize, budget: SearchBudget, seed: u64) -> Result<Solution> {
    let cfg = SolverConfig {
        r,
        mode: Mode::HsFallback,
        budget,
        seed,
        strict_validation: false,
        audit: false,
    };
    equitable_color(g, &cfg)
}

/// Serialized trace: enough to re-run the solve deterministically and
/// compare move lists.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TraceJson {
    pub schema: u32,
    pub r: usize,
    pub mode: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub moves: Vec<Move>,
}

impl TraceJson {
    pub fn new(g: &Graph, cfg: &SolverConfig, sol: &Solution) -> TraceJson {
        TraceJson {
            schema: 1,
            r: cfg.r,
            mode: match cfg.mode {
                Mode::OnePlanar => "one_planar".to_string(),
                Mode::HsFallback => "hs_fallback".to_string(),
            },
            seed: cfg.seed,
            n: g.n(),
            m: g.m(),
            moves: sol.trace.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn check(g: &Graph, sol: &Solution, r: usize) {
        assert!(verify_proper(g, &sol.coloring).unwrap());
        assert!(verify_equitable(&sol.coloring));
        assert_eq!(sol.coloring.r(), r);
    }

    #[test]
    fn grid_one_planar() {
        let g = gen::gen_grid_diagonals(5, 5).unwrap();
        let cfg = SolverConfig::new(13, Mode::OnePlanar);
        let sol = equitable_color(&g, &cfg).unwrap();
        check(&g, &sol, 13);
    }

    #[test]
    fn grid_divisible_case() {
        // 4 x 13 grid: n = 52 = 4 * 13, no reduction needed
        let g = gen::gen_grid_diagonals(4, 13).unwrap();
        let cfg = SolverConfig::new(13, Mode::OnePlanar);
        let sol = equitable_color(&g, &cfg).unwrap();
        check(&g, &sol, 13);
        assert_eq!((sol.stats.padded, sol.stats.stripped), (0, 0));
    }

    #[test]
    fn divisibility_pad_branch() {
        // n = 24, r = 13: t = 2 <= 6, pad with K_2
        let g = gen::gen_rhombicuboctahedron_diagonals();
        let cfg = SolverConfig::new(13, Mode::OnePlanar);
        let sol = equitable_color(&g, &cfg).unwrap();
        check(&g, &sol, 13);
        assert_eq!(sol.stats.padded, 2);
    }

    #[test]
    fn divisibility_strip_branch() {
        // 5 x 7 grid: n = 35, t = 13 - 35 % 13 = 4 -> pad; use n = 45:
        // 5 x 9: t = 13 - 45 % 13 = 13 - 6 = 7 -> strip 6 vertices
        let g = gen::gen_grid_diagonals(5, 9).unwrap();
        let cfg = SolverConfig::new(13, Mode::OnePlanar);
        let sol = equitable_color(&g, &cfg).unwrap();
        check(&g, &sol, 13);
        assert_eq!(sol.stats.stripped, 6);
    }

    #[test]
    fn q3_with_diagonals_hs() {
        // 6-regular on 8 vertices: r = 7 = max degree + 1
        let g = gen::gen_q3_diagonals();
        let sol = hs_color(&g, 7, SearchBudget::default(), 0).unwrap();
        check(&g, &sol, 7);
    }

    #[test]
    fn complete_graph_hs() {
        let g = gen::gen_complete(6);
        let sol = hs_color(&g, 6, SearchBudget::default(), 0).unwrap();
        check(&g, &sol, 6);
        assert_eq!(sol.coloring.class_sizes(), vec![1; 6]);
    }

    #[test]
    fn bipartite_hs() {
        let g = gen::gen_complete_bipartite(3, 3);
        let sol = hs_color(&g, 4, SearchBudget::default(), 0).unwrap();
        check(&g, &sol, 4);
    }

    #[test]
    fn mode_validation() {
        let g = gen::gen_grid_diagonals(4, 4).unwrap();
        assert!(equitable_color(&g, &SolverConfig::new(12, Mode::OnePlanar)).is_err());
        // max degree 8 > r = 8 - 1 + 1 requirement
        assert!(hs_color(&g, 8, SearchBudget::default(), 0).is_err());
        assert!(hs_color(&g, 9, SearchBudget::default(), 0).is_ok());
    }

    #[test]
    fn strict_validation_rejects_dense_input() {
        let g = gen::gen_complete(13);
        let mut cfg = SolverConfig::new(13, Mode::OnePlanar);
        cfg.strict_validation = true;
        assert!(equitable_color(&g, &cfg).is_err());
    }

    #[test]
    fn audit_runs_clean_on_grid() {
        let g = gen::gen_grid_diagonals(6, 6).unwrap();
        let mut cfg = SolverConfig::new(13, Mode::OnePlanar);
        cfg.audit = true;
        let sol = equitable_color(&g, &cfg).unwrap();
        check(&g, &sol, 13);
        assert!(sol.stats.claim_violations.is_empty(), "{:?}", sol.stats.claim_violations);
        assert_eq!(sol.stats.weight_violations, 0);
    }

    #[test]
    fn deterministic_runs() {
        let g = gen::gen_grid_diagonals(6, 7).unwrap();
        let cfg = SolverConfig::new(14, Mode::OnePlanar);
        let a = equitable_color(&g, &cfg).unwrap();
        let b = equitable_color(&g, &cfg).unwrap();
        assert_eq!(a.coloring, b.coloring);
        assert_eq!(a.trace, b.trace);
    }

    #[test]
    fn empty_and_tiny_graphs() {
        let g = Graph::edgeless(0);
        let sol = equitable_color(&g, &SolverConfig::new(13, Mode::OnePlanar)).unwrap();
        assert_eq!(sol.coloring.n(), 0);

        let g = Graph::edgeless(5);
        let sol = equitable_color(&g, &SolverConfig::new(13, Mode::OnePlanar)).unwrap();
        check(&g, &sol, 13);
    }

    #[test]
    fn peel_schedule_respects_degree_cap() {
        let g = gen::gen_complete(9);
        assert!(peel_schedule(&g, 7).is_err());
        assert!(peel_schedule(&g, 8).is_ok());
        let g = gen::gen_grid_diagonals(5, 5).unwrap();
        let steps = peel_schedule(&g, 7).unwrap();
        assert_eq!(steps.len(), g.m());
    }
}
