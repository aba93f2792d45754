//! End-to-end constructions of factors that meet prescribed cycles.
//!
//! | pipeline | input | stages | witness |
//! |---|---|---|---|
//! | [`third_pipeline`] | 2-connected, `3t`-regular, odd cycles, edge `e` | cubic expansion, forced matching | `t`-factor through `e`, hit-matching |
//! | [`half_pipeline`] | 2-connected, `2t`-regular, `t` even, odd cycles | orientation, split expansion | `t`-factor, hit-and-cohit |
//! | [`third_arbitrary_pipeline`] | 3-connected, `3t`-regular, cycles of length at least 3 | as third, 2-cut recursion | hit-matching |
//! | [`half_arbitrary_pipeline`] | 3-connected, `2t`-regular, `t` even, cycles of length at least 3 | as half, 2-cut recursion | hit-and-cohit |

use std::fmt;
use std::str::FromStr;

use crate::connectivity::{bridges, is_k_connected};
use crate::decompose::{cycle_decomposition, cyclic_orientation, two_factorization};
use crate::error::{Error, Result};
use crate::expansion::{cubic_expansion, project_factor, split_expansion, Family};
use crate::graph::{CycleSet, EdgeId, Factor, HitMode, Multigraph, Orientation};
use crate::solver::{
    bipartite_alternating_matching, constrained_perfect_matching, two_cut_recursion, OracleVerdict,
    SearchBudget, Status,
};
use crate::verify::{verify_factor, verify_intersections, verify_orientation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    Third,
    Half,
    ThirdArbitrary,
    HalfArbitrary,
}

impl Pipeline {
    pub fn as_str(self) -> &'static str {
        match self {
            Pipeline::Third => "third",
            Pipeline::Half => "half",
            Pipeline::ThirdArbitrary => "third-arb",
            Pipeline::HalfArbitrary => "half-arb",
        }
    }

    /// Intersection property the witness is guaranteed to have.
    pub fn mode(self) -> HitMode {
        match self {
            Pipeline::Third | Pipeline::ThirdArbitrary => HitMode::HitMatching,
            Pipeline::Half | Pipeline::HalfArbitrary => HitMode::HitAndCohit,
        }
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pipeline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Pipeline::Third,
            Pipeline::Half,
            Pipeline::ThirdArbitrary,
            Pipeline::HalfArbitrary,
        ]
        .into_iter()
        .find(|p| p.as_str() == s)
        .ok_or_else(|| Error::Precondition(format!("unknown pipeline {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PipelineOptions {
    /// Verify the hypotheses before running.
    pub checked: bool,
    pub budget: SearchBudget,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            checked: true,
            budget: SearchBudget::unlimited(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageSize {
    pub stage: &'static str,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub factor: Factor,
    pub mode: HitMode,
    pub orientation: Option<Orientation>,
    pub expansion_stats: Vec<StageSize>,
    pub solver_nodes: u64,
    pub cut_depth: usize,
    pub checks: Vec<Check>,
}

impl PipelineReport {
    /// One-line machine-readable summary.
    pub fn summary(&self) -> String {
        format!(
            "ok t={} hits={} nodes={}",
            self.factor.t, self.mode, self.solver_nodes
        )
    }

    fn record(&mut self, name: &'static str, passed: bool) -> Result<()> {
        self.checks.push(Check { name, passed });
        if passed {
            Ok(())
        } else {
            Err(Error::CheckFailed(format!("postcondition {name} failed")))
        }
    }
}

fn stage(stage: &'static str, g: &Multigraph) -> StageSize {
    StageSize {
        stage,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
    }
}

/// No cut vertex. Two vertices joined by parallel edges count as 2-connected.
pub fn is_two_connected(g: &Multigraph) -> bool {
    match g.vertex_count() {
        0 => false,
        1 => true,
        2 => g.is_connected() && bridges(g).is_empty(),
        _ => is_k_connected(g, 2),
    }
}

fn require_regular(g: &Multigraph, r: usize) -> Result<()> {
    if g.is_regular() != Some(r) {
        return Err(Error::NotRegular { expected: r });
    }
    Ok(())
}

fn require_even_t(t: usize) -> Result<()> {
    if t < 2 || t % 2 == 1 {
        return Err(Error::Precondition(format!(
            "t must be even and at least 2, got {t}"
        )));
    }
    Ok(())
}

fn require_odd_cycles(cycles: &CycleSet) -> Result<()> {
    match cycles.iter().position(|c| c.len() % 2 == 0) {
        Some(i) => Err(Error::cycle(
            i,
            format!("has even length {}", cycles.cycles()[i].len()),
        )),
        None => Ok(()),
    }
}

fn require_connectivity(g: &Multigraph, k: usize) -> Result<()> {
    let ok = if k == 2 {
        is_two_connected(g)
    } else {
        is_k_connected(g, k)
    };
    if !ok {
        return Err(Error::Precondition(format!("graph is not {k}-connected")));
    }
    Ok(())
}

/// Runs the matching search on an expanded cubic graph and unwraps the verdict.
fn solve_cubic(
    h: &Multigraph,
    cycles: &CycleSet,
    forced: Option<EdgeId>,
    through_cuts: bool,
    budget: SearchBudget,
) -> Result<(Vec<EdgeId>, OracleVerdict)> {
    let verdict = if through_cuts {
        two_cut_recursion(h, cycles, budget)?
    } else {
        constrained_perfect_matching(h, cycles, forced, budget)?
    };
    match &verdict.status {
        Status::Sat(f) => Ok((f.edges().to_vec(), verdict)),
        Status::Unsat => Err(Error::Unsat(format!(
            "no perfect matching of the expanded graph meets every cycle{}",
            forced
                .map(|e| format!(" through edge {e}"))
                .unwrap_or_default()
        ))),
        Status::BudgetExceeded => Err(Error::BudgetExceeded {
            nodes: verdict.nodes,
        }),
    }
}

fn third_common(
    g: &Multigraph,
    cycles: &CycleSet,
    forced: Option<EdgeId>,
    t: usize,
    arbitrary: bool,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    if let Some(e) = forced {
        g.check_edge(e)?;
    }
    let (map, carried) = cubic_expansion(g, cycles, t, Family::Third)?;
    let forced_new = forced.map(|e| map.edge_map[e]);
    let (matching, verdict) =
        solve_cubic(&map.expanded, &carried, forced_new, arbitrary, opts.budget)?;
    let factor = project_factor(&map, &matching, t)?;
    let mut report = PipelineReport {
        factor,
        mode: HitMode::HitMatching,
        orientation: None,
        expansion_stats: vec![stage("input", g), stage("cubic", &map.expanded)],
        solver_nodes: verdict.nodes,
        cut_depth: verdict.cut_depth,
        checks: Vec::new(),
    };
    report.record("t-factor", verify_factor(g, &report.factor, t))?;
    if let Some(e) = forced {
        report.record("forced-edge", report.factor.contains(e))?;
    }
    report.record(
        "hit-matching",
        verify_intersections(g, &report.factor, cycles, HitMode::HitMatching),
    )?;
    Ok(report)
}

/// `t`-factor of a 2-connected `3t`-regular graph through `e` whose
/// intersection with every odd cycle of `cycles` is a non-empty matching.
pub fn third_pipeline(
    g: &Multigraph,
    cycles: &CycleSet,
    e: EdgeId,
    t: usize,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    if opts.checked {
        require_regular(g, 3 * t)?;
        require_connectivity(g, 2)?;
        cycles.validate(g, true)?;
        require_odd_cycles(cycles)?;
    }
    third_common(g, cycles, Some(e), t, false, opts)
}

/// Same guarantee without a forced edge, for arbitrary cycles of length at
/// least 3 in a 3-connected graph.
pub fn third_arbitrary_pipeline(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    cycles.validate(g, false)?;
    if opts.checked {
        require_regular(g, 3 * t)?;
        require_connectivity(g, 3)?;
    }
    third_common(g, cycles, None, t, true, opts)
}

struct Oriented {
    orientation: Orientation,
    stats: Vec<StageSize>,
    verdict: OracleVerdict,
}

fn orient_common(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    arbitrary: bool,
    budget: SearchBudget,
) -> Result<Oriented> {
    let decomposition = cycle_decomposition(g, cycles)?;
    let mut orientation = cyclic_orientation(g, &decomposition)?;
    let (map, carried) = cubic_expansion(g, cycles, t, Family::Half)?;
    let (matching, verdict) = solve_cubic(&map.expanded, &carried, None, arbitrary, budget)?;
    let inverse = map.inverse_edge_map();
    for e in matching.into_iter().filter_map(|x| inverse[x]) {
        orientation.flip(g, e);
    }
    if !verify_orientation(g, &orientation, cycles) {
        return Err(Error::CheckFailed(
            "orientation has an odd indegree or an oriented cycle".into(),
        ));
    }
    Ok(Oriented {
        orientation,
        stats: vec![stage("input", g), stage("cubic", &map.expanded)],
        verdict,
    })
}

fn check_half(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    arbitrary: bool,
    opts: PipelineOptions,
) -> Result<()> {
    require_even_t(t)?;
    cycles.validate(g, !arbitrary)?;
    if opts.checked {
        require_regular(g, 2 * t)?;
        if arbitrary {
            require_connectivity(g, 3)?;
        } else {
            require_connectivity(g, 2)?;
            require_odd_cycles(cycles)?;
        }
    }
    Ok(())
}

/// Orientation with every indegree even and no cycle of `cycles` oriented.
pub fn orient_even_indegree(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    opts: PipelineOptions,
) -> Result<Orientation> {
    check_half(g, cycles, t, false, opts)?;
    Ok(orient_common(g, cycles, t, false, opts.budget)?.orientation)
}

/// Variant of [`orient_even_indegree`] for 3-connected graphs and cycles of
/// any length at least 3.
pub fn orient_even_indegree_arbitrary(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    opts: PipelineOptions,
) -> Result<Orientation> {
    check_half(g, cycles, t, true, opts)?;
    Ok(orient_common(g, cycles, t, true, opts.budget)?.orientation)
}

fn half_common(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    arbitrary: bool,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    check_half(g, cycles, t, arbitrary, opts)?;
    let oriented = orient_common(g, cycles, t, arbitrary, opts.budget)?;
    let (map, _) = split_expansion(g, &oriented.orientation, cycles)?;
    let matching = bipartite_alternating_matching(&map.expanded)?;
    let factor = project_factor(&map, &matching, t)?;
    let mut stats = oriented.stats;
    stats.push(stage("split", &map.expanded));
    let mut report = PipelineReport {
        factor,
        mode: HitMode::HitAndCohit,
        orientation: Some(oriented.orientation),
        expansion_stats: stats,
        solver_nodes: oriented.verdict.nodes,
        cut_depth: oriented.verdict.cut_depth,
        checks: vec![Check {
            name: "orientation",
            passed: true,
        }],
    };
    report.record("t-factor", verify_factor(g, &report.factor, t))?;
    report.record(
        "hit-and-cohit",
        verify_intersections(g, &report.factor, cycles, HitMode::HitAndCohit),
    )?;
    Ok(report)
}

/// `t`-factor of a 2-connected `2t`-regular graph (`t` even) that contains an
/// edge of every odd cycle of `cycles` and misses another.
pub fn half_pipeline(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    half_common(g, cycles, t, false, opts)
}

/// Hit-and-cohit `t`-factor of a 3-connected `2t`-regular graph for cycles of
/// any length at least 3.
pub fn half_arbitrary_pipeline(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    half_common(g, cycles, t, true, opts)
}

/// Grows a `t`-factor of an `r`-regular graph into an `l`-factor by adding
/// 2-factors of the complement.
pub fn extend_factor(g: &Multigraph, f: &Factor, l: usize) -> Result<Factor> {
    let t = f.t;
    let r = g
        .is_regular()
        .ok_or_else(|| Error::Precondition("graph is not regular".into()))?;
    if !verify_factor(g, f, t) {
        return Err(Error::Precondition(format!("input is not a {t}-factor")));
    }
    if l < t || l > r || (l - t) % 2 == 1 {
        return Err(Error::Precondition(format!(
            "l={l} must lie in {{{t}, {}, ..., {r}}}",
            t + 2
        )));
    }
    if l == t {
        return Ok(f.clone());
    }
    if (r - t) % 2 == 1 {
        return Err(Error::Precondition(format!(
            "complement of a {t}-factor in a {r}-regular graph has odd degree"
        )));
    }
    let (rest, back) = g.spanning_subgraph(|e| !f.contains(e));
    let factors = two_factorization(&rest)?;
    let added = factors[..(l - t) / 2]
        .iter()
        .flat_map(|h| h.edges().iter().map(|&e| back[e]));
    let out = Factor::new(l, f.edges().iter().copied().chain(added));
    if !verify_factor(g, &out, l) {
        return Err(Error::CheckFailed(format!(
            "extension is not an {l}-factor"
        )));
    }
    Ok(out)
}

/// Dispatches on `kind`. `forced` is only used by [`Pipeline::Third`], where it
/// defaults to edge 0.
pub fn run_pipeline(
    kind: Pipeline,
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    forced: Option<EdgeId>,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    match kind {
        Pipeline::Third => third_pipeline(g, cycles, forced.unwrap_or(0), t, opts),
        Pipeline::Half => half_pipeline(g, cycles, t, opts),
        Pipeline::ThirdArbitrary => third_arbitrary_pipeline(g, cycles, t, opts),
        Pipeline::HalfArbitrary => half_arbitrary_pipeline(g, cycles, t, opts),
    }
}
