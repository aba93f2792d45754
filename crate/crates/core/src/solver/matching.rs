//! Perfect matchings of cubic graphs that meet every prescribed cycle.

use super::{Clock, OracleVerdict, SearchBudget, Status};
use crate::error::{Error, Result};
use crate::graph::{Cycle, CycleSet, EdgeId, Factor, HitMode, Multigraph};
use crate::verify::{verify_factor, verify_intersections};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mark {
    Open,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    edge: Vec<Mark>,
    matched: Vec<bool>,
}

pub(crate) enum Outcome {
    Found(Vec<EdgeId>),
    Exhausted,
    Budget,
}

struct Search<'a> {
    g: &'a Multigraph,
    cycles: &'a [Cycle],
    clock: &'a mut Clock,
}

impl Search<'_> {
    fn include(&self, s: &mut State, e: EdgeId) -> bool {
        match s.edge[e] {
            Mark::In => return true,
            Mark::Out => return false,
            Mark::Open => {}
        }
        let (u, v) = self.g.endpoints(e);
        if s.matched[u] || s.matched[v] {
            return false;
        }
        s.edge[e] = Mark::In;
        for w in [u, v] {
            s.matched[w] = true;
            for &f in self.g.incident(w) {
                if s.edge[f] == Mark::Open {
                    s.edge[f] = Mark::Out;
                }
            }
        }
        true
    }

    fn exclude(s: &mut State, e: EdgeId) -> bool {
        match s.edge[e] {
            Mark::In => false,
            _ => {
                s.edge[e] = Mark::Out;
                true
            }
        }
    }

    fn open_at<'s>(&'s self, s: &'s State, v: usize) -> impl Iterator<Item = EdgeId> + 's {
        self.g
            .incident(v)
            .iter()
            .copied()
            .filter(move |&e| s.edge[e] == Mark::Open)
    }

    fn is_hit(s: &State, c: &[EdgeId]) -> bool {
        c.iter().any(|&e| s.edge[e] == Mark::In)
    }

    /// Unit propagation on vertices and unhit cycles.
    fn propagate(&self, s: &mut State) -> bool {
        loop {
            let mut changed = false;
            for v in self.g.vertices() {
                if s.matched[v] {
                    continue;
                }
                let open: Vec<EdgeId> = self.open_at(s, v).take(2).collect();
                match open[..] {
                    [] => return false,
                    [e] => {
                        if !self.include(s, e) {
                            return false;
                        }
                        changed = true;
                    }
                    _ => {}
                }
            }
            for c in self.cycles {
                if Self::is_hit(s, c) {
                    continue;
                }
                let open: Vec<EdgeId> = c
                    .iter()
                    .copied()
                    .filter(|&e| s.edge[e] == Mark::Open)
                    .take(2)
                    .collect();
                match open[..] {
                    [] => return false,
                    [e] => {
                        if !self.include(s, e) {
                            return false;
                        }
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Open edges to branch on: an unhit cycle with the fewest of them, else
    /// the unmatched vertex with the fewest (lowest id on ties).
    fn candidates(&self, s: &State) -> Option<Vec<EdgeId>> {
        let from_cycle = self
            .cycles
            .iter()
            .filter(|c| !Self::is_hit(s, c))
            .map(|c| {
                c.iter()
                    .copied()
                    .filter(|&e| s.edge[e] == Mark::Open)
                    .collect::<Vec<_>>()
            })
            .min_by_key(Vec::len);
        if let Some(mut c) = from_cycle {
            c.sort_unstable();
            return Some(c);
        }
        self.g
            .vertices()
            .filter(|&v| !s.matched[v])
            .map(|v| self.open_at(s, v).collect::<Vec<_>>())
            .min_by_key(Vec::len)
    }

    fn dfs(&mut self, mut s: State) -> Outcome {
        if !self.clock.tick() {
            return Outcome::Budget;
        }
        if !self.propagate(&mut s) {
            return Outcome::Exhausted;
        }
        let Some(cands) = self.candidates(&s) else {
            return Outcome::Found(
                self.g
                    .edge_ids()
                    .filter(|&e| s.edge[e] == Mark::In)
                    .collect(),
            );
        };
        for (i, &e) in cands.iter().enumerate() {
            let mut child = s.clone();
            if !cands[..i].iter().all(|&f| Self::exclude(&mut child, f))
                || !self.include(&mut child, e)
            {
                continue;
            }
            match self.dfs(child) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }
        Outcome::Exhausted
    }
}

/// Exact search for a perfect matching containing `forced`, avoiding
/// `forbidden` and meeting every cycle in `cycles`.
pub(crate) fn find_matching(
    g: &Multigraph,
    cycles: &[Cycle],
    forced: &[EdgeId],
    forbidden: &[EdgeId],
    clock: &mut Clock,
) -> Outcome {
    let mut search = Search { g, cycles, clock };
    let mut s = State {
        edge: vec![Mark::Open; g.edge_count()],
        matched: vec![false; g.vertex_count()],
    };
    let ok = forbidden.iter().all(|&e| Search::exclude(&mut s, e))
        && forced.iter().all(|&e| search.include(&mut s, e));
    if !ok {
        search.clock.tick();
        return Outcome::Exhausted;
    }
    search.dfs(s)
}

pub(crate) fn require_cubic(g: &Multigraph) -> Result<()> {
    if g.is_regular() != Some(3) {
        return Err(Error::NotRegular { expected: 3 });
    }
    Ok(())
}

/// Turns a search outcome into a verdict, re-checking any witness.
pub(crate) fn matching_verdict(
    g: &Multigraph,
    cycles: &CycleSet,
    forced: Option<EdgeId>,
    outcome: Outcome,
    nodes: u64,
    cut_depth: usize,
) -> Result<OracleVerdict> {
    let status = match outcome {
        Outcome::Found(edges) => {
            let f = Factor::new(1, edges);
            if !verify_factor(g, &f, 1) {
                return Err(Error::CheckFailed(
                    "matching search returned a non-perfect matching".into(),
                ));
            }
            if !verify_intersections(g, &f, cycles, HitMode::Hit) {
                return Err(Error::CheckFailed(
                    "matching search missed a prescribed cycle".into(),
                ));
            }
            if forced.is_some_and(|e| !f.contains(e)) {
                return Err(Error::CheckFailed(
                    "matching search dropped the forced edge".into(),
                ));
            }
            Status::Sat(f)
        }
        Outcome::Exhausted => Status::Unsat,
        Outcome::Budget => Status::BudgetExceeded,
    };
    Ok(OracleVerdict {
        status,
        nodes,
        cut_depth,
    })
}

/// Perfect matching of a cubic graph that contains `forced` (if given) and
/// meets every cycle of `cycles`. The search is exhaustive, so `Unsat` means
/// no such matching exists.
pub fn constrained_perfect_matching(
    g: &Multigraph,
    cycles: &CycleSet,
    forced: Option<EdgeId>,
    budget: SearchBudget,
) -> Result<OracleVerdict> {
    budget.validate()?;
    require_cubic(g)?;
    cycles.validate(g, true)?;
    if let Some(e) = forced {
        g.check_edge(e)?;
    }
    let mut clock = Clock::new(budget);
    let outcome = find_matching(g, cycles.cycles(), forced.as_slice(), &[], &mut clock);
    matching_verdict(g, cycles, forced, outcome, clock.nodes(), 0)
}
