//! Brute-force `t`-factor search used as ground truth.
//!
//! Edges are decided in increasing id order, inclusion first. After every
//! decision, vertex degree bounds and per-cycle requirements force whatever
//! they can, and the search backs up as soon as a bound is violated.

use super::{Clock, OracleVerdict, SearchBudget, Status};
use crate::error::{Error, Result};
use crate::graph::{Cycle, CycleSet, EdgeId, Factor, HitMode, Multigraph, Vertex};
use crate::verify::{verify_factor, verify_intersections};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mark {
    Open,
    In,
    Out,
}

enum Outcome {
    Found(Vec<EdgeId>),
    Exhausted,
    Budget,
}

struct Oracle<'a> {
    g: &'a Multigraph,
    t: usize,
    mode: HitMode,
    cycles: &'a [Cycle],
    owner: Vec<Option<usize>>,
    mark: Vec<Mark>,
    deg_in: Vec<usize>,
    open_at: Vec<usize>,
    cycle_in: Vec<usize>,
    cycle_open: Vec<usize>,
    trail: Vec<EdgeId>,
    clock: Clock,
}

impl Oracle<'_> {
    fn vertex_ok(&self, v: Vertex) -> bool {
        self.deg_in[v] <= self.t && self.deg_in[v] + self.open_at[v] >= self.t
    }

    fn cycle_ok(&self, c: usize) -> bool {
        let (inside, open) = (self.cycle_in[c], self.cycle_open[c]);
        match self.mode {
            HitMode::None => true,
            HitMode::Hit | HitMode::HitMatching => inside + open > 0,
            HitMode::HitAndCohit => inside + open > 0 && inside < self.cycles[c].len(),
        }
    }

    /// Records a decision; false if it breaks a bound right away. The
    /// decision stays on the trail either way.
    fn assign(&mut self, e: EdgeId, m: Mark) -> bool {
        if self.mark[e] != Mark::Open {
            return self.mark[e] == m;
        }
        self.mark[e] = m;
        self.trail.push(e);
        let (u, v) = self.g.endpoints(e);
        for w in [u, v] {
            self.open_at[w] -= 1;
            if m == Mark::In {
                self.deg_in[w] += 1;
            }
        }
        let mut ok = self.vertex_ok(u) && self.vertex_ok(v);
        if let Some(c) = self.owner[e] {
            self.cycle_open[c] -= 1;
            if m == Mark::In {
                self.cycle_in[c] += 1;
                if self.mode == HitMode::HitMatching {
                    ok &= self.cycles[c]
                        .iter()
                        .all(|&f| f == e || self.mark[f] != Mark::In || !self.g.adjacent(e, f));
                }
            }
            ok &= self.cycle_ok(c);
        }
        ok
    }

    fn undo(&mut self, to: usize) {
        while self.trail.len() > to {
            let e = self.trail.pop().expect("trail longer than target");
            let m = std::mem::replace(&mut self.mark[e], Mark::Open);
            let (u, v) = self.g.endpoints(e);
            for w in [u, v] {
                self.open_at[w] += 1;
                if m == Mark::In {
                    self.deg_in[w] -= 1;
                }
            }
            if let Some(c) = self.owner[e] {
                self.cycle_open[c] += 1;
                if m == Mark::In {
                    self.cycle_in[c] -= 1;
                }
            }
        }
    }

    /// Forced value of the open edges at `v`, if any.
    fn forced_at(&self, v: Vertex) -> Option<Mark> {
        if self.open_at[v] == 0 {
            None
        } else if self.deg_in[v] == self.t {
            Some(Mark::Out)
        } else if self.deg_in[v] + self.open_at[v] == self.t {
            Some(Mark::In)
        } else {
            None
        }
    }

    fn force_vertex(&mut self, v: Vertex) -> bool {
        let Some(m) = self.forced_at(v) else {
            return true;
        };
        let g = self.g;
        g.incident(v)
            .iter()
            .all(|&f| self.mark[f] != Mark::Open || self.assign(f, m))
    }

    fn force_cycle(&mut self, c: usize, e: EdgeId) -> bool {
        let cycle = &self.cycles[c];
        if self.mode == HitMode::HitMatching && self.mark[e] == Mark::In {
            let g = self.g;
            for &f in cycle {
                if self.mark[f] == Mark::Open && g.adjacent(e, f) && !self.assign(f, Mark::Out) {
                    return false;
                }
            }
        }
        if self.cycle_open[c] != 1 || self.mode == HitMode::None {
            return true;
        }
        let last = *cycle
            .iter()
            .find(|&&f| self.mark[f] == Mark::Open)
            .expect("one open edge");
        let need_in = self.cycle_in[c] == 0;
        let need_out = self.mode == HitMode::HitAndCohit && self.cycle_in[c] + 1 == cycle.len();
        match (need_in, need_out) {
            (true, true) => false,
            (true, false) => self.assign(last, Mark::In),
            (false, true) => self.assign(last, Mark::Out),
            (false, false) => true,
        }
    }

    /// Applies forced moves triggered by trail entries from `from` onwards.
    fn propagate(&mut self, mut from: usize) -> bool {
        while from < self.trail.len() {
            let e = self.trail[from];
            from += 1;
            let (u, v) = self.g.endpoints(e);
            if !self.force_vertex(u) || !self.force_vertex(v) {
                return false;
            }
            if let Some(c) = self.owner[e] {
                if !self.force_cycle(c, e) {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&mut self, next: EdgeId) -> Outcome {
        if !self.clock.tick() {
            return Outcome::Budget;
        }
        let Some(e) = (next..self.mark.len()).find(|&e| self.mark[e] == Mark::Open) else {
            return Outcome::Found(
                self.g
                    .edge_ids()
                    .filter(|&e| self.mark[e] == Mark::In)
                    .collect(),
            );
        };
        for m in [Mark::In, Mark::Out] {
            let mark = self.trail.len();
            if self.assign(e, m) && self.propagate(mark) {
                match self.dfs(e + 1) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            self.undo(mark);
        }
        Outcome::Exhausted
    }

    fn run(&mut self) -> Outcome {
        let initial_ok = self.g.vertices().all(|v| self.vertex_ok(v))
            && (0..self.cycles.len()).all(|c| self.cycle_ok(c))
            && self.g.vertices().all(|v| self.force_vertex(v))
            && self.propagate(0);
        if !initial_ok {
            self.clock.tick();
            return Outcome::Exhausted;
        }
        self.dfs(0)
    }
}

/// Exhaustive search for a `t`-factor meeting every cycle as `mode` requires.
/// `Unsat` is a proof that none exists.
pub fn t_factor_oracle(
    g: &Multigraph,
    t: usize,
    cycles: &CycleSet,
    mode: HitMode,
    budget: SearchBudget,
) -> Result<OracleVerdict> {
    budget.validate()?;
    cycles.validate(g, true)?;
    let mut oracle = Oracle {
        g,
        t,
        mode,
        cycles: cycles.cycles(),
        owner: cycles.owner_of_edges(g),
        mark: vec![Mark::Open; g.edge_count()],
        deg_in: vec![0; g.vertex_count()],
        open_at: g.vertices().map(|v| g.degree(v)).collect(),
        cycle_in: vec![0; cycles.len()],
        cycle_open: cycles.iter().map(Vec::len).collect(),
        trail: Vec::new(),
        clock: Clock::new(budget),
    };
    let status = match oracle.run() {
        Outcome::Found(edges) => {
            let f = Factor::new(t, edges);
            if !verify_factor(g, &f, t) || !verify_intersections(g, &f, cycles, mode) {
                return Err(Error::CheckFailed(format!(
                    "oracle witness fails t={t} mode={mode}"
                )));
            }
            Status::Sat(f)
        }
        Outcome::Exhausted => Status::Unsat,
        Outcome::Budget => Status::BudgetExceeded,
    };
    Ok(OracleVerdict {
        status,
        nodes: oracle.clock.nodes(),
        cut_depth: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Satisfiability by enumerating all `2^m` edge subsets.
    fn naive(g: &Multigraph, t: usize, cycles: &CycleSet, mode: HitMode) -> bool {
        let m = g.edge_count();
        (0u64..1 << m).any(|mask| {
            let f = Factor::new(t, (0..m).filter(|&e| mask >> e & 1 == 1));
            verify_factor(g, &f, t) && verify_intersections(g, &f, cycles, mode)
        })
    }

    /// Graph built as a union of random vertex cycles plus a few chords; the
    /// first `keep` cycles become the prescribed set.
    fn arb_instance() -> impl Strategy<Value = (Multigraph, CycleSet)> {
        (3usize..7)
            .prop_flat_map(|n| {
                let cycle =
                    proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 2..=n).prop_shuffle();
                (
                    Just(n),
                    proptest::collection::vec(cycle, 1..4),
                    proptest::collection::vec((0..n, 0..n), 0..4),
                    0usize..4,
                )
            })
            .prop_map(|(n, vcycles, chords, keep)| {
                let mut g = Multigraph::with_vertices(n);
                let mut cycles = Vec::new();
                for vs in &vcycles {
                    let k = vs.len();
                    let c: Vec<EdgeId> = (0..k)
                        .map(|i| g.add_edge(vs[i], vs[(i + 1) % k]).unwrap())
                        .collect();
                    cycles.push(c);
                }
                for (u, v) in chords {
                    if u != v {
                        g.add_edge(u, v).unwrap();
                    }
                }
                cycles.truncate(keep);
                (g, CycleSet::new(cycles))
            })
            .prop_filter("at most 14 edges", |(g, _)| g.edge_count() <= 14)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_subset_enumeration((g, o) in arb_instance(), t in 0usize..4) {
            for mode in HitMode::ALL {
                let v = t_factor_oracle(&g, t, &o, mode, SearchBudget::unlimited()).unwrap();
                prop_assert_eq!(v.is_sat(), naive(&g, t, &o, mode), "mode {}", mode);
            }
        }

        #[test]
        fn hit_witness_is_accepted_without_cycles((g, o) in arb_instance(), t in 1usize..3) {
            let v = t_factor_oracle(&g, t, &o, HitMode::Hit, SearchBudget::unlimited()).unwrap();
            if let Some(f) = v.witness() {
                prop_assert!(verify_intersections(&g, f, &o, HitMode::None));
                prop_assert!(t_factor_oracle(&g, t, &o, HitMode::None, SearchBudget::unlimited()).unwrap().is_sat());
            }
        }
    }

    #[test]
    fn deterministic_witness_takes_lowest_edges_first() {
        let g = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let v = t_factor_oracle(
            &g,
            1,
            &CycleSet::empty(),
            HitMode::None,
            SearchBudget::unlimited(),
        )
        .unwrap();
        assert_eq!(v.witness().unwrap().edges(), &[0, 2]);
        let again = t_factor_oracle(
            &g,
            1,
            &CycleSet::empty(),
            HitMode::None,
            SearchBudget::unlimited(),
        )
        .unwrap();
        assert_eq!(v, again);
    }

    #[test]
    fn budget_is_not_unsat() {
        let g = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let v = t_factor_oracle(
            &g,
            5,
            &CycleSet::empty(),
            HitMode::None,
            SearchBudget::unlimited(),
        )
        .unwrap();
        assert!(v.is_unsat());
        let o = CycleSet::new(vec![vec![0, 1, 2, 3]]);
        let v = t_factor_oracle(&g, 2, &o, HitMode::HitAndCohit, SearchBudget::nodes(1)).unwrap();
        assert_eq!(v.status, Status::BudgetExceeded);
    }
}
