//! Reference computations for tests. Everything here works from raw edge
//! lists and bitmasks and shares no code with the library's checks.
#![allow(dead_code)]

use cyclefactor::{CycleSet, HitMode, Multigraph, Orientation};

/// Does some edge subset of `g` form a `t`-factor meeting every cycle as
/// `mode` requires? Plain enumeration of all `2^m` subsets.
pub fn naive_sat(g: &Multigraph, t: usize, cycles: &CycleSet, mode: HitMode) -> bool {
    let m = g.edge_count();
    assert!(m <= 24, "naive enumeration is limited to 24 edges");
    (0u32..1 << m).any(|mask| subset_ok(g, mask, t, cycles, mode))
}

/// All `(t, mode)` pairs at once, in one pass over the subsets.
pub fn naive_table(g: &Multigraph, cycles: &CycleSet, max_t: usize) -> Vec<[bool; 4]> {
    let m = g.edge_count();
    assert!(m <= 24);
    let mut table = vec![[false; 4]; max_t + 1];
    for mask in 0u32..1 << m {
        let Some(t) = uniform_degree(g, mask) else {
            continue;
        };
        if t > max_t {
            continue;
        }
        for (i, mode) in HitMode::ALL.into_iter().enumerate() {
            if !table[t][i] && cycles_ok(g, mask, cycles, mode) {
                table[t][i] = true;
            }
        }
    }
    table
}

fn uniform_degree(g: &Multigraph, mask: u32) -> Option<usize> {
    let mut deg = vec![0usize; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> e & 1 == 1 {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let first = *deg.first()?;
    deg.iter().all(|&d| d == first).then_some(first)
}

fn cycles_ok(g: &Multigraph, mask: u32, cycles: &CycleSet, mode: HitMode) -> bool {
    cycles.iter().all(|c| {
        let inside: Vec<usize> = c.iter().copied().filter(|&e| mask >> e & 1 == 1).collect();
        let share = |a: usize, b: usize| {
            let (p, q) = g.edges()[a];
            let (x, y) = g.edges()[b];
            p == x || p == y || q == x || q == y
        };
        match mode {
            HitMode::None => true,
            HitMode::Hit => !inside.is_empty(),
            HitMode::HitMatching => {
                !inside.is_empty()
                    && (0..inside.len())
                        .all(|i| (i + 1..inside.len()).all(|j| !share(inside[i], inside[j])))
            }
            HitMode::HitAndCohit => !inside.is_empty() && inside.len() < c.len(),
        }
    })
}

fn subset_ok(g: &Multigraph, mask: u32, t: usize, cycles: &CycleSet, mode: HitMode) -> bool {
    uniform_degree(g, mask) == Some(t) && cycles_ok(g, mask, cycles, mode)
}

/// Checks an explicit edge list the same way.
pub fn factor_ok(
    g: &Multigraph,
    edges: &[usize],
    t: usize,
    cycles: &CycleSet,
    mode: HitMode,
) -> bool {
    let mut deg = vec![0usize; g.vertex_count()];
    let mut inside = vec![false; g.edge_count()];
    for &e in edges {
        let (u, v) = g.edges()[e];
        deg[u] += 1;
        deg[v] += 1;
        inside[e] = true;
    }
    if deg.iter().any(|&d| d != t) {
        return false;
    }
    cycles.iter().all(|c| {
        let hits: Vec<usize> = c.iter().copied().filter(|&e| inside[e]).collect();
        match mode {
            HitMode::None => true,
            HitMode::Hit => !hits.is_empty(),
            HitMode::HitMatching => {
                !hits.is_empty()
                    && hits.iter().enumerate().all(|(i, &a)| {
                        hits[i + 1..].iter().all(|&b| {
                            let (p, q) = g.edges()[a];
                            let (x, y) = g.edges()[b];
                            p != x && p != y && q != x && q != y
                        })
                    })
            }
            HitMode::HitAndCohit => !hits.is_empty() && hits.len() < c.len(),
        }
    })
}

/// Every perfect matching, by covering the lowest uncovered vertex first.
pub fn perfect_matchings(g: &Multigraph) -> Vec<Vec<usize>> {
    fn go(
        g: &Multigraph,
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(v) = covered.iter().position(|c| !c) else {
            let mut m = chosen.clone();
            m.sort_unstable();
            out.push(m);
            return;
        };
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if (a == v || b == v) && !covered[a] && !covered[b] {
                covered[a] = true;
                covered[b] = true;
                chosen.push(e);
                go(g, covered, chosen, out);
                chosen.pop();
                covered[a] = false;
                covered[b] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        g,
        &mut vec![false; g.vertex_count()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Indegrees from the head list directly.
pub fn indegrees(g: &Multigraph, d: &Orientation) -> Vec<usize> {
    let mut deg = vec![0; g.vertex_count()];
    for &h in d.heads() {
        deg[h] += 1;
    }
    deg
}

/// A cycle is consistently directed iff, walking it, every edge points the
/// same way relative to the walk.
pub fn is_directed_cycle(g: &Multigraph, d: &Orientation, cycle: &[usize]) -> bool {
    // find the walk start: the endpoint of the first edge not shared with the second
    let (a, b) = g.edges()[cycle[0]];
    let (c, e) = g.edges()[cycle[1 % cycle.len()]];
    let mut cur = if cycle.len() == 2 || b == c || b == e {
        a
    } else {
        b
    };
    let mut forward = Vec::with_capacity(cycle.len());
    for &edge in cycle {
        let (u, v) = g.edges()[edge];
        let next = if u == cur { v } else { u };
        forward.push(d.heads()[edge] == next);
        cur = next;
    }
    forward.iter().all(|&f| f) || forward.iter().all(|&f| !f)
}
