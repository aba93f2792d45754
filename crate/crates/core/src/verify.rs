//! Postcondition predicates for factors, cycle intersections and orientations.

use crate::graph::{cycle_vertices, CycleSet, Factor, HitMode, Multigraph, Orientation, Vertex};

/// First vertex whose factor degree differs from `t`, with that degree.
pub fn factor_violation(g: &Multigraph, f: &Factor, t: usize) -> Option<(Vertex, usize)> {
    let mut deg = vec![0usize; g.vertex_count()];
    for &e in f.edges() {
        if e >= g.edge_count() {
            return Some((usize::MAX, 0));
        }
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter()
        .enumerate()
        .find(|(_, &d)| d != t)
        .map(|(v, &d)| (v, d))
}

/// True iff every vertex of `g` meets exactly `t` edges of `f`.
pub fn verify_factor(g: &Multigraph, f: &Factor, t: usize) -> bool {
    factor_violation(g, f, t).is_none()
}

/// Index of the first cycle the factor fails to meet as `mode` requires.
pub fn intersection_violation(
    g: &Multigraph,
    f: &Factor,
    cycles: &CycleSet,
    mode: HitMode,
) -> Option<usize> {
    let inside = f.mask(g.edge_count());
    cycles.iter().position(|c| !cycle_ok(g, &inside, c, mode))
}

fn cycle_ok(g: &Multigraph, inside: &[bool], cycle: &[usize], mode: HitMode) -> bool {
    let hits: Vec<usize> = cycle
        .iter()
        .copied()
        .filter(|&e| inside.get(e).copied().unwrap_or(false))
        .collect();
    match mode {
        HitMode::None => true,
        HitMode::Hit => !hits.is_empty(),
        HitMode::HitMatching => {
            !hits.is_empty()
                && hits
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| hits[i + 1..].iter().all(|&f| !g.adjacent(e, f)))
        }
        HitMode::HitAndCohit => !hits.is_empty() && hits.len() < cycle.len(),
    }
}

pub fn verify_intersections(g: &Multigraph, f: &Factor, cycles: &CycleSet, mode: HitMode) -> bool {
    intersection_violation(g, f, cycles, mode).is_none()
}

/// A cycle is oriented if at each of its vertices exactly one of its two
/// edges there points inwards.
pub fn is_oriented_cycle(g: &Multigraph, d: &Orientation, cycle: &[usize]) -> bool {
    let Ok(vs) = cycle_vertices(g, cycle) else {
        return false;
    };
    let k = cycle.len();
    (0..k).all(|i| {
        // vertex vs[i] sits between edges i-1 and i
        let v = vs[i];
        let before = cycle[(i + k - 1) % k];
        let after = cycle[i];
        (d.head(before) == v) != (d.head(after) == v)
    })
}

/// Even indegree at every vertex and no cycle of `cycles` oriented.
pub fn verify_orientation(g: &Multigraph, d: &Orientation, cycles: &CycleSet) -> bool {
    d.heads().len() == g.edge_count()
        && d.indegrees(g).iter().all(|&x| x % 2 == 0)
        && cycles.iter().all(|c| !is_oriented_cycle(g, d, c))
}
