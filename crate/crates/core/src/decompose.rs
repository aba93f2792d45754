//! Cycle decompositions of even graphs and 2-factorizations of
//! even-regular graphs.

use crate::error::{Error, Result};
use crate::graph::{CycleSet, EdgeId, Factor, Multigraph, Orientation, Vertex};

/// Partitions `E(g)` into cycles, keeping the members of `prescribed` verbatim
/// and in front.
///
/// The remaining edges are peeled by a greedy walk: start on the lowest unused
/// edge (from its smaller endpoint), always leave a vertex along its
/// lowest-numbered unused edge, and cut off a cycle whenever the walk returns
/// to a vertex already on it.
pub fn cycle_decomposition(g: &Multigraph, prescribed: &CycleSet) -> Result<CycleSet> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) % 2 == 1) {
        return Err(Error::OddDegree(v));
    }
    prescribed.validate(g, true)?;

    let mut used = vec![false; g.edge_count()];
    for c in prescribed {
        for &e in c {
            used[e] = true;
        }
    }
    let mut out = prescribed.clone();

    // position of each vertex on the current walk
    let mut position = vec![usize::MAX; g.vertex_count()];
    let mut next_start = 0;
    loop {
        while next_start < used.len() && used[next_start] {
            next_start += 1;
        }
        if next_start == used.len() {
            break;
        }
        let first = next_start;
        let (a, b) = g.endpoints(first);
        let start = a.min(b);
        let mut walk_vertices: Vec<Vertex> = vec![start];
        let mut walk_edges: Vec<EdgeId> = vec![first];
        used[first] = true;
        position[start] = 0;
        let mut cur = g.opposite(first, start);

        loop {
            if position[cur] != usize::MAX {
                // closed a cycle at `cur`
                let at = position[cur];
                let cycle: Vec<EdgeId> = walk_edges.drain(at..).collect();
                for v in walk_vertices.drain(at + 1..) {
                    position[v] = usize::MAX;
                }
                out.push(cycle);
                if at == 0 {
                    position[cur] = usize::MAX;
                    break;
                }
            } else {
                position[cur] = walk_vertices.len();
                walk_vertices.push(cur);
            }
            let e = *g
                .incident(cur)
                .iter()
                .find(|&&e| !used[e])
                .expect("even degrees leave an unused edge at the walk's end");
            used[e] = true;
            walk_edges.push(e);
            cur = g.opposite(e, cur);
        }
    }
    Ok(out)
}

/// Orients every cycle of `cycles` along its listed edge order.
pub fn cyclic_orientation(g: &Multigraph, cycles: &CycleSet) -> Result<Orientation> {
    let mut head = vec![usize::MAX; g.edge_count()];
    for (i, c) in cycles.iter().enumerate() {
        let vs = crate::graph::cycle_vertices(g, c).map_err(|r| Error::cycle(i, r))?;
        for (k, &e) in c.iter().enumerate() {
            head[e] = vs[(k + 1) % vs.len()];
        }
    }
    if let Some(e) = head.iter().position(|&h| h == usize::MAX) {
        return Err(Error::Precondition(format!(
            "edge {e} is not covered by the cycles"
        )));
    }
    Orientation::new(g, head)
}

/// Perfect matching of a bipartite multigraph given as edges `(left, right)`.
/// Returns the matched edge index per left vertex, or `None` if some left
/// vertex cannot be matched.
pub(crate) fn bipartite_perfect_matching(
    left: usize,
    right: usize,
    edges: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); left];
    for (i, &(l, _)) in edges.iter().enumerate() {
        adj[l].push(i);
    }
    let mut match_right: Vec<Option<usize>> = vec![None; right];
    let mut match_left: Vec<Option<usize>> = vec![None; left];

    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        edges: &[(usize, usize)],
        seen: &mut [bool],
        match_left: &mut [Option<usize>],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &i in &adj[l] {
            let r = edges[i].1;
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let free = match match_right[r] {
                None => true,
                Some(j) => augment(edges[j].0, adj, edges, seen, match_left, match_right),
            };
            if free {
                match_right[r] = Some(i);
                match_left[l] = Some(i);
                return true;
            }
        }
        false
    }

    let mut seen = vec![false; right];
    for l in 0..left {
        seen.fill(false);
        if !augment(l, &adj, edges, &mut seen, &mut match_left, &mut match_right) {
            return None;
        }
    }
    match_left.into_iter().collect()
}

/// Splits a `2k`-regular multigraph into `k` edge-disjoint 2-factors.
///
/// Each component gets an Eulerian orientation (from a cycle decomposition),
/// every vertex is split into an out-copy and an in-copy, and perfect matchings
/// are peeled off the resulting `k`-regular bipartite graph one at a time.
pub fn two_factorization(g: &Multigraph) -> Result<Vec<Factor>> {
    let n = g.vertex_count();
    let Some(r) = g.is_regular() else {
        return Err(Error::Precondition(
            "two_factorization needs a regular graph".into(),
        ));
    };
    if r % 2 == 1 {
        return Err(Error::OddDegree(0));
    }
    let decomposition = cycle_decomposition(g, &CycleSet::empty())?;
    let orientation = cyclic_orientation(g, &decomposition)?;

    let mut remaining: Vec<EdgeId> = g.edge_ids().collect();
    let mut factors = Vec::with_capacity(r / 2);
    for _ in 0..r / 2 {
        let arcs: Vec<(usize, usize)> = remaining
            .iter()
            .map(|&e| (orientation.tail(g, e), orientation.head(e)))
            .collect();
        let matched = bipartite_perfect_matching(n, n, &arcs).ok_or_else(|| {
            Error::CheckFailed("regular bipartite graph without a perfect matching".into())
        })?;
        let mut taken = vec![false; remaining.len()];
        for &i in &matched {
            taken[i] = true;
        }
        factors.push(Factor::new(2, matched.iter().map(|&i| remaining[i])));
        remaining = remaining
            .iter()
            .zip(&taken)
            .filter(|(_, &t)| !t)
            .map(|(&e, _)| e)
            .collect();
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_factor;

    fn assert_partition(g: &Multigraph, q: &CycleSet) {
        let mut count = vec![0; g.edge_count()];
        for c in q {
            crate::graph::cycle_vertices(g, c).unwrap();
            for &e in c {
                count[e] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == 1), "{count:?}");
    }

    #[test]
    fn single_four_cycle() {
        let g = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let q = cycle_decomposition(&g, &CycleSet::empty()).unwrap();
        assert_eq!(q.cycles(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn bowtie_with_prescribed_triangle() {
        let g = Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let o = CycleSet::new(vec![vec![3, 4, 5]]);
        let q = cycle_decomposition(&g, &o).unwrap();
        assert_eq!(q.cycles(), &[vec![3, 4, 5], vec![0, 1, 2]]);
    }

    #[test]
    fn odd_degree_is_named() {
        let g = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            cycle_decomposition(&g, &CycleSet::empty()),
            Err(Error::OddDegree(0))
        ));
    }

    #[test]
    fn parallel_edges_become_two_cycles() {
        let g = Multigraph::new(2, [(0, 1), (0, 1), (0, 1), (0, 1)]).unwrap();
        let q = cycle_decomposition(&g, &CycleSet::empty()).unwrap();
        assert_eq!(q.cycles(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn walk_that_revisits_a_vertex_mid_path() {
        // edges from vertex 0 lead around a figure eight through vertex 1
        let g = Multigraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 1), (1, 4), (4, 0)]).unwrap();
        let q = cycle_decomposition(&g, &CycleSet::empty()).unwrap();
        assert_partition(&g, &q);
        assert_eq!(q.cycles(), &[vec![1, 2, 3], vec![0, 4, 5]]);
    }

    #[test]
    fn doubled_triangle_two_factorization() {
        let g = Multigraph::new(3, [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)]).unwrap();
        let fs = two_factorization(&g).unwrap();
        assert_eq!(fs.len(), 2);
        let mut seen = [0; 6];
        for f in &fs {
            assert!(verify_factor(&g, f, 2));
            for &e in f.edges() {
                seen[e] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn four_cycle_is_its_own_two_factor() {
        let g = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let fs = two_factorization(&g).unwrap();
        assert_eq!(fs, vec![Factor::new(2, 0..4)]);
    }

    #[test]
    fn bipartite_matching_reports_failure() {
        assert!(bipartite_perfect_matching(2, 2, &[(0, 0), (1, 0)]).is_none());
        assert_eq!(
            bipartite_perfect_matching(2, 2, &[(0, 0), (1, 0), (0, 1)]),
            Some(vec![2, 1])
        );
    }
}
