//! Vertex replacement surgeries and the projection of matchings back to the
//! original graph.
//!
//! [`cubic_expansion`] swaps every vertex `v` for a copy `T_v` of a gadget tree
//! with its leaves removed; the edges of `v` take over the leaf slots, so the
//! result is cubic. [`split_expansion`] splits every vertex into degree-2
//! pieces according to an orientation, so the result is 2-regular. Both keep
//! the original edge ids, so `E(G)` sits inside the expanded edge set
//! unchanged.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gadgets::{build_even_leaf_tree, build_gadget_tree, GadgetTree};
use crate::graph::{CycleSet, EdgeId, Factor, Multigraph, Orientation, Vertex};
use crate::verify::is_oriented_cycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `3t`-regular input, third-family gadget with `3t` leaves.
    Third,
    /// `2t`-regular input with `t` even, even-leaf gadget with `2t` leaves.
    Half,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMap {
    pub original: Multigraph,
    pub expanded: Multigraph,
    /// Expanded id of each original edge.
    pub edge_map: Vec<EdgeId>,
    /// Replacement vertices of each original vertex.
    pub vertex_groups: Vec<Vec<Vertex>>,
}

impl ExpansionMap {
    /// Original edge behind each expanded edge, if any.
    pub fn inverse_edge_map(&self) -> Vec<Option<EdgeId>> {
        let mut inv = vec![None; self.expanded.edge_count()];
        for (e, &x) in self.edge_map.iter().enumerate() {
            inv[x] = Some(e);
        }
        inv
    }

    /// Debug sidecar: `x <orig-eid> <new-eid>` and `g <orig-vertex> <new...>`.
    pub fn to_sidecar(&self) -> String {
        let mut out = String::new();
        for (e, x) in self.edge_map.iter().enumerate() {
            let _ = writeln!(out, "x {e} {x}");
        }
        for (v, group) in self.vertex_groups.iter().enumerate() {
            let _ = write!(out, "g {v}");
            for w in group {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        out
    }
}

/// For each cycle through `v`, the two cycle edges at `v`.
fn cycle_pairs_at(g: &Multigraph, owner: &[Option<usize>], v: Vertex) -> Vec<(usize, [EdgeId; 2])> {
    let mut pairs: Vec<(usize, Vec<EdgeId>)> = Vec::new();
    for &e in g.incident(v) {
        if let Some(c) = owner[e] {
            match pairs.iter_mut().find(|(owner, _)| *owner == c) {
                Some((_, edges)) => edges.push(e),
                None => pairs.push((c, vec![e])),
            }
        }
    }
    pairs.sort_by_key(|(c, _)| *c);
    pairs
        .into_iter()
        .map(|(c, edges)| {
            debug_assert_eq!(
                edges.len(),
                2,
                "cycle {c} meets vertex {v} in {} edges",
                edges.len()
            );
            (c, [edges[0], edges[1]])
        })
        .collect()
}

/// Places each pair of cycle edges into one sibling group, backtracking over
/// groups with at least two free slots. Returns the group index per pair.
fn place_pairs(capacity: &mut [usize], pairs: usize, placed: &mut Vec<usize>) -> bool {
    if placed.len() == pairs {
        return true;
    }
    for g in 0..capacity.len() {
        if capacity[g] >= 2 {
            capacity[g] -= 2;
            placed.push(g);
            if place_pairs(capacity, pairs, placed) {
                return true;
            }
            placed.pop();
            capacity[g] += 2;
        }
    }
    false
}

/// Leaf slot of the gadget taken by each incident edge of `v`.
fn assign_slots(
    g: &Multigraph,
    tree: &GadgetTree,
    owner: &[Option<usize>],
    v: Vertex,
) -> Result<Vec<(EdgeId, Vertex)>> {
    let pairs = cycle_pairs_at(g, owner, v);
    let mut capacity: Vec<usize> = tree.sibling_groups.iter().map(|s| s.leaves.len()).collect();
    let mut placed = Vec::new();
    if !place_pairs(&mut capacity, pairs.len(), &mut placed) {
        return Err(Error::SlotAssignment {
            vertex: v,
            reason: format!(
                "{} cycle pairs but sibling groups of sizes {:?}",
                pairs.len(),
                tree.sibling_groups
                    .iter()
                    .map(|s| s.leaves.len())
                    .collect::<Vec<_>>()
            ),
        });
    }
    let mut taken = vec![false; tree.tree.vertex_count()];
    let mut slots = Vec::with_capacity(g.degree(v));
    for ((_, edges), &group) in pairs.iter().zip(&placed) {
        let free = tree.sibling_groups[group]
            .leaves
            .iter()
            .copied()
            .filter(|&l| !taken[l]);
        for (e, leaf) in edges.iter().zip(free.collect::<Vec<_>>()) {
            taken[leaf] = true;
            slots.push((*e, leaf));
        }
    }
    let paired: Vec<EdgeId> = pairs.iter().flat_map(|(_, e)| *e).collect();
    let mut free_leaves = tree.leaves.iter().copied().filter(|&l| !taken[l]);
    for &e in g.incident(v).iter().filter(|e| !paired.contains(e)) {
        let leaf = free_leaves.next().ok_or_else(|| Error::SlotAssignment {
            vertex: v,
            reason: "more incident edges than leaf slots".into(),
        })?;
        slots.push((e, leaf));
    }
    Ok(slots)
}

/// Replaces every vertex by a cubic gadget so that the two edges any prescribed
/// cycle uses at a vertex end on the same gadget vertex. Returns the map and
/// the prescribed cycles carried into the expanded graph.
pub fn cubic_expansion(
    g: &Multigraph,
    cycles: &CycleSet,
    t: usize,
    family: Family,
) -> Result<(ExpansionMap, CycleSet)> {
    let tree = match family {
        Family::Third => {
            if t < 1 || g.is_regular() != Some(3 * t) {
                return Err(Error::NotRegular { expected: 3 * t });
            }
            build_gadget_tree(t)?
        }
        Family::Half => {
            if t < 2 || t % 2 == 1 {
                return Err(Error::Precondition(format!(
                    "half expansion needs an even t >= 2, got {t}"
                )));
            }
            if g.is_regular() != Some(2 * t) {
                return Err(Error::NotRegular { expected: 2 * t });
            }
            build_even_leaf_tree(2 * t)?
        }
    };
    cycles.validate(g, true)?;
    let owner = cycles.owner_of_edges(g);

    let internal = tree.internal_vertices();
    let mut local = vec![usize::MAX; tree.tree.vertex_count()];
    for (i, &x) in internal.iter().enumerate() {
        local[x] = i;
    }
    let k = internal.len();
    let vertex_groups: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|v| (v * k..(v + 1) * k).collect())
        .collect();

    // endpoint of edge e at its first / second original endpoint
    let mut attach = vec![[usize::MAX; 2]; g.edge_count()];
    for v in g.vertices() {
        for (e, leaf) in assign_slots(g, &tree, &owner, v)? {
            let parent = tree.tree.opposite(tree.tree.incident(leaf)[0], leaf);
            let side = usize::from(g.endpoints(e).0 != v);
            attach[e][side] = vertex_groups[v][local[parent]];
        }
    }

    let mut expanded = Multigraph::with_vertices(g.vertex_count() * k);
    let mut edge_map = Vec::with_capacity(g.edge_count());
    for ends in &attach {
        edge_map.push(expanded.add_edge(ends[0], ends[1])?);
    }
    for v in g.vertices() {
        for &(a, b) in tree.tree.edges() {
            if local[a] != usize::MAX && local[b] != usize::MAX {
                expanded.add_edge(vertex_groups[v][local[a]], vertex_groups[v][local[b]])?;
            }
        }
    }

    let carried = cycles.map_edges(|e| edge_map[e]);
    carried.validate(&expanded, true).map_err(|err| {
        Error::CheckFailed(format!(
            "carried cycles are not cycles of the expansion: {err}"
        ))
    })?;
    let map = ExpansionMap {
        original: g.clone(),
        expanded,
        edge_map,
        vertex_groups,
    };
    Ok((map, carried))
}

/// One degree-2 piece of a split vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub vertex: Vertex,
    pub split: Vertex,
    pub edges: [EdgeId; 2],
    /// Both edges point into `vertex` (otherwise both point out).
    pub incoming: bool,
    /// Cycle whose two same-direction edges forced this pair.
    pub forced_by: Option<usize>,
}

/// Splits every vertex into degree-2 vertices whose two edges point the same
/// way. Same-direction edge pairs of a prescribed cycle share a split vertex;
/// the remaining in-edges and out-edges are paired by increasing id.
pub fn split_expansion(
    g: &Multigraph,
    d: &Orientation,
    cycles: &CycleSet,
) -> Result<(ExpansionMap, Vec<SplitPair>)> {
    let indeg = d.indegrees(g);
    for v in g.vertices() {
        if indeg[v] % 2 == 1 {
            return Err(Error::OddIndegree {
                vertex: v,
                indegree: indeg[v],
            });
        }
        if (g.degree(v) - indeg[v]) % 2 == 1 {
            return Err(Error::Precondition(format!("vertex {v} has odd outdegree")));
        }
    }
    cycles.validate(g, true)?;
    for (i, c) in cycles.iter().enumerate() {
        if is_oriented_cycle(g, d, c) {
            return Err(Error::Precondition(format!(
                "cycle {i} is an oriented cycle"
            )));
        }
    }
    let owner = cycles.owner_of_edges(g);

    let mut pairs: Vec<SplitPair> = Vec::new();
    let mut vertex_groups = Vec::with_capacity(g.vertex_count());
    let mut split_of = vec![[usize::MAX; 2]; g.edge_count()];
    for v in g.vertices() {
        let incoming = |e: EdgeId| d.head(e) == v;
        let mut local: Vec<([EdgeId; 2], bool, Option<usize>)> = Vec::new();
        let mut used = Vec::new();
        for (c, [e, f]) in cycle_pairs_at(g, &owner, v) {
            if incoming(e) == incoming(f) {
                local.push(([e, f], incoming(e), Some(c)));
                used.extend([e, f]);
            }
        }
        for direction in [true, false] {
            let rest: Vec<EdgeId> = g
                .incident(v)
                .iter()
                .copied()
                .filter(|&e| incoming(e) == direction && !used.contains(&e))
                .collect();
            for chunk in rest.chunks(2) {
                local.push(([chunk[0], chunk[1]], direction, None));
            }
        }
        local.sort_by_key(|(edges, _, _)| edges[0].min(edges[1]));
        let mut group = Vec::with_capacity(local.len());
        for (edges, incoming, forced_by) in local {
            let split = pairs.len();
            for e in edges {
                let side = usize::from(g.endpoints(e).0 != v);
                split_of[e][side] = split;
            }
            group.push(split);
            pairs.push(SplitPair {
                vertex: v,
                split,
                edges,
                incoming,
                forced_by,
            });
        }
        vertex_groups.push(group);
    }

    let mut expanded = Multigraph::with_vertices(pairs.len());
    let mut edge_map = Vec::with_capacity(g.edge_count());
    for ends in &split_of {
        edge_map.push(expanded.add_edge(ends[0], ends[1])?);
    }
    let map = ExpansionMap {
        original: g.clone(),
        expanded,
        edge_map,
        vertex_groups,
    };
    Ok((map, pairs))
}

/// Pulls a perfect matching of the expanded graph back to the original edges.
pub fn project_factor(map: &ExpansionMap, matching: &[EdgeId], t: usize) -> Result<Factor> {
    let h = &map.expanded;
    let mut covered = vec![0usize; h.vertex_count()];
    for &e in matching {
        h.check_edge(e)?;
        let (a, b) = h.endpoints(e);
        covered[a] += 1;
        covered[b] += 1;
    }
    if let Some(v) = covered.iter().position(|&c| c != 1) {
        return Err(Error::NotPerfectMatching(format!(
            "vertex {v} is covered {} times",
            covered[v]
        )));
    }
    let inverse = map.inverse_edge_map();
    Ok(Factor::new(t, matching.iter().filter_map(|&e| inverse[e])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{is_k_connected, two_edge_cut_sides};
    use crate::decompose::cyclic_orientation;

    fn k4() -> Multigraph {
        Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn doubled_triangle() -> Multigraph {
        Multigraph::new(3, [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn t1_expansion_is_identity() {
        let g = k4();
        let o = CycleSet::new(vec![vec![0, 3, 1]]);
        let (map, carried) = cubic_expansion(&g, &o, 1, Family::Third).unwrap();
        assert_eq!(map.expanded, g);
        assert_eq!(carried, o);
        let f = project_factor(&map, &[0, 5], 1).unwrap();
        assert_eq!(f.edges(), &[0, 5]);
    }

    #[test]
    fn doubled_triangle_half_expansion() {
        let g = doubled_triangle();
        let o = CycleSet::new(vec![vec![0, 1, 2]]);
        let (map, carried) = cubic_expansion(&g, &o, 2, Family::Half).unwrap();
        let h = &map.expanded;
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 9);
        assert_eq!(h.is_regular(), Some(3));
        assert!(crate::connectivity::is_two_edge_connected(h));
        assert_eq!(carried.cycles(), &[vec![0, 1, 2]]);
        assert_eq!(
            crate::graph::cycle_vertices(h, &carried.cycles()[0])
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn third_expansion_of_doubled_k4_blows_up_vertices_into_four() {
        let mut g = k4();
        for (u, v) in k4().edges().to_vec() {
            g.add_edge(u, v).unwrap();
        }
        let o = CycleSet::new(vec![vec![0, 3, 1], vec![6, 10, 11, 7]]);
        o.validate(&g, false).unwrap();
        let (map, carried) = cubic_expansion(&g, &o, 2, Family::Third).unwrap();
        let h = &map.expanded;
        assert_eq!(h.is_regular(), Some(3));
        assert!(map.vertex_groups.iter().all(|grp| grp.len() == 4));
        assert_eq!(h.vertex_count(), 16);
        assert_eq!(h.edge_count(), 12 + 4 * 3);
        assert!(is_k_connected(h, 2));
        // 2-edge-cuts never separate carried cycles
        let owner = carried.owner_of_edges(h);
        for cut in two_edge_cut_sides(h).unwrap() {
            let sides: Vec<usize> = carried
                .iter()
                .map(|c| cut.side_of(h.endpoints(c[0]).0))
                .collect();
            assert!(owner[cut.edges.0].is_none() && owner[cut.edges.1].is_none());
            assert!(
                sides.windows(2).all(|w| w[0] == w[1]),
                "cut {:?} separates cycles",
                cut.edges
            );
        }
    }

    #[test]
    fn regularity_mismatch_is_rejected() {
        assert!(matches!(
            cubic_expansion(&k4(), &CycleSet::empty(), 2, Family::Third),
            Err(Error::NotRegular { expected: 6 })
        ));
        assert!(cubic_expansion(&doubled_triangle(), &CycleSet::empty(), 1, Family::Half).is_err());
    }

    #[test]
    fn alternating_four_cycle_splits_into_itself() {
        let g = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = Orientation::new(&g, vec![0, 2, 2, 0]).unwrap();
        let o = CycleSet::new(vec![vec![0, 1, 2, 3]]);
        let (map, pairs) = split_expansion(&g, &d, &o).unwrap();
        assert_eq!(map.expanded, g);
        assert!(pairs.iter().all(|p| p.forced_by == Some(0)));
    }

    #[test]
    fn split_rejects_oriented_cycles_and_odd_indegree() {
        let g = doubled_triangle();
        let o = CycleSet::new(vec![vec![0, 1, 2]]);
        let cyclic =
            cyclic_orientation(&g, &CycleSet::new(vec![vec![0, 1, 2], vec![3, 4, 5]])).unwrap();
        assert!(matches!(
            split_expansion(&g, &cyclic, &o),
            Err(Error::Precondition(_))
        ));
        let odd = Orientation::new(&g, vec![1, 1, 0, 1, 2, 2]).unwrap();
        assert!(matches!(
            split_expansion(&g, &odd, &o),
            Err(Error::OddIndegree {
                vertex: 0,
                indegree: 1
            })
        ));

        // indegrees 2,2,2 with the first triangle oriented
        let d = Orientation::new(&g, vec![1, 2, 0, 1, 2, 0]).unwrap();
        assert!(matches!(
            split_expansion(&g, &d, &o),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn same_direction_cycle_edges_share_a_split_vertex() {
        let g = doubled_triangle();
        // edges 0 and 2 both point into vertex 0; vertex 0 has indegree 2
        let d = Orientation::new(&g, vec![0, 2, 0, 1, 1, 2]).unwrap();
        let o = CycleSet::new(vec![vec![0, 1, 2]]);
        let (map, pairs) = split_expansion(&g, &d, &o).unwrap();
        let h = &map.expanded;
        assert_eq!(h.is_regular(), Some(2));
        assert!(h.adjacent(0, 2));
        let p = pairs
            .iter()
            .find(|p| p.vertex == 0 && p.forced_by == Some(0))
            .unwrap();
        assert_eq!((p.edges, p.incoming), ([0, 2], true));
    }

    #[test]
    fn projection_requires_perfect_matching() {
        let g = k4();
        let (map, _) = cubic_expansion(&g, &CycleSet::empty(), 1, Family::Third).unwrap();
        assert!(matches!(
            project_factor(&map, &[0], 1),
            Err(Error::NotPerfectMatching(_))
        ));
        assert!(matches!(
            project_factor(&map, &[0, 1, 5], 1),
            Err(Error::NotPerfectMatching(_))
        ));
    }

    #[test]
    fn sidecar_lists_edges_then_groups() {
        let g = Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let (map, _) = cubic_expansion(&g, &CycleSet::empty(), 1, Family::Third).unwrap();
        assert_eq!(map.to_sidecar(), "x 0 0\nx 1 1\nx 2 2\ng 0 0\ng 1 1\n");
    }
}
