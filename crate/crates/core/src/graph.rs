//! Multigraphs with stable edge ids, and the edge-id based objects that live
//! on top of them: cycle sets, factors and orientations.
//!
//! Vertices are `0..n`. Edges are unordered vertex pairs addressed by their
//! position in the edge list, so parallel edges stay distinguishable. Loops
//! are rejected at construction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Multigraph::with_vertices(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_vertices(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.incidence.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        let edge = self.edges.len();
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    edge,
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop { edge, vertex: u });
        }
        self.edges.push((u, v));
        self.incidence[u].push(edge);
        self.incidence[v].push(edge);
        Ok(edge)
    }

    /// Adds `count` parallel copies of `uv`.
    pub fn add_edges(&mut self, u: Vertex, v: Vertex, count: usize) -> Result<()> {
        for _ in 0..count {
            self.add_edge(u, v)?;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn edge_ids(&self) -> std::ops::Range<EdgeId> {
        0..self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        debug_assert!(a == v || b == v, "vertex {v} not on edge {e}");
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_incident(&self, e: EdgeId, v: Vertex) -> bool {
        let (a, b) = self.edges[e];
        a == v || b == v
    }

    /// Edges sharing at least one endpoint.
    pub fn adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        e != f && (self.is_incident(f, a) || self.is_incident(f, b))
    }

    /// Incident edge ids of `v` in increasing order.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.incidence[u]
            .iter()
            .filter(|&&e| self.opposite(e, u) == v)
            .count()
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                m: self.edges.len(),
            })
        }
    }

    /// Returns `r` when every vertex has degree `r`.
    pub fn is_regular(&self) -> Option<usize> {
        let r = self.degree(self.vertices().next()?);
        self.vertices().all(|v| self.degree(v) == r).then_some(r)
    }

    /// Component index per vertex, numbered in order of smallest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        self.components_without(&[])
    }

    /// Components after deleting the listed edges.
    pub fn components_without(&self, removed: &[EdgeId]) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &e in &self.incidence[v] {
                    if removed.contains(&e) {
                        continue;
                    }
                    let w = self.opposite(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.components().0 <= 1
    }

    /// Spanning subgraph on the same vertices keeping the selected edges.
    /// Returns the subgraph and, per new edge id, the original edge id.
    pub fn spanning_subgraph(&self, keep: impl Fn(EdgeId) -> bool) -> (Multigraph, Vec<EdgeId>) {
        let mut sub = Multigraph::with_vertices(self.n);
        let mut back = Vec::new();
        for e in self.edge_ids().filter(|&e| keep(e)) {
            let (u, v) = self.edges[e];
            sub.add_edge(u, v).expect("edge of a valid graph");
            back.push(e);
        }
        (sub, back)
    }

    /// Subgraph induced by `vertices` (relabelled in the given order).
    /// Returns the subgraph and the original id of each new edge.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Multigraph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut sub = Multigraph::with_vertices(vertices.len());
        let mut back = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                sub.add_edge(local[u], local[v])
                    .expect("edge of a valid graph");
                back.push(e);
            }
        }
        (sub, back)
    }
}

/// A closed walk given by edge ids, with consecutive edges sharing a vertex.
pub type Cycle = Vec<EdgeId>;

/// Ordered collection of cycles of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycleSet {
    cycles: Vec<Cycle>,
}

impl CycleSet {
    pub fn new(cycles: Vec<Cycle>) -> Self {
        CycleSet { cycles }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn push(&mut self, cycle: Cycle) {
        self.cycles.push(cycle);
    }

    pub fn into_inner(self) -> Vec<Cycle> {
        self.cycles
    }

    /// Applies an edge-id map to every member.
    pub fn map_edges(&self, map: impl Fn(EdgeId) -> EdgeId) -> CycleSet {
        CycleSet::new(
            self.cycles
                .iter()
                .map(|c| c.iter().map(|&e| map(e)).collect())
                .collect(),
        )
    }

    /// Per edge of `g`, the index of the cycle containing it.
    pub fn owner_of_edges(&self, g: &Multigraph) -> Vec<Option<usize>> {
        let mut owner = vec![None; g.edge_count()];
        for (i, c) in self.cycles.iter().enumerate() {
            for &e in c {
                if e < owner.len() {
                    owner[e] = Some(i);
                }
            }
        }
        owner
    }

    /// Checks that each member is a cycle of `g` and that members are
    /// pairwise edge-disjoint. 2-cycles are rejected unless allowed.
    pub fn validate(&self, g: &Multigraph, allow_two_cycles: bool) -> Result<()> {
        let mut owner: Vec<Option<usize>> = vec![None; g.edge_count()];
        for (i, c) in self.cycles.iter().enumerate() {
            cycle_vertices(g, c).map_err(|reason| Error::cycle(i, reason))?;
            if c.len() == 2 && !allow_two_cycles {
                return Err(Error::cycle(i, "2-cycles are not permitted here"));
            }
            for &e in c {
                if let Some(j) = owner[e] {
                    return Err(Error::CyclesOverlap {
                        first: j,
                        second: i,
                        edge: e,
                    });
                }
                owner[e] = Some(i);
            }
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a CycleSet {
    type Item = &'a Cycle;
    type IntoIter = std::slice::Iter<'a, Cycle>;
    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

/// Vertex sequence `v_0 .. v_{k-1}` of a cycle given as edge ids, where edge
/// `i` joins `v_i` and `v_{i+1 mod k}`.
pub fn cycle_vertices(
    g: &Multigraph,
    cycle: &[EdgeId],
) -> std::result::Result<Vec<Vertex>, String> {
    if cycle.len() < 2 {
        return Err(format!(
            "a cycle needs at least two edges, got {}",
            cycle.len()
        ));
    }
    for &e in cycle {
        if e >= g.edge_count() {
            return Err(format!("edge id {e} out of range"));
        }
    }
    let (a, b) = g.endpoints(cycle[0]);
    let mut last_reason = String::new();
    for start in [a, b] {
        match walk_from(g, cycle, start) {
            Ok(vs) => return Ok(vs),
            Err(reason) => last_reason = reason,
        }
    }
    Err(last_reason)
}

fn walk_from(
    g: &Multigraph,
    cycle: &[EdgeId],
    start: Vertex,
) -> std::result::Result<Vec<Vertex>, String> {
    let mut seen_vertices = vec![false; g.vertex_count()];
    let mut seen_edges = std::collections::HashSet::new();
    let mut vertices = Vec::with_capacity(cycle.len());
    let mut cur = start;
    for &e in cycle {
        if !seen_edges.insert(e) {
            return Err(format!("edge {e} repeated"));
        }
        if !g.is_incident(e, cur) {
            return Err(format!(
                "edge {e} does not continue the walk at vertex {cur}"
            ));
        }
        if seen_vertices[cur] {
            return Err(format!("vertex {cur} repeated"));
        }
        seen_vertices[cur] = true;
        vertices.push(cur);
        cur = g.opposite(e, cur);
    }
    if cur != start {
        return Err("walk is not closed".to_string());
    }
    Ok(vertices)
}

/// Edge subset of a host graph meant to be a `t`-factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub t: usize,
    edges: Vec<EdgeId>,
}

impl Factor {
    pub fn new(t: usize, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Factor { t, edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Membership mask over `m` edges.
    pub fn mask(&self, m: usize) -> Vec<bool> {
        let mut mask = vec![false; m];
        for &e in &self.edges {
            if e < m {
                mask[e] = true;
            }
        }
        mask
    }
}

/// Head vertex per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    head: Vec<Vertex>,
}

impl Orientation {
    pub fn new(g: &Multigraph, head: Vec<Vertex>) -> Result<Self> {
        if head.len() != g.edge_count() {
            return Err(Error::Precondition(format!(
                "orientation covers {} edges, graph has {}",
                head.len(),
                g.edge_count()
            )));
        }
        for (e, &h) in head.iter().enumerate() {
            if h >= g.vertex_count() || !g.is_incident(e, h) {
                return Err(Error::Precondition(format!(
                    "head {h} is not an endpoint of edge {e}"
                )));
            }
        }
        Ok(Orientation { head })
    }

    pub fn head(&self, e: EdgeId) -> Vertex {
        self.head[e]
    }

    pub fn tail(&self, g: &Multigraph, e: EdgeId) -> Vertex {
        g.opposite(e, self.head[e])
    }

    pub fn heads(&self) -> &[Vertex] {
        &self.head
    }

    /// Reverses edge `e` in place.
    pub fn flip(&mut self, g: &Multigraph, e: EdgeId) {
        self.head[e] = g.opposite(e, self.head[e]);
    }

    pub fn indegrees(&self, g: &Multigraph) -> Vec<usize> {
        let mut indeg = vec![0; g.vertex_count()];
        for &h in &self.head {
            indeg[h] += 1;
        }
        indeg
    }
}

/// How a factor has to meet each prescribed cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HitMode {
    /// No intersection requirement.
    None,
    /// At least one cycle edge in the factor.
    Hit,
    /// Hit, and the cycle edges in the factor are pairwise non-adjacent.
    HitMatching,
    /// At least one cycle edge in the factor and one outside it.
    HitAndCohit,
}

impl HitMode {
    pub const ALL: [HitMode; 4] = [
        HitMode::None,
        HitMode::Hit,
        HitMode::HitMatching,
        HitMode::HitAndCohit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HitMode::None => "none",
            HitMode::Hit => "hit",
            HitMode::HitMatching => "hit-matching",
            HitMode::HitAndCohit => "hit-and-cohit",
        }
    }
}

impl fmt::Display for HitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HitMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        HitMode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                format!("unknown mode `{s}` (expected none, hit, hit-matching or hit-and-cohit)")
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_edge_multiplicity() {
        let g = Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
        assert_eq!(g.is_regular(), Some(3));
    }

    #[test]
    fn loops_and_bad_vertices_rejected() {
        assert!(matches!(
            Multigraph::new(1, [(0, 0)]),
            Err(Error::Loop { edge: 0, vertex: 0 })
        ));
        assert!(matches!(
            Multigraph::new(2, [(0, 1), (1, 2)]),
            Err(Error::VertexOutOfRange {
                edge: 1,
                vertex: 2,
                n: 2
            })
        ));
    }

    #[test]
    fn path_is_not_regular() {
        let g = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.is_regular(), None);
    }

    #[test]
    fn cycle_walk_accepts_either_direction_and_two_cycles() {
        let g = Multigraph::new(3, [(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        assert_eq!(cycle_vertices(&g, &[0, 1, 2]).unwrap(), vec![0, 1, 2]);
        assert_eq!(cycle_vertices(&g, &[2, 1, 0]).unwrap(), vec![0, 2, 1]);
        assert!(cycle_vertices(&g, &[0, 3]).is_ok());
        assert!(cycle_vertices(&g, &[0, 1]).is_err());
        let square = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(cycle_vertices(&square, &[0, 2, 1, 3]).is_err());
    }

    #[test]
    fn cycle_set_rejects_overlap_and_two_cycles() {
        let g = Multigraph::new(3, [(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        let two = CycleSet::new(vec![vec![0, 3]]);
        assert!(two.validate(&g, true).is_ok());
        assert!(two.validate(&g, false).is_err());
        let overlap = CycleSet::new(vec![vec![0, 1, 2], vec![3, 0]]);
        assert!(matches!(
            overlap.validate(&g, true),
            Err(Error::CyclesOverlap { edge: 0, .. })
        ));
    }

    #[test]
    fn repeated_vertex_rejected() {
        // figure eight through vertex 0
        let g = Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(cycle_vertices(&g, &[0, 1, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn hit_mode_round_trips_through_str() {
        for m in HitMode::ALL {
            assert_eq!(m.as_str().parse::<HitMode>().unwrap(), m);
        }
        assert!("sometimes".parse::<HitMode>().is_err());
    }
}
