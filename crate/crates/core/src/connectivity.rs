//! Connectivity predicates: exact vertex connectivity, bridges and 2-edge-cuts.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};

/// A 2-edge-cut together with the two sides of the graph it separates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoEdgeCut {
    pub edges: (EdgeId, EdgeId),
    /// The side containing vertex 0.
    pub first: Vec<Vertex>,
    pub second: Vec<Vertex>,
}

impl TwoEdgeCut {
    pub fn side_of(&self, v: Vertex) -> usize {
        if self.first.binary_search(&v).is_ok() {
            0
        } else {
            1
        }
    }
}

/// Residual network for unit vertex capacities.
struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Max flow by shortest augmenting paths, stopping once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        let mut parent_arc = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            parent_arc.fill(usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && y != s && parent_arc[y] == usize::MAX {
                        parent_arc[y] = a;
                        if y == t {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut y = t;
            while y != s {
                let a = parent_arc[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

fn simple_adjacency(g: &Multigraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Minimum number of internally disjoint paths between non-adjacent `s`, `t`
/// (equivalently the smallest vertex set separating them), capped at `limit`.
fn local_connectivity(g: &Multigraph, adj: &[Vec<bool>], s: Vertex, t: Vertex, limit: u32) -> u32 {
    let n = g.vertex_count();
    let big = n as u32 + 1;
    // vertex v becomes in-node 2v and out-node 2v+1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { big } else { 1 };
        net.arc(2 * v, 2 * v + 1, cap);
    }
    for (u, row) in adj.iter().enumerate() {
        for (v, &joined) in row.iter().enumerate() {
            if u != v && joined {
                net.arc(2 * u + 1, 2 * v, big);
            }
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Vertex connectivity of the underlying simple graph: the size of a smallest
/// vertex cut, or `n - 1` when every pair of vertices is adjacent.
/// Disconnected graphs have connectivity 0.
pub fn vertex_connectivity(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let adj = simple_adjacency(g);
    let mut best = (n - 1) as u32;
    for s in 0..n {
        for t in s + 1..n {
            if !adj[s][t] {
                best = best.min(local_connectivity(g, &adj, s, t, best));
            }
        }
    }
    best as usize
}

/// Connected with no vertex cut of fewer than `k` vertices.
pub fn is_k_connected(g: &Multigraph, k: usize) -> bool {
    vertex_connectivity(g) >= k
}

pub fn bridges(g: &Multigraph) -> Vec<EdgeId> {
    let (base, _) = g.components();
    g.edge_ids()
        .filter(|&e| g.components_without(&[e]).0 > base)
        .collect()
}

/// All 2-edge-cuts of a connected bridgeless graph, in lexicographic edge-id order.
pub fn two_edge_cut_sides(g: &Multigraph) -> Result<Vec<TwoEdgeCut>> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    if let Some(&b) = bridges(g).first() {
        return Err(Error::Bridge(b));
    }
    let mut cuts = Vec::new();
    for e in g.edge_ids() {
        for f in e + 1..g.edge_count() {
            let (count, comp) = g.components_without(&[e, f]);
            if count > 1 {
                let (first, second): (Vec<Vertex>, Vec<Vertex>) =
                    g.vertices().partition(|&v| comp[v] == 0);
                cuts.push(TwoEdgeCut {
                    edges: (e, f),
                    first,
                    second,
                });
            }
        }
    }
    Ok(cuts)
}

pub fn is_two_edge_connected(g: &Multigraph) -> bool {
    g.is_connected() && g.vertex_count() >= 2 && bridges(g).is_empty()
}
