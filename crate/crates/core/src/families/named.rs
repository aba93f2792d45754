//! Small named graphs used as fixtures.

use crate::graph::{CycleSet, Multigraph};

/// Outer 5-cycle `(i, i+1)` as edges 0-4, spokes `(i, i+5)` as edges 5-9,
/// inner pentagram `(5+i, 5+(i+2)%5)` as edges 10-14.
pub fn petersen() -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Multigraph::new(10, edges).expect("valid edge list")
}

/// The outer and the inner 5-cycle of [`petersen`].
pub fn petersen_cycles() -> CycleSet {
    CycleSet::new(vec![vec![0, 1, 2, 3, 4], vec![10, 12, 14, 11, 13]])
}

/// `K_n` with edges in lexicographic order.
pub fn complete(n: usize) -> Multigraph {
    Multigraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("valid edge list")
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    Multigraph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        .expect("valid edge list")
}

/// Circulant `C_n(jumps)`: for each jump `j` in order, edges `(i, i+j mod n)`.
/// A jump of `n/2` contributes each diameter once.
pub fn circulant(n: usize, jumps: &[usize]) -> Multigraph {
    let mut g = Multigraph::with_vertices(n);
    for &j in jumps {
        let count = if 2 * j == n { n / 2 } else { n };
        for i in 0..count {
            g.add_edge(i, (i + j) % n)
                .expect("jumps are between 1 and n/2");
        }
    }
    g
}

pub fn cycle_graph(n: usize) -> Multigraph {
    circulant(n, &[1])
}

/// Every edge doubled; edge `e` becomes `2e` and `2e + 1`.
pub fn doubled(g: &Multigraph) -> Multigraph {
    let mut d = Multigraph::with_vertices(g.vertex_count());
    for &(u, v) in g.edges() {
        d.add_edges(u, v, 2).expect("valid edge");
    }
    d
}
