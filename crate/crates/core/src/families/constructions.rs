//! The extremal constructions.

use super::{FamilyInstance, FamilyMeta};
use crate::error::{Error, Result};
use crate::graph::{CycleSet, EdgeId, Multigraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Thm4Case {
    /// `r >= 4` even, `t >= 2` even: copies of `J'` glued at `x`.
    EvenEven,
    /// `r >= 6` even, `t >= 3` odd: `G_{r-2}` with a doubly attached paw per vertex.
    EvenOdd,
    /// `r >= 5` odd, `t >= 2`: `G_{r-1}` with a paw hanging from a bridge per vertex.
    Odd,
    /// `t = 1`: the graph `W_r`.
    One,
}

impl Thm4Case {
    pub fn classify(r: usize, t: usize) -> Result<Self> {
        if t < 1 || t + 2 > r {
            return Err(Error::Precondition(format!(
                "need 1 <= t <= r-2, got r={r} t={t}"
            )));
        }
        let case = if t == 1 {
            Thm4Case::One
        } else if r % 2 == 0 && t % 2 == 0 {
            Thm4Case::EvenEven
        } else if r % 2 == 0 && r >= 6 && t >= 3 {
            Thm4Case::EvenOdd
        } else if r % 2 == 1 && r >= 5 {
            Thm4Case::Odd
        } else {
            return Err(Error::Precondition(format!(
                "no construction covers r={r} t={t}"
            )));
        };
        Ok(case)
    }

    pub fn number(self) -> usize {
        match self {
            Thm4Case::EvenEven => 1,
            Thm4Case::EvenOdd => 2,
            Thm4Case::Odd => 3,
            Thm4Case::One => 4,
        }
    }
}

fn add(g: &mut Multigraph, u: Vertex, v: Vertex, count: usize) -> Vec<EdgeId> {
    (0..count)
        .map(|_| g.add_edge(u, v).expect("generator endpoints are in range"))
        .collect()
}

/// `G_r` for even `r >= 4`: `x = 0`, then copy `i` holds
/// `y z v1 v2 v3 u1 u2 u3` at `1 + 8i ..`. Returns the triangles `z v1 u1`.
fn g_even(r: usize) -> (Multigraph, CycleSet) {
    let copies = r / 2;
    let mut g = Multigraph::with_vertices(1 + 8 * copies);
    let mut triangles = Vec::with_capacity(copies);
    let (k, k2) = ((r - 2) / 2, (r + 2) / 2);
    for i in 0..copies {
        let b = 1 + 8 * i;
        let (y, z, v1, v2, v3, u1, u2, u3) = (b, b + 1, b + 2, b + 3, b + 4, b + 5, b + 6, b + 7);
        add(&mut g, 0, y, 2);
        add(&mut g, y, z, r - 2);
        let tri = [
            add(&mut g, z, v1, 1)[0],
            add(&mut g, v1, u1, 1)[0],
            add(&mut g, u1, z, 1)[0],
        ];
        triangles.push(tri.to_vec());
        add(&mut g, v1, v2, k);
        add(&mut g, v1, v3, k);
        add(&mut g, u1, u2, k);
        add(&mut g, u1, u3, k);
        add(&mut g, v2, v3, k2);
        add(&mut g, u2, u3, k2);
    }
    (g, CycleSet::new(triangles))
}

/// Hangs a paw `w a b c` on every vertex `w` of `g`; `a b c` of vertex `v`
/// become `n + 3v ..`.
fn attach_paws(g: &mut Multigraph, wa: usize, ab: usize, bc: usize) {
    let n = g.vertex_count();
    for v in 0..n {
        let (a, b, c) = (g.add_vertex(), g.add_vertex(), g.add_vertex());
        add(g, v, a, wa);
        add(g, a, b, ab);
        add(g, a, c, ab);
        add(g, b, c, bc);
    }
}

/// `W_r`: triangle `q1 q2 q3 = 0 1 2`, then `p_i^1 p_i^2 p_i^3` at `3 + 3i ..`.
fn w_graph(r: usize) -> (Multigraph, CycleSet) {
    let mut g = Multigraph::with_vertices(12);
    let tri = vec![
        add(&mut g, 0, 1, 1)[0],
        add(&mut g, 1, 2, 1)[0],
        add(&mut g, 0, 2, 1)[0],
    ];
    for q in 0..3 {
        let (p1, p2, p3) = (3 + 3 * q, 4 + 3 * q, 5 + 3 * q);
        add(&mut g, q, p1, r - 2);
        add(&mut g, p1, p2, 1);
        add(&mut g, p1, p3, 1);
        add(&mut g, p2, p3, r - 1);
    }
    (g, CycleSet::new(vec![tri]))
}

/// `r`-regular graph with a cut vertex and prescribed triangles such that no
/// `t`-factor meets all of them.
pub fn gen_thm4(r: usize, t: usize) -> Result<FamilyInstance> {
    let case = Thm4Case::classify(r, t)?;
    let (graph, cycles, note) = match case {
        Thm4Case::EvenEven => {
            let (g, o) = g_even(r);
            (
                g,
                o,
                "numbering: x=0; copy i: y z v1 v2 v3 u1 u2 u3 at 1+8i",
            )
        }
        Thm4Case::EvenOdd => {
            let (mut g, o) = g_even(r - 2);
            attach_paws(&mut g, 2, (r - 2) / 2, (r + 2) / 2);
            (
                g,
                o,
                "numbering: G_(r-2) as for even r, then paw a b c of vertex v at n+3v",
            )
        }
        Thm4Case::Odd => {
            let (mut g, o) = g_even(r - 1);
            attach_paws(&mut g, 1, r / 2, r.div_ceil(2));
            (
                g,
                o,
                "numbering: G_(r-1) as for even r, then paw a b c of vertex v at n+3v",
            )
        }
        Thm4Case::One => {
            let (g, o) = w_graph(r);
            (
                g,
                o,
                "numbering: q1 q2 q3 = 0 1 2; p_i^1 p_i^2 p_i^3 at 3+3i",
            )
        }
    };
    let meta = FamilyMeta {
        family: "thm4",
        params: vec![("r", r), ("t", t), ("case", case.number())],
        regular: r,
        connectivity: Some(1),
        unsat_t: vec![t],
        has_factor_t: vec![t],
        notes: vec![note.to_string()],
    };
    Ok(FamilyInstance {
        graph,
        cycles,
        meta,
    })
}

/// Three copies of `K_{r-2,r}` whose `r`-sides are joined by `r` triangles.
/// Copy `i` holds `a_1..a_r` then `b_1..b_{r-2}` at `i(2r-2) ..`.
pub fn gen_thm5(r: usize) -> Result<FamilyInstance> {
    if r < 3 {
        return Err(Error::Precondition(format!("need r >= 3, got {r}")));
    }
    let block = 2 * r - 2;
    let a = |i: usize, j: usize| i * block + j;
    let b = |i: usize, k: usize| i * block + r + k;
    let mut g = Multigraph::with_vertices(3 * block);
    for i in 0..3 {
        for j in 0..r {
            for k in 0..r - 2 {
                add(&mut g, a(i, j), b(i, k), 1);
            }
        }
    }
    let triangles = (0..r)
        .map(|j| {
            vec![
                add(&mut g, a(0, j), a(1, j), 1)[0],
                add(&mut g, a(1, j), a(2, j), 1)[0],
                add(&mut g, a(0, j), a(2, j), 1)[0],
            ]
        })
        .collect();
    let threshold = r.div_ceil(3);
    let meta = FamilyMeta {
        family: "thm5",
        params: vec![("r", r)],
        regular: r,
        connectivity: Some(r),
        unsat_t: (1..threshold).collect(),
        has_factor_t: (1..=r).collect(),
        notes: vec!["numbering: copy i: a_1..a_r then b_1..b_(r-2) at i(2r-2)".into()],
    };
    Ok(FamilyInstance {
        graph: g,
        cycles: CycleSet::new(triangles),
        meta,
    })
}

/// `2k` subdivided parallel edges between `u1 = 0` and `u2 = 1`, with
/// `v_i = 1 + i`, plus `2k-2` parallel edges `v_i v_{i+1}` for odd `i`.
/// The prescribed cycles are the 4-cycles `u1 v_i u2 v_{i+1}`.
pub fn gen_sec6_2k(k: usize) -> Result<FamilyInstance> {
    if k < 2 {
        return Err(Error::Precondition(format!("need k >= 2, got {k}")));
    }
    let mut g = Multigraph::with_vertices(2 * k + 2);
    let v = |i: usize| 1 + i;
    for i in 1..=2 * k {
        add(&mut g, 0, v(i), 1);
        add(&mut g, v(i), 1, 1);
    }
    let mut cycles = Vec::with_capacity(k);
    for i in (1..2 * k).step_by(2) {
        add(&mut g, v(i), v(i + 1), 2 * k - 2);
        let (first, second) = (2 * (i - 1), 2 * i);
        cycles.push(vec![first, first + 1, second + 1, second]);
    }
    let meta = FamilyMeta {
        family: "sec6-2k",
        params: vec![("k", k)],
        regular: 2 * k,
        connectivity: Some(2),
        unsat_t: (1..k).collect(),
        has_factor_t: vec![],
        notes: vec!["numbering: u1=0 u2=1 v_i=1+i; subdivision edges first".into()],
    };
    Ok(FamilyInstance {
        graph: g,
        cycles: CycleSet::new(cycles),
        meta,
    })
}

/// Every edge doubled; edge `e` becomes `2e` and `2e+1`, which form one
/// prescribed 2-cycle.
pub fn gen_doubled(base: &Multigraph) -> Result<FamilyInstance> {
    let mut g = Multigraph::with_vertices(base.vertex_count());
    let mut cycles = Vec::with_capacity(base.edge_count());
    for &(u, v) in base.edges() {
        cycles.push(add(&mut g, u, v, 2));
    }
    let r = base.is_regular().unwrap_or(0);
    let meta = FamilyMeta {
        family: "doubled",
        params: vec![("n", base.vertex_count()), ("m", base.edge_count())],
        regular: 2 * r,
        connectivity: None,
        unsat_t: vec![],
        has_factor_t: vec![],
        notes: vec![format!(
            "claim: a {}-factor hits every 2-cycle iff the base graph has a 1-factor",
            r + 1
        )],
    };
    Ok(FamilyInstance {
        graph: g,
        cycles: CycleSet::new(cycles),
        meta,
    })
}
