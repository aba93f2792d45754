//! Perfect matchings through 2-edge-cuts.
//!
//! For a cut `{x1y1, x2y2}` with every prescribed cycle on the `x` side `H1`,
//! solve `H1 + x1x2` recursively, then complete it with a matching of
//! `H2 + y1y2` that uses `y1y2` exactly when the first one used `x1x2`.

use super::matching::{find_matching, matching_verdict, require_cubic, Outcome};
use super::{Clock, OracleVerdict, SearchBudget};
use crate::connectivity::two_edge_cut_sides;
use crate::error::{Error, Result};
use crate::graph::{CycleSet, EdgeId, Multigraph, Vertex};

/// Side subgraph plus the edge joining the two cut endpoints on that side.
struct Side {
    graph: Multigraph,
    back: Vec<EdgeId>,
    joiner: EdgeId,
}

fn side(g: &Multigraph, vertices: &[Vertex], a: Vertex, b: Vertex) -> Result<Side> {
    let (mut graph, back) = g.induced_subgraph(vertices);
    let local = |v: Vertex| {
        vertices
            .binary_search(&v)
            .expect("cut endpoint lies on this side")
    };
    let joiner = graph.add_edge(local(a), local(b))?;
    Ok(Side {
        graph,
        back,
        joiner,
    })
}

fn recurse(g: &Multigraph, cycles: &CycleSet, clock: &mut Clock) -> Result<(Outcome, usize)> {
    let Some(cut) = two_edge_cut_sides(g)?.into_iter().next() else {
        return Ok((find_matching(g, cycles.cycles(), &[], &[], clock), 0));
    };
    let (e, f) = cut.edges;
    let mut cycle_side = None;
    for c in cycles {
        let s = cut.side_of(g.endpoints(c[0]).0);
        if c.contains(&e) || c.contains(&f) || cycle_side.is_some_and(|x| x != s) {
            return Err(Error::CutSeparatesCycles { cut: (e, f) });
        }
        cycle_side = Some(s);
    }
    let (near, far) = match cycle_side.unwrap_or(0) {
        0 => (&cut.first, &cut.second),
        _ => (&cut.second, &cut.first),
    };
    let split = |edge: EdgeId| {
        let (a, b) = g.endpoints(edge);
        if near.binary_search(&a).is_ok() {
            (a, b)
        } else {
            (b, a)
        }
    };
    let ((x1, y1), (x2, y2)) = (split(e), split(f));

    let h1 = side(g, near, x1, x2)?;
    let mut to_h1 = vec![usize::MAX; g.edge_count()];
    for (i, &orig) in h1.back.iter().enumerate() {
        to_h1[orig] = i;
    }
    let (first, depth) = recurse(&h1.graph, &cycles.map_edges(|e| to_h1[e]), clock)?;
    let m1 = match first {
        Outcome::Found(m) => m,
        other => return Ok((other, depth + 1)),
    };
    let through = m1.contains(&h1.joiner);

    let h2 = side(g, far, y1, y2)?;
    let (forced, forbidden) = if through {
        (vec![h2.joiner], vec![])
    } else {
        (vec![], vec![h2.joiner])
    };
    let m2 = match find_matching(&h2.graph, &[], &forced, &forbidden, clock) {
        Outcome::Found(m) => m,
        Outcome::Budget => return Ok((Outcome::Budget, depth + 1)),
        Outcome::Exhausted => {
            return Err(Error::CheckFailed(format!(
                "no perfect matching of the far side of cut ({e}, {f}) {} the joining edge",
                if through { "through" } else { "avoiding" }
            )))
        }
    };

    let mut edges: Vec<EdgeId> = m1
        .iter()
        .filter(|&&x| x != h1.joiner)
        .map(|&x| h1.back[x])
        .collect();
    edges.extend(m2.iter().filter(|&&x| x != h2.joiner).map(|&x| h2.back[x]));
    if through {
        edges.extend([e, f]);
    }
    edges.sort_unstable();
    Ok((Outcome::Found(edges), depth + 1))
}

/// Same contract as the direct matching search without a forced edge, but
/// reduces at 2-edge-cuts first. Needs a 2-edge-connected cubic graph in which
/// no 2-edge-cut separates two prescribed cycles.
pub fn two_cut_recursion(
    g: &Multigraph,
    cycles: &CycleSet,
    budget: SearchBudget,
) -> Result<OracleVerdict> {
    budget.validate()?;
    require_cubic(g)?;
    cycles.validate(g, true)?;
    let mut clock = Clock::new(budget);
    let (outcome, depth) = recurse(g, cycles, &mut clock)?;
    matching_verdict(g, cycles, None, outcome, clock.nodes(), depth)
}
