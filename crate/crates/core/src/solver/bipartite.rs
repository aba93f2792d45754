use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

/// Perfect matching of a 2-regular bipartite multigraph: every cycle is
/// walked from its lowest edge id and alternate edges are kept, starting with
/// that one.
pub fn bipartite_alternating_matching(g: &Multigraph) -> Result<Vec<EdgeId>> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 2) {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {}, expected 2",
            g.degree(v)
        )));
    }
    let mut seen = vec![false; g.edge_count()];
    let mut matching = Vec::with_capacity(g.vertex_count() / 2);
    for first in g.edge_ids() {
        if seen[first] {
            continue;
        }
        let start = g.endpoints(first).0;
        let mut cycle = vec![first];
        seen[first] = true;
        let (mut e, mut v) = (first, g.endpoints(first).1);
        while v != start {
            let next = *g.incident(v).iter().find(|&&f| f != e).expect("degree 2");
            seen[next] = true;
            cycle.push(next);
            v = g.opposite(next, v);
            e = next;
        }
        if cycle.len() % 2 == 1 {
            return Err(Error::Precondition(format!(
                "odd cycle through edge {first}: graph is not bipartite"
            )));
        }
        matching.extend(cycle.iter().step_by(2));
    }
    matching.sort_unstable();
    Ok(matching)
}
