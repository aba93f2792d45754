//! Seeded random regular multigraphs and greedy cycle packings.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::{Cycle, CycleSet, EdgeId, Multigraph, Vertex};
use crate::pipelines::is_two_connected;

const MAX_ATTEMPTS: usize = 100_000;
const MAX_ENUMERATED: usize = 50_000;

/// Loopless `r`-regular multigraph on `n` vertices from the pairing model,
/// resampled until it is `k`-connected. Edges are sorted by endpoints.
pub fn random_regular(n: usize, r: usize, k: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    if n < 2 || r == 0 || n * r % 2 == 1 {
        return Err(Error::Precondition(format!(
            "no loopless {r}-regular multigraph on {n} vertices"
        )));
    }
    let mut points: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    for _ in 0..MAX_ATTEMPTS {
        points.shuffle(rng);
        let mut pairs: Vec<(Vertex, Vertex)> = points
            .chunks(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if pairs.iter().any(|(u, v)| u == v) {
            continue;
        }
        pairs.sort_unstable();
        let g = Multigraph::new(n, pairs)?;
        let connected = if k <= 2 {
            is_two_connected(&g)
        } else {
            is_k_connected(&g, k)
        };
        if connected {
            return Ok(g);
        }
    }
    Err(Error::Precondition(format!(
        "no {k}-connected {r}-regular multigraph on {n} vertices after {MAX_ATTEMPTS} samples"
    )))
}

/// All cycles with a length in `lengths`, each once: it starts at its
/// smallest vertex and is listed in the direction of the smaller neighbour.
fn enumerate_cycles(g: &Multigraph, lengths: &[usize]) -> Vec<Cycle> {
    let max_len = lengths.iter().copied().max().unwrap_or(0);
    let mut found = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut verts: Vec<Vertex> = Vec::new();
    let mut edges: Vec<EdgeId> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Multigraph,
        start: Vertex,
        lengths: &[usize],
        max_len: usize,
        on_path: &mut [bool],
        verts: &mut Vec<Vertex>,
        edges: &mut Vec<EdgeId>,
        found: &mut Vec<Cycle>,
    ) {
        if found.len() >= MAX_ENUMERATED {
            return;
        }
        let cur = *verts.last().expect("path is non-empty");
        for &e in g.incident(cur) {
            let w = g.opposite(e, cur);
            if edges.last() == Some(&e) {
                continue;
            }
            if w == start {
                let len = edges.len() + 1;
                let canonical = if len == 2 {
                    edges[0] < e
                } else {
                    verts[1] < cur
                };
                if lengths.contains(&len) && canonical {
                    let mut c = edges.clone();
                    c.push(e);
                    found.push(c);
                }
            } else if w > start && !on_path[w] && edges.len() + 1 < max_len {
                on_path[w] = true;
                verts.push(w);
                edges.push(e);
                extend(g, start, lengths, max_len, on_path, verts, edges, found);
                edges.pop();
                verts.pop();
                on_path[w] = false;
            }
        }
    }

    for s in g.vertices() {
        on_path[s] = true;
        verts.push(s);
        extend(
            g,
            s,
            lengths,
            max_len,
            &mut on_path,
            &mut verts,
            &mut edges,
            &mut found,
        );
        verts.pop();
        on_path[s] = false;
    }
    found
}

/// Edge-disjoint cycles with lengths from `lengths`, chosen greedily in a
/// seeded random order, shorter lengths first.
pub fn pack_cycles(g: &Multigraph, lengths: &[usize], rng: &mut impl Rng) -> CycleSet {
    let mut all = enumerate_cycles(g, lengths);
    all.shuffle(rng);
    all.sort_by_key(Vec::len);
    let mut used = vec![false; g.edge_count()];
    let mut out = CycleSet::empty();
    for c in all {
        if c.iter().all(|&e| !used[e]) {
            for &e in &c {
                used[e] = true;
            }
            out.push(c);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomInstance {
    pub seed: u64,
    pub graph: Multigraph,
    pub cycles: CycleSet,
}

impl RandomInstance {
    /// 2-connected `r`-regular graph with a packing of odd cycles of length 3, 5 or 7.
    pub fn odd(n: usize, r: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graph = random_regular(n, r, 2, &mut rng)?;
        let cycles = pack_cycles(&graph, &[3, 5, 7], &mut rng);
        Ok(RandomInstance {
            seed,
            graph,
            cycles,
        })
    }

    /// 3-connected `r`-regular graph with a packing of cycles of length 3 to 6.
    pub fn arbitrary(n: usize, r: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graph = random_regular(n, r, 3, &mut rng)?;
        let cycles = pack_cycles(&graph, &[3, 4, 5, 6], &mut rng);
        Ok(RandomInstance {
            seed,
            graph,
            cycles,
        })
    }
}
