mod common;

use cyclefactor::connectivity::two_edge_cut_sides;
use cyclefactor::expansion::{cubic_expansion, project_factor, Family};
use cyclefactor::families::{complete, doubled, pack_cycles, random_regular, RandomInstance};
use cyclefactor::pipelines::{third_arbitrary_pipeline, PipelineOptions};
use cyclefactor::solver::{constrained_perfect_matching, two_cut_recursion, SearchBudget};
use cyclefactor::{CycleSet, EdgeId, HitMode, Multigraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Vertex count, edges, the two degree-2 ports and candidate cycles.
type Block = (usize, Vec<(usize, usize)>, usize, usize, Vec<Vec<usize>>);

fn block(kind: usize) -> Block {
    match kind {
        // K4 minus the edge ab
        0 => (
            4,
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
            0,
            3,
            vec![vec![0, 2, 1], vec![3, 4, 2]],
        ),
        // prism minus one rung
        1 => (
            6,
            vec![
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
            ],
            2,
            5,
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![0, 7, 3, 6]],
        ),
        // K33 minus one edge
        _ => (
            6,
            vec![
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
            ],
            2,
            5,
            vec![vec![0, 1, 4, 3]],
        ),
    }
}

/// Ring of blocks; cycles of the chosen block (by local index) are carried over.
fn necklace(kinds: &[usize], host: usize, pick: &[usize]) -> (Multigraph, CycleSet) {
    let mut g = Multigraph::with_vertices(0);
    let mut ports = Vec::new();
    let mut cycles = Vec::new();
    for (i, &k) in kinds.iter().enumerate() {
        let (n, edges, a, b, cs) = block(k);
        let off = g.vertex_count();
        let e0 = g.edge_count();
        for _ in 0..n {
            g.add_vertex();
        }
        for (u, v) in edges {
            g.add_edge(off + u, off + v).unwrap();
        }
        ports.push((off + a, off + b));
        if i == host {
            for &p in pick {
                if let Some(c) = cs.get(p % cs.len().max(1)) {
                    let c: Vec<EdgeId> = c.iter().map(|e| e0 + e).collect();
                    // keep the chosen cycles edge-disjoint
                    if cycles
                        .iter()
                        .all(|d: &Vec<EdgeId>| c.iter().all(|e| !d.contains(e)))
                    {
                        cycles.push(c);
                    }
                }
            }
        }
    }
    for i in 0..kinds.len() {
        g.add_edge(ports[i].1, ports[(i + 1) % kinds.len()].0)
            .unwrap();
    }
    (g, CycleSet::new(cycles))
}

/// A perfect matching restricted to one side of a 2-edge-cut, with the
/// joining edge standing in for a matched cut, is a perfect matching there.
fn restriction_is_matching(g: &Multigraph, m: &[EdgeId], cycles: &CycleSet) {
    for cut in two_edge_cut_sides(g).unwrap() {
        for side in [&cut.first, &cut.second] {
            let (mut h, back) = g.induced_subgraph(side);
            let (e, f) = cut.edges;
            let inner = |x: EdgeId| {
                let (u, v) = g.endpoints(x);
                side.binary_search(&u)
                    .map(|_| u)
                    .or_else(|_| side.binary_search(&v).map(|_| v))
                    .unwrap()
            };
            let local = |v| side.binary_search(&v).unwrap();
            let joiner = h.add_edge(local(inner(e)), local(inner(f))).unwrap();
            let mut edges: Vec<EdgeId> = back
                .iter()
                .enumerate()
                .filter(|(_, o)| m.contains(o))
                .map(|(i, _)| i)
                .collect();
            match (m.contains(&e), m.contains(&f)) {
                (true, true) => edges.push(joiner),
                (false, false) => {}
                _ => panic!("perfect matching meets an even side in one cut edge"),
            }
            let mut to_local = vec![usize::MAX; g.edge_count()];
            for (i, &o) in back.iter().enumerate() {
                to_local[o] = i;
            }
            let local_cycles = CycleSet::new(
                cycles
                    .iter()
                    .filter(|c| c.iter().all(|&x| to_local[x] != usize::MAX))
                    .map(|c| c.iter().map(|&x| to_local[x]).collect())
                    .collect(),
            );
            assert!(common::factor_ok(
                &h,
                &edges,
                1,
                &local_cycles,
                HitMode::HitMatching
            ));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn recursion_agrees_with_direct_search(
        kinds in prop::collection::vec(0usize..3, 2..6),
        host in 0usize..6,
        pick in prop::collection::vec(0usize..3, 0..3),
    ) {
        let host = host % kinds.len();
        let (g, o) = necklace(&kinds, host, &pick);
        let a = two_cut_recursion(&g, &o, SearchBudget::unlimited()).unwrap();
        let b = constrained_perfect_matching(&g, &o, None, SearchBudget::unlimited()).unwrap();
        prop_assert_eq!(a.is_sat(), b.is_sat());
        prop_assert!((1..kinds.len()).contains(&a.cut_depth));
        if let Some(w) = a.witness() {
            prop_assert!(common::factor_ok(&g, w.edges(), 1, &o, HitMode::HitMatching));
            restriction_is_matching(&g, w.edges(), &o);
        }
        if g.edge_count() <= 24 {
            let any = common::perfect_matchings(&g)
                .iter()
                .any(|m| common::factor_ok(&g, m, 1, &o, HitMode::HitMatching));
            prop_assert_eq!(any, a.is_sat());
        }
    }

    #[test]
    fn third_expansion_keeps_cycles_on_one_side(n in 3usize..6, seed in any::<u64>()) {
        let inst = RandomInstance::arbitrary(2 * n, 3, seed).unwrap();
        let (map, carried) = cubic_expansion(&inst.graph, &inst.cycles, 1, Family::Third).unwrap();
        for cut in two_edge_cut_sides(&map.expanded).unwrap() {
            let sides: Vec<usize> = carried
                .iter()
                .map(|c| cut.side_of(map.expanded.endpoints(c[0]).0))
                .collect();
            prop_assert!(sides.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn six_regular_expansion_projects_to_factors(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_regular(8, 6, 3, &mut rng).unwrap();
        let o = pack_cycles(&g, &[3, 4, 5], &mut rng);
        let (map, carried) = cubic_expansion(&g, &o, 2, Family::Third).unwrap();
        prop_assert_eq!(map.expanded.is_regular(), Some(3));
        prop_assert_eq!(map.vertex_groups.iter().map(Vec::len).collect::<Vec<_>>(), vec![4; 8]);
        let v = two_cut_recursion(&map.expanded, &carried, SearchBudget::unlimited()).unwrap();
        let w = v.witness().expect("3-connected instance has a matching");
        let f = project_factor(&map, w.edges(), 2).unwrap();
        prop_assert!(common::factor_ok(&g, f.edges(), 2, &o, HitMode::HitMatching));
    }
}

/// Every 2-edge-cut of the expansion consists of tree edges of two gadgets
/// whose original vertices are joined by parallel edges.
fn cuts_come_from_parallel_edges(
    g: &Multigraph,
    map: &cyclefactor::expansion::ExpansionMap,
) -> usize {
    let mut owner = vec![usize::MAX; map.expanded.vertex_count()];
    for (v, group) in map.vertex_groups.iter().enumerate() {
        for &x in group {
            owner[x] = v;
        }
    }
    let gadget_of = |e: EdgeId| {
        let (a, b) = map.expanded.endpoints(e);
        assert!(e >= g.edge_count(), "cut edge {e} is an original edge");
        assert_eq!(owner[a], owner[b]);
        owner[a]
    };
    let cuts = two_edge_cut_sides(&map.expanded).unwrap();
    for cut in &cuts {
        let (v, w) = (gadget_of(cut.edges.0), gadget_of(cut.edges.1));
        assert_ne!(v, w);
        assert!(
            g.multiplicity(v, w) >= 2,
            "cut {:?} between {v} and {w}",
            cut.edges
        );
    }
    cuts.len()
}

#[test]
fn parallel_edges_create_cuts_in_the_expansion() {
    // two vertices joined by six parallel edges
    let g = Multigraph::new(2, vec![(0, 1); 6]).unwrap();
    let (map, _) = cubic_expansion(&g, &CycleSet::empty(), 2, Family::Third).unwrap();
    assert!(cuts_come_from_parallel_edges(&g, &map) > 0);

    let g = doubled(&complete(4));
    let o = CycleSet::new(vec![vec![0, 6, 2]]);
    let (map, carried) = cubic_expansion(&g, &o, 2, Family::Third).unwrap();
    cuts_come_from_parallel_edges(&g, &map);
    let a = two_cut_recursion(&map.expanded, &carried, SearchBudget::unlimited()).unwrap();
    let b = constrained_perfect_matching(&map.expanded, &carried, None, SearchBudget::unlimited())
        .unwrap();
    assert_eq!(a.is_sat(), b.is_sat());
    let rep = third_arbitrary_pipeline(&g, &o, 2, PipelineOptions::default()).unwrap();
    assert!(common::factor_ok(
        &g,
        rep.factor.edges(),
        2,
        &o,
        HitMode::HitMatching
    ));
}

#[test]
fn random_expansions_cut_only_at_parallel_edges() {
    for seed in 0..20 {
        let inst = RandomInstance::arbitrary(8, 6, seed).unwrap();
        let (map, _) = cubic_expansion(&inst.graph, &inst.cycles, 2, Family::Third).unwrap();
        cuts_come_from_parallel_edges(&inst.graph, &map);
    }
}
