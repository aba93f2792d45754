//! Cubic gadget trees used to blow up vertices of regular graphs.
//!
//! Two families are built here. The *third* family grows a claw by repeatedly
//! gluing two fresh claws onto a leaf, giving `3t` leaves. The *even-leaf*
//! family starts from the tree with two adjacent internal vertices and keeps
//! hanging two leaves under each member of a sibling pair, giving any even
//! number of leaves. In both, every non-leaf vertex has degree 3.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::io::write_multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    /// `3t` leaves.
    Third { t: usize },
    /// `leaves` leaves, no lonely pendant edge.
    EvenLeaf { leaves: usize },
}

/// Leaves hanging off one internal vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiblingGroup {
    pub parent: Vertex,
    pub leaves: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetTree {
    pub kind: GadgetKind,
    pub tree: Multigraph,
    /// Breadth-first from vertex 0, ties by vertex id.
    pub leaves: Vec<Vertex>,
    /// Ordered by the first leaf of each group in `leaves`.
    pub sibling_groups: Vec<SiblingGroup>,
}

impl GadgetTree {
    fn from_tree(kind: GadgetKind, tree: Multigraph) -> Self {
        let leaves: Vec<Vertex> = bfs_order(&tree)
            .into_iter()
            .filter(|&v| tree.degree(v) == 1)
            .collect();
        let mut sibling_groups: Vec<SiblingGroup> = Vec::new();
        for &leaf in &leaves {
            let parent = tree.opposite(tree.incident(leaf)[0], leaf);
            match sibling_groups.iter_mut().find(|g| g.parent == parent) {
                Some(group) => group.leaves.push(leaf),
                None => sibling_groups.push(SiblingGroup {
                    parent,
                    leaves: vec![leaf],
                }),
            }
        }
        GadgetTree {
            kind,
            tree,
            leaves,
            sibling_groups,
        }
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.tree.degree(v) == 1
    }

    /// Non-leaf vertices in increasing id order.
    pub fn internal_vertices(&self) -> Vec<Vertex> {
        self.tree.vertices().filter(|&v| !self.is_leaf(v)).collect()
    }

    pub fn lonely_pendant_edges(&self) -> Vec<EdgeId> {
        lonely_pendant_edges(&self.tree)
    }

    /// `.mg` text with a comment recording the family parameter and leaves.
    pub fn to_mg(&self) -> String {
        let param = match self.kind {
            GadgetKind::Third { t } => format!("gadget third t={t}"),
            GadgetKind::EvenLeaf { leaves } => format!("gadget even-leaf L={leaves}"),
        };
        let leaves: Vec<String> = self.leaves.iter().map(|v| v.to_string()).collect();
        write_multigraph(&self.tree, &[param, format!("leaves {}", leaves.join(" "))])
    }
}

fn bfs_order(tree: &Multigraph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(tree.vertex_count());
    let mut seen = vec![false; tree.vertex_count()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let mut next: Vec<Vertex> = tree
            .incident(v)
            .iter()
            .map(|&e| tree.opposite(e, v))
            .collect();
        next.sort_unstable();
        for w in next {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

fn claw() -> Multigraph {
    Multigraph::new(4, [(0, 1), (0, 2), (0, 3)]).expect("claw")
}

/// Hangs `count` fresh leaves under `v`.
fn sprout(tree: &mut Multigraph, v: Vertex, count: usize) {
    for _ in 0..count {
        let w = tree.add_vertex();
        tree.add_edge(v, w).expect("fresh vertex");
    }
}

/// The canonical member of the third family with `3t` leaves.
///
/// Starting from the claw, each step glues two claws onto one leaf. The leaf
/// is the one on a lonely pendant edge if there is such an edge, and the
/// lowest-id leaf otherwise, which keeps the tree at most one lonely pendant
/// edge.
pub fn build_gadget_tree(t: usize) -> Result<GadgetTree> {
    if t < 1 {
        return Err(Error::Precondition("gadget tree needs t >= 1".into()));
    }
    let mut tree = claw();
    for _ in 1..t {
        let leaf = match lonely_pendant_edges(&tree).first() {
            Some(&e) => {
                let (a, b) = tree.endpoints(e);
                if tree.degree(a) == 1 {
                    a
                } else {
                    b
                }
            }
            None => tree
                .vertices()
                .find(|&v| tree.degree(v) == 1)
                .expect("trees have leaves"),
        };
        for _ in 0..2 {
            let center = tree.add_vertex();
            tree.add_edge(leaf, center).expect("fresh vertex");
            sprout(&mut tree, center, 2);
        }
    }
    Ok(GadgetTree::from_tree(GadgetKind::Third { t }, tree))
}

/// A cubic tree with `leaves` leaves and no lonely pendant edge.
///
/// Starts from two adjacent internal vertices with two leaves each; each step
/// takes the sibling pair with the smallest leaf id and hangs two new leaves
/// under both of its members.
pub fn build_even_leaf_tree(leaves: usize) -> Result<GadgetTree> {
    if leaves < 4 || leaves % 2 == 1 {
        return Err(Error::Precondition(format!(
            "even-leaf tree needs an even leaf count >= 4, got {leaves}"
        )));
    }
    let mut tree = Multigraph::new(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).expect("H-tree");
    let mut count = 4;
    while count < leaves {
        let pair = GadgetTree::from_tree(GadgetKind::EvenLeaf { leaves: count }, tree.clone())
            .sibling_groups
            .into_iter()
            .filter(|g| g.leaves.len() == 2)
            .min_by_key(|g| g.leaves.iter().copied().min())
            .expect("the even-leaf tree always has a sibling pair");
        for &leaf in &pair.leaves {
            sprout(&mut tree, leaf, 2);
        }
        count += 2;
    }
    Ok(GadgetTree::from_tree(GadgetKind::EvenLeaf { leaves }, tree))
}

/// Pendant edges of a tree not adjacent to any other pendant edge.
pub fn lonely_pendant_edges(tree: &Multigraph) -> Vec<EdgeId> {
    let pendant: Vec<bool> = tree
        .edge_ids()
        .map(|e| {
            let (a, b) = tree.endpoints(e);
            tree.degree(a) == 1 || tree.degree(b) == 1
        })
        .collect();
    tree.edge_ids()
        .filter(|&e| pendant[e])
        .filter(|&e| {
            let (a, b) = tree.endpoints(e);
            [a, b]
                .iter()
                .all(|&v| tree.incident(v).iter().all(|&f| f == e || !pendant[f]))
        })
        .collect()
}

/// Number of leaves met by `matching`, which must be a matching of the tree
/// covering every internal vertex.
pub fn matched_leaf_count(t: &GadgetTree, matching: &[EdgeId]) -> Result<usize> {
    let mut covered = vec![false; t.tree.vertex_count()];
    for &e in matching {
        t.tree.check_edge(e)?;
        let (a, b) = t.tree.endpoints(e);
        for v in [a, b] {
            if covered[v] {
                return Err(Error::Precondition(format!(
                    "edge set is not a matching: vertex {v} covered twice"
                )));
            }
            covered[v] = true;
        }
    }
    if let Some(v) = t.internal_vertices().into_iter().find(|&v| !covered[v]) {
        return Err(Error::Precondition(format!(
            "internal vertex {v} is not matched"
        )));
    }
    Ok(t.leaves.iter().filter(|&&l| covered[l]).count())
}
