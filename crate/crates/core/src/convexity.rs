//! Linear-time answers to the seven convexity problems for the all-path
//! convexity.
//!
//! The interval of a set `S` with `|S| >= 2` is the union of the blocks that
//! survive pruning the block-cut tree down to `T_S`: leaf blocks are removed
//! while their only `S`-vertex (if any) is the cut vertex attaching them to
//! the rest of the tree. The interval is always convex, so hulls equal
//! intervals and every graph is interval monotone.

use thiserror::Error;

use crate::blocks::{decompose, BlockCutTree};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvexityError {
    #[error("pruned tree needs at least two vertices in S, got {0}")]
    SetTooSmall(usize),
    #[error("convexity number is undefined for the one-vertex graph")]
    TrivialGraph,
}

/// The subtree `T_S` of the block-cut tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedTree {
    block_alive: Vec<bool>,
    cut_alive: Vec<bool>,
}

impl PrunedTree {
    pub fn contains_block(&self, b: usize) -> bool {
        self.block_alive[b]
    }

    /// Whether cut vertex `z` of `G` is still a node of the subtree.
    pub fn contains_cut(&self, z: usize) -> bool {
        self.cut_alive[z]
    }

    pub fn surviving_blocks(&self) -> Vec<usize> {
        (0..self.block_alive.len())
            .filter(|&b| self.block_alive[b])
            .collect()
    }

    pub fn surviving_cut_vertices(&self) -> Vec<usize> {
        (0..self.cut_alive.len()).filter(|&z| self.cut_alive[z]).collect()
    }

    /// Tree edges of the subtree as (block, cut vertex) pairs.
    pub fn tree_edges<'a>(&'a self, t: &'a BlockCutTree) -> impl Iterator<Item = (usize, usize)> + 'a {
        t.tree_edges()
            .filter(move |&(b, z)| self.block_alive[b] && self.cut_alive[z])
    }

    /// Union of the surviving blocks' vertices.
    pub fn vertices(&self, t: &BlockCutTree) -> VertexSet {
        let mut mask = vec![false; t.vertex_count()];
        for b in 0..t.block_count() {
            if self.block_alive[b] {
                for &v in t.block(b) {
                    mask[v] = true;
                }
            }
        }
        VertexSet::from_mask(&mask)
    }
}

/// A parameter value together with a set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witnessed {
    pub value: usize,
    pub witness: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityReport {
    /// Convexity number: size of a largest convex set other than `V`.
    pub c: usize,
    /// Interval number.
    pub i: usize,
    /// Hull number.
    pub h: usize,
    /// Geodetic iteration number.
    pub gin: usize,
    pub max_convex_witness: VertexSet,
    pub min_interval_witness: VertexSet,
    /// Set when `c` was taken from the one-vertex convention `c(K1) = 0`.
    pub trivial: bool,
}

/// Reusable query engine over a graph and its block-cut tree.
#[derive(Debug, Clone)]
pub struct AllPath<'g> {
    graph: &'g Graph,
    tree: BlockCutTree,
}

impl<'g> AllPath<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            tree: decompose(graph),
        }
    }

    pub fn with_tree(graph: &'g Graph, tree: BlockCutTree) -> Self {
        assert_eq!(graph.n(), tree.vertex_count(), "tree does not belong to graph");
        Self { graph, tree }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn tree(&self) -> &BlockCutTree {
        &self.tree
    }

    pub fn is_convex(&self, s: &VertexSet) -> bool {
        is_convex(self.graph, s)
    }

    pub fn pruned_tree(&self, s: &VertexSet) -> Result<PrunedTree, ConvexityError> {
        compute_t_s(self.graph, &self.tree, s)
    }

    pub fn interval(&self, s: &VertexSet) -> VertexSet {
        check_members(self.graph, s);
        if s.len() <= 1 {
            return s.clone();
        }
        prune(&self.tree, s).vertices(&self.tree)
    }

    /// The convex hull, which coincides with the interval.
    pub fn hull(&self, s: &VertexSet) -> VertexSet {
        self.interval(s)
    }

    /// Convexity number with a maximum convex witness. The one-vertex graph
    /// yields `c = 0` with the empty witness.
    pub fn convexity_number(&self) -> Witnessed {
        let g = self.graph;
        let n = g.n();
        if n == 1 {
            return Witnessed {
                value: 0,
                witness: VertexSet::new(),
            };
        }
        if n == 2 || self.is_two_connected() {
            return Witnessed {
                value: 1,
                witness: VertexSet::singleton(0),
            };
        }
        let stats = self.tree.end_block_stats();
        let smallest = stats
            .end_blocks
            .iter()
            .copied()
            .min_by_key(|&b| (self.tree.block(b).len(), b))
            .expect("a separable graph has end blocks");
        let cut = self.tree.block_cut_vertices(smallest)[0];
        let mut keep = vec![true; n];
        for &v in self.tree.block(smallest) {
            keep[v] = v == cut;
        }
        Witnessed {
            value: n - stats.b + 1,
            witness: VertexSet::from_mask(&keep),
        }
    }

    pub fn convexity_number_strict(&self) -> Result<Witnessed, ConvexityError> {
        if self.graph.n() == 1 {
            return Err(ConvexityError::TrivialGraph);
        }
        Ok(self.convexity_number())
    }

    /// Interval number with a minimum interval set: the smallest non-cut
    /// vertex of every end block.
    pub fn interval_number(&self) -> Witnessed {
        let n = self.graph.n();
        if n == 1 {
            return Witnessed {
                value: 1,
                witness: VertexSet::singleton(0),
            };
        }
        if n == 2 || self.is_two_connected() {
            return Witnessed {
                value: 2,
                witness: VertexSet::from([0, 1]),
            };
        }
        let stats = self.tree.end_block_stats();
        let witness: VertexSet = stats
            .end_blocks
            .iter()
            .map(|&b| {
                *self
                    .tree
                    .block(b)
                    .iter()
                    .find(|&&v| !self.tree.is_cut_vertex(v))
                    .expect("an end block has a non-cut vertex")
            })
            .collect();
        Witnessed {
            value: stats.eb,
            witness,
        }
    }

    /// Hull number, equal to the interval number.
    pub fn hull_number(&self) -> Witnessed {
        self.interval_number()
    }

    pub fn geodetic_iteration_number(&self) -> usize {
        geodetic_iteration_number(self.graph)
    }

    pub fn report(&self) -> ConvexityReport {
        let c = self.convexity_number();
        let i = self.interval_number();
        ConvexityReport {
            c: c.value,
            i: i.value,
            h: i.value,
            gin: self.geodetic_iteration_number(),
            max_convex_witness: c.witness,
            min_interval_witness: i.witness,
            trivial: self.graph.n() == 1,
        }
    }

    fn is_two_connected(&self) -> bool {
        self.graph.n() >= 3 && self.tree.cut_vertices().is_empty()
    }
}

fn check_members(g: &Graph, s: &VertexSet) {
    assert!(
        s.bound() <= g.n(),
        "vertex set {s:?} exceeds graph order {}",
        g.n()
    );
}

/// Convexity test: `S` is convex iff `S = V` or every component of `G - S`
/// sees exactly one vertex of `S`. The empty set is convex.
pub fn is_convex(g: &Graph, s: &VertexSet) -> bool {
    check_members(g, s);
    let n = g.n();
    if s.is_empty() || s.len() == n {
        return true;
    }
    let in_s = s.to_mask(n);
    let mut seen = in_s.clone();
    // Component id that last touched each S-vertex.
    let mut stamp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        stack.push(root);
        let mut attachments = 0;
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if in_s[v] {
                    if stamp[v] != root {
                        stamp[v] = root;
                        attachments += 1;
                        if attachments > 1 {
                            return false;
                        }
                    }
                } else if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if attachments != 1 {
            return false;
        }
    }
    true
}

/// Prunes the block-cut tree to `T_S`. Requires `|S| >= 2`.
pub fn compute_t_s(g: &Graph, t: &BlockCutTree, s: &VertexSet) -> Result<PrunedTree, ConvexityError> {
    check_members(g, s);
    assert_eq!(g.n(), t.vertex_count(), "tree does not belong to graph");
    if s.len() < 2 {
        return Err(ConvexityError::SetTooSmall(s.len()));
    }
    Ok(prune(t, s))
}

/// Leaf-pruning fixpoint. A leaf block whose `S`-vertices are all its
/// attaching cut vertex is removed; a cut vertex left with one block is
/// removed with it, which may expose a new leaf. Each block becomes a leaf at
/// most once, so the whole pass is linear in the tree size.
fn prune(t: &BlockCutTree, s: &VertexSet) -> PrunedTree {
    let n = t.vertex_count();
    let blocks = t.block_count();
    let in_s = s.to_mask(n);

    let mut s_count = vec![0usize; blocks];
    for v in s.iter() {
        for &b in t.blocks_of(v) {
            s_count[b] += 1;
        }
    }
    let mut block_degree: Vec<usize> = (0..blocks).map(|b| t.block_cut_vertices(b).len()).collect();
    let mut cut_degree: Vec<usize> = (0..n).map(|v| t.blocks_of(v).len()).collect();
    let mut block_alive = vec![true; blocks];
    let mut cut_alive: Vec<bool> = (0..n).map(|v| t.is_cut_vertex(v)).collect();

    let mut leaves: Vec<usize> = (0..blocks).filter(|&b| block_degree[b] == 1).collect();
    while let Some(b) = leaves.pop() {
        // A queued leaf may since have become the last node of the tree.
        if block_degree[b] != 1 {
            continue;
        }
        let z = *t
            .block_cut_vertices(b)
            .iter()
            .find(|&&z| cut_alive[z])
            .expect("leaf block keeps one attaching cut vertex");
        if s_count[b] > usize::from(in_s[z]) {
            continue;
        }
        block_alive[b] = false;
        cut_degree[z] -= 1;
        if cut_degree[z] == 1 {
            cut_alive[z] = false;
            let rest = *t
                .blocks_of(z)
                .iter()
                .find(|&&c| block_alive[c])
                .expect("cut vertex keeps one block");
            block_degree[rest] -= 1;
            if block_degree[rest] == 1 {
                leaves.push(rest);
            }
        }
    }
    PrunedTree {
        block_alive,
        cut_alive,
    }
}

/// `I(S)`: `S` itself when `|S| <= 1`, else the union of the blocks of `T_S`.
pub fn interval(g: &Graph, s: &VertexSet) -> VertexSet {
    AllPath::new(g).interval(s)
}

/// `H(S)`, equal to `I(S)`.
pub fn hull(g: &Graph, s: &VertexSet) -> VertexSet {
    interval(g, s)
}

pub fn convexity_number(g: &Graph) -> Witnessed {
    AllPath::new(g).convexity_number()
}

pub fn interval_number(g: &Graph) -> Witnessed {
    AllPath::new(g).interval_number()
}

pub fn hull_number(g: &Graph) -> Witnessed {
    AllPath::new(g).hull_number()
}

/// Zero when `n <= 2` (every set is its own interval), one otherwise: any
/// path `u - x - w` makes `{u, w}` grow.
pub fn geodetic_iteration_number(g: &Graph) -> usize {
    usize::from(g.n() > 2)
}

pub fn report(g: &Graph) -> ConvexityReport {
    AllPath::new(g).report()
}
