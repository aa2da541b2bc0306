//! Biconnected components, cut vertices and the block-cut tree.
//!
//! The tree is bipartite: one node per block and one node per cut vertex, with
//! a block adjacent to every cut vertex it contains. All lists are stored in
//! flat compressed rows so the decomposition of a million-vertex graph stays
//! a handful of allocations.

use std::fmt::Write as _;

use crate::graph::Graph;

const UNSET: u32 = u32::MAX;

/// Compressed rows of `usize`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Rows {
    offsets: Vec<usize>,
    items: Vec<usize>,
}

impl Rows {
    fn from_counts(counts: &[usize]) -> (Self, Vec<usize>) {
        let mut offsets = Vec::with_capacity(counts.len() + 1);
        offsets.push(0);
        for c in counts {
            offsets.push(offsets.last().unwrap() + c);
        }
        let fill = offsets[..counts.len()].to_vec();
        let items = vec![0; *offsets.last().unwrap()];
        (Self { offsets, items }, fill)
    }

    fn row(&self, i: usize) -> &[usize] {
        &self.items[self.offsets[i]..self.offsets[i + 1]]
    }

    fn len(&self) -> usize {
        self.offsets.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    n: usize,
    blocks: Rows,
    block_cuts: Rows,
    membership: Rows,
    cut_vertices: Vec<usize>,
}

/// Leaf blocks of the block-cut tree and their sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndBlockStats {
    /// Block indices, ascending.
    pub end_blocks: Vec<usize>,
    /// Minimum end-block size.
    pub b: usize,
    /// Number of end blocks.
    pub eb: usize,
}

/// Node of the block-cut tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeNode {
    Block(usize),
    Cut(usize),
}

impl BlockCutTree {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Vertices of block `b`, ascending.
    pub fn block(&self, b: usize) -> &[usize] {
        self.blocks.row(b)
    }

    pub fn blocks(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        (0..self.block_count()).map(|b| self.block(b))
    }

    /// Cut vertices contained in block `b`: its neighbors in the tree.
    pub fn block_cut_vertices(&self, b: usize) -> &[usize] {
        self.block_cuts.row(b)
    }

    /// Blocks containing vertex `v`, ascending.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        self.membership.row(v)
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.blocks_of(v).len() >= 2
    }

    /// Cut vertices, ascending.
    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    pub fn node_count(&self) -> usize {
        self.block_count() + self.cut_vertices.len()
    }

    /// Tree edges as (block, cut vertex) pairs.
    pub fn tree_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.block_count()).flat_map(move |b| self.block_cut_vertices(b).iter().map(move |&z| (b, z)))
    }

    pub fn tree_neighbors(&self, node: TreeNode) -> Vec<TreeNode> {
        match node {
            TreeNode::Block(b) => self
                .block_cut_vertices(b)
                .iter()
                .map(|&z| TreeNode::Cut(z))
                .collect(),
            TreeNode::Cut(z) => self.blocks_of(z).iter().map(|&b| TreeNode::Block(b)).collect(),
        }
    }

    /// Leaf blocks of the tree. A tree with a single block reports that block
    /// with `eb = 1` and `b = n`.
    pub fn end_block_stats(&self) -> EndBlockStats {
        if self.block_count() == 1 {
            return EndBlockStats {
                end_blocks: vec![0],
                b: self.n,
                eb: 1,
            };
        }
        let end_blocks: Vec<usize> = (0..self.block_count())
            .filter(|&b| self.block_cut_vertices(b).len() == 1)
            .collect();
        let b = end_blocks.iter().map(|&j| self.block(j).len()).min().unwrap_or(0);
        EndBlockStats {
            eb: end_blocks.len(),
            end_blocks,
            b,
        }
    }

    /// Graphviz rendering: blocks as boxes, cut vertices as circles.
    pub fn to_dot(&self, g: &Graph) -> String {
        let mut out = String::from("graph block_cut_tree {\n");
        for b in 0..self.block_count() {
            let members: Vec<&str> = self.block(b).iter().map(|&v| g.label(v)).collect();
            let _ = writeln!(
                out,
                "  B{b} [shape=box, label={}];",
                dot_quote(&format!("B{b}: {}", members.join(" ")))
            );
        }
        for &z in &self.cut_vertices {
            let _ = writeln!(out, "  Z{z} [shape=circle, label={}];", dot_quote(g.label(z)));
        }
        for (b, z) in self.tree_edges() {
            let _ = writeln!(out, "  B{b} -- Z{z};");
        }
        out.push_str("}\n");
        out
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Computes the block-cut tree in `O(n + m)` with an iterative depth-first
/// search (Hopcroft-Tarjan low points).
///
/// The search starts at vertex 0 and scans neighbors in ascending order.
/// Blocks are ordered by the discovery index of their shallowest vertex,
/// ties broken by the discovery index of the child through which the block
/// was entered.
pub fn decompose(g: &Graph) -> BlockCutTree {
    let n = g.n();
    // Per-vertex DFS state kept together so a visit touches one cache line.
    #[derive(Clone, Copy)]
    struct Slot {
        disc: u32,
        low: u32,
        parent: u32,
        cursor: u32,
    }
    assert!(n < UNSET as usize, "graph too large for 32-bit vertex indices");
    let mut st = vec![
        Slot {
            disc: UNSET,
            low: 0,
            parent: UNSET,
            cursor: 0,
        };
        n
    ];
    let mut call = Vec::with_capacity(n);
    let mut pending = Vec::with_capacity(n);

    // (sort key, flat member range) per block, members in `found`.
    let mut found: Vec<usize> = Vec::with_capacity(n + g.m());
    let mut spans: Vec<((usize, usize), usize, usize)> = Vec::new();

    let mut timer = 1;
    st[0].disc = 0;
    st[0].low = 0;
    call.push(0);
    pending.push(0);
    while let Some(&u) = call.last() {
        let adj = g.neighbors(u);
        let su = st[u];
        if (su.cursor as usize) < adj.len() {
            let v = adj[su.cursor as usize];
            st[u].cursor += 1;
            if st[v].disc == UNSET {
                st[v] = Slot {
                    disc: timer,
                    low: timer,
                    parent: u as u32,
                    cursor: 0,
                };
                timer += 1;
                call.push(v);
                pending.push(v);
            } else if v as u32 != su.parent {
                st[u].low = su.low.min(st[v].disc);
            }
            continue;
        }
        call.pop();
        let Some(&p) = call.last() else { break };
        st[p].low = st[p].low.min(su.low);
        if su.low >= st[p].disc {
            let start = found.len();
            loop {
                let w = pending.pop().expect("child is on the pending stack");
                found.push(w);
                if w == u {
                    break;
                }
            }
            found.push(p);
            found[start..].sort_unstable();
            spans.push(((st[p].disc as usize, su.disc as usize), start, found.len()));
        }
    }
    if n == 1 {
        found.push(0);
        spans.push(((0, 0), 0, 1));
    }
    spans.sort_unstable_by_key(|&(key, _, _)| key);

    let sizes: Vec<usize> = spans.iter().map(|&(_, a, z)| z - a).collect();
    let (mut blocks, mut fill) = Rows::from_counts(&sizes);
    let mut member_count = vec![0usize; n];
    for (b, &(_, a, z)) in spans.iter().enumerate() {
        for &v in &found[a..z] {
            blocks.items[fill[b]] = v;
            fill[b] += 1;
            member_count[v] += 1;
        }
    }

    let (mut membership, mut fill) = Rows::from_counts(&member_count);
    for b in 0..blocks.len() {
        for &v in blocks.row(b) {
            membership.items[fill[v]] = b;
            fill[v] += 1;
        }
    }

    let cut_counts: Vec<usize> = (0..blocks.len())
        .map(|b| blocks.row(b).iter().filter(|&&v| member_count[v] >= 2).count())
        .collect();
    let (mut block_cuts, mut fill) = Rows::from_counts(&cut_counts);
    for (b, slot) in fill.iter_mut().enumerate() {
        for &v in blocks.row(b) {
            if member_count[v] >= 2 {
                block_cuts.items[*slot] = v;
                *slot += 1;
            }
        }
    }

    let cut_vertices = (0..n).filter(|&v| member_count[v] >= 2).collect();
    BlockCutTree {
        n,
        blocks,
        block_cuts,
        membership,
        cut_vertices,
    }
}

/// `EndBlockStats` of `decompose(g)`.
pub fn end_block_stats(t: &BlockCutTree) -> EndBlockStats {
    t.end_block_stats()
}

/// True when `g` has at least three vertices and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && decompose(g).cut_vertices().is_empty()
}
