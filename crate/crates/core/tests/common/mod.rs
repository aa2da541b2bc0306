#![allow(dead_code)]

use std::collections::BTreeSet;

use allpath::{Graph, VertexSet};
use proptest::prelude::*;

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

/// Components of `G - s` by union-find over the surviving edges.
pub fn components_uf(g: &Graph, s: &VertexSet) -> BTreeSet<VertexSet> {
    let n = g.n();
    let mut uf = UnionFind::new(n);
    for (u, v) in g.edges() {
        if !s.contains(u) && !s.contains(v) {
            uf.union(u, v);
        }
    }
    let mut groups = vec![Vec::new(); n];
    for v in (0..n).filter(|&v| !s.contains(v)) {
        groups[uf.find(v)].push(v);
    }
    groups
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(VertexSet::from_iter)
        .collect()
}

/// Blocks by brute force: edges `xa` and `xb` share a block iff `a` and `b`
/// stay connected in `G - x`; blocks are the classes of the closure.
pub fn reference_blocks(g: &Graph) -> BTreeSet<VertexSet> {
    let n = g.n();
    if g.m() == 0 {
        return BTreeSet::from([VertexSet::full(n)]);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let id = |u: usize, v: usize| {
        let key = (u.min(v), u.max(v));
        edges.iter().position(|&e| e == key).unwrap()
    };
    let mut uf = UnionFind::new(edges.len());
    for x in 0..n {
        let without_x = components_uf(g, &VertexSet::singleton(x));
        let nbrs = g.neighbors(x);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if without_x.iter().any(|c| c.contains(a) && c.contains(b)) {
                    uf.union(id(x, a), id(x, b));
                }
            }
        }
    }
    let mut classes = vec![BTreeSet::new(); edges.len()];
    for (k, &(u, v)) in edges.iter().enumerate() {
        let r = uf.find(k);
        classes[r].insert(u);
        classes[r].insert(v);
    }
    classes
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(VertexSet::from_iter)
        .collect()
}

/// Vertices whose deletion leaves at least two components.
pub fn articulation_bf(g: &Graph) -> VertexSet {
    (0..g.n())
        .filter(|&v| components_uf(g, &VertexSet::singleton(v)).len() >= 2)
        .collect()
}

/// Random connected graph on `1..=max_n` vertices: random recursive tree plus
/// a random subset of extra pairs.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                parents,
                proptest::collection::vec(prop::bool::weighted(0.25), pairs),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: BTreeSet<(usize, usize)> =
                parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] {
                        edges.insert((u, v));
                    }
                    k += 1;
                }
            }
            let edges: Vec<_> = edges.into_iter().collect();
            Graph::from_edges(n, &edges).unwrap()
        })
}

/// A graph paired with a random vertex subset given as a bitmask.
pub fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 0..1u64 << n).prop_map(move |(g, bits)| (g, VertexSet::from_bits(bits, n)))
    })
}

pub fn labels(g: &Graph, s: &VertexSet) -> Vec<String> {
    let mut out: Vec<String> = g.set_labels(s).map(str::to_string).collect();
    out.sort();
    out
}
